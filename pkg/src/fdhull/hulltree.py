"""Deletion-only upper hull trees.

The tree is a complete binary tree over the x-sorted input, stored in flat
lists with implicit indexing (root 1, children 2v and 2v + 1, leaf i at
size + i). It is never rotated or rebalanced. Every internal node keeps the
bridge between the upper hulls of its two children.

Hull vertices are linked through one pair of prev/next lists indexed by leaf.
Joining node v links its bridge endpoints and saves the overwritten child
links in lsave/rsave, so the points cut from the parent's hull stay linked as
the E segment of the child that owns them. Splitting v restores the saved
links and gives back both child hulls in O(1). A deletion splits the
root-to-leaf path top-down and joins it again bottom-up, restarting each
bridge walk next to the gap left by the deleted point.
"""

from dataclasses import dataclass
from typing import Sequence
from fdhull.errors import AlreadyDeleted, EmptyInput, QueryInsideHull, UnknownPoint
from fdhull.geometry import Chain, Direction, Point, check_sorted, mirror


NONE = -1
_LEFT, _RIGHT = 0, 1


@dataclass
class Counters:
    """Operation counters used to check the amortised cost bounds."""

    build_touches: int = 0
    repair_steps: int = 0
    query_visits: int = 0
    merges: int = 0
    moves: int = 0

    def as_dict(self) -> dict[str, int]:
        return dict(self.__dict__)


class UpperHullTree:
    """Deletion-only CH-Tree over points with distinct x."""

    def __init__(self, points: Sequence[Point], counters: Counters | None = None):
        if len(points) == 0:
            raise EmptyInput("cannot build a hull tree without points")
        check_sorted(points)

        self.counters = counters if counters is not None else Counters()
        self.last_visits = 0

        n = len(points)
        size = 1 << (n - 1).bit_length()
        self.n0 = n
        self.size = size

        # Leaf storage
        self._x = [p.x for p in points]
        self._y = [p.y for p in points]
        self._alive = [True] * n
        self._index = {p.x: i for i, p in enumerate(points)}
        self._prev = [NONE] * n
        self._next = [NONE] * n

        # Node storage, index 0 unused
        self._bl = [NONE] * (2 * size)
        self._br = [NONE] * (2 * size)
        self._lsave = [NONE] * (2 * size)
        self._rsave = [NONE] * (2 * size)
        self._head = [NONE] * (2 * size)
        self._tail = [NONE] * (2 * size)
        self._count = [0] * (2 * size)
        for i in range(n):
            self._head[size + i] = self._tail[size + i] = i
            self._count[size + i] = 1

        # Bottom-up, one depth at a time
        touches = 0
        for v in range(size - 1, 0, -1):
            touches += 1 + self._join(v, NONE, NONE)
        self.counters.build_touches += touches

    @classmethod
    def build(
        cls, points: Sequence[Point], counters: Counters | None = None
    ) -> "UpperHullTree":
        return cls(points, counters)

    def __len__(self) -> int:
        return self._count[1]

    @property
    def live(self) -> int:
        return self._count[1]

    @property
    def depth(self) -> int:
        return self.size.bit_length()

    def point(self, i: int) -> Point:
        return Point(self._x[i], self._y[i])

    def live_points(self) -> list[Point]:
        """Live points in increasing x."""
        return [Point(x, y) for x, y, a in zip(self._x, self._y, self._alive) if a]

    def __contains__(self, p: Point) -> bool:
        i = self._index.get(p.x)
        return i is not None and self._alive[i] and self._y[i] == p.y

    def _cross(self, i: int, j: int, k: int) -> int:
        x, y = self._x, self._y
        return (x[j] - x[i]) * (y[k] - y[i]) - (y[j] - y[i]) * (x[k] - x[i])

    def _find_bridge(self, a: int, b: int) -> tuple[int, int, int]:
        """Walk a along the left hull and b along the right hull to the bridge.

        Collinear candidates push the endpoints outwards, so the bridge is as
        long as possible and no collinear vertex survives next to it.
        Returns the bridge endpoints and the number of walk steps.
        """
        nxt, prv, cross = self._next, self._prev, self._cross
        steps = 0
        while True:
            while True:
                c = nxt[a]
                if c != NONE and cross(a, b, c) > 0:
                    a = c
                    steps += 1
                    continue
                c = prv[a]
                if c != NONE and cross(a, b, c) >= 0:
                    a = c
                    steps += 1
                    continue
                break

            moved = False
            while True:
                c = prv[b]
                if c != NONE and cross(a, b, c) > 0:
                    b = c
                    steps += 1
                    moved = True
                    continue
                c = nxt[b]
                if c != NONE and cross(a, b, c) >= 0:
                    b = c
                    steps += 1
                    moved = True
                    continue
                break

            if not moved:
                return a, b, steps

    def _join(self, v: int, a: int, b: int) -> int:
        """Recompute node v from its children, starting the walk at (a, b)."""
        u, w = 2 * v, 2 * v + 1
        count, head, tail = self._count, self._head, self._tail
        count[v] = count[u] + count[w]
        if count[u] == 0 or count[w] == 0:
            # At most one child left, no bridge
            src = w if count[u] == 0 else u
            self._bl[v] = self._br[v] = NONE
            head[v], tail[v] = head[src], tail[src]
            return 0

        if a == NONE:
            a = tail[u]
        if b == NONE:
            b = head[w]
        a, b, steps = self._find_bridge(a, b)

        self._bl[v], self._br[v] = a, b
        self._lsave[v], self._rsave[v] = self._next[a], self._prev[b]
        self._next[a], self._prev[b] = b, a
        head[v], tail[v] = head[u], tail[w]
        return steps

    def _split(self, v: int):
        a = self._bl[v]
        if a != NONE:
            b = self._br[v]
            self._next[a] = self._lsave[v]
            self._prev[b] = self._rsave[v]

    def delete(self, p: Point):
        """Delete a live point, repairing every hull on its leaf-to-root path."""
        i = self._index.get(p.x)
        if i is None or self._y[i] != p.y:
            raise UnknownPoint(f"{p} is not in this hull tree")
        if not self._alive[i]:
            raise AlreadyDeleted(f"{p} has already been deleted")

        leaf = self.size + i
        path = []
        v = leaf >> 1
        while v:
            path.append(v)
            v >>= 1
        path.reverse()

        # Top-down: split every node and remember where the gap will be
        hints = []
        for v in path:
            self._split(v)
            if self._bl[v] == i:
                hints.append((_LEFT, self._prev[i]))
            elif self._br[v] == i:
                hints.append((_RIGHT, self._next[i]))
            else:
                hints.append(None)

        self._alive[i] = False
        self._count[leaf] = 0
        self._head[leaf] = self._tail[leaf] = NONE
        self._prev[i] = self._next[i] = NONE

        # Bottom-up: rejoin, walking from the old bridge or the gap's neighbour
        steps = 0
        for v, hint in zip(reversed(path), reversed(hints)):
            if hint is None:
                a, b = self._bl[v], self._br[v]
            elif hint[0] == _LEFT:
                # Restart next to the gap left by the deleted endpoint
                a = hint[1] if hint[1] != NONE else self._head[2 * v]
                b = self._br[v]
            else:
                a = self._bl[v]
                b = hint[1] if hint[1] != NONE else self._tail[2 * v + 1]
            steps += 1 + self._join(v, a, b)
        self.counters.repair_steps += steps

    def _descend_below(self, qx: int, qy: int) -> tuple[bool, int]:
        if self._count[1] == 0:
            return False, 0
        bl, br, count, x, y = self._bl, self._br, self._count, self._x, self._y
        visits = 1
        v = 1
        while v < self.size:
            a = bl[v]
            if a == NONE:
                v = 2 * v if count[2 * v] else 2 * v + 1
            else:
                b = br[v]
                if qx < x[a]:
                    v = 2 * v
                elif qx > x[b]:
                    v = 2 * v + 1
                else:
                    cross = (x[b] - x[a]) * (qy - y[a]) - (y[b] - y[a]) * (qx - x[a])
                    return cross <= 0, visits
            visits += 1
        i = v - self.size
        return x[i] == qx and qy <= y[i], visits

    def contains_below_upper(self, q: Point) -> bool:
        """True iff q lies on or below the upper hull of the live points."""
        below, visits = self._descend_below(q.x, q.y)
        self.last_visits = visits
        self.counters.query_visits += visits
        return below

    def _left_contact(self, qx: int, qy: int) -> tuple[int, bool, int]:
        """Left contact descent.

        Also reports whether the leaf it ends on is a vertex of the root hull:
        a leaf is on the hull of every node on its path iff its x is at most
        the left bridge end where the path turns left and at least the right
        bridge end where it turns right.
        """
        bl, br, count, x, y = self._bl, self._br, self._count, self._x, self._y
        lo, hi = None, None
        visits = 1
        v = 1
        while v < self.size:
            a = bl[v]
            if a == NONE:
                v = 2 * v if count[2 * v] else 2 * v + 1
            else:
                b = br[v]
                if x[b] >= qx or (
                    (qx - x[a]) * (y[b] - y[a]) - (qy - y[a]) * (x[b] - x[a]) <= 0
                ):
                    v = 2 * v
                    hi = x[a] if hi is None else min(hi, x[a])
                else:
                    # b strictly above the line from a to q
                    v = 2 * v + 1
                    lo = x[b] if lo is None else max(lo, x[b])
            visits += 1
        i = v - self.size
        on_hull = (lo is None or x[i] >= lo) and (hi is None or x[i] <= hi)
        return (i if x[i] < qx else NONE), on_hull, visits

    def _sees_left_tangent(self, i: int, qx: int, qy: int) -> bool:
        """True iff root hull vertex i, left of q, certifies q strictly above.

        Needs a hull vertex on both sides of q. Every vertex is then on or
        below the line through i and q iff both hull neighbours of i are,
        and q is off the hull unless the right neighbour is on that line at
        or past q.
        """
        x, y = self._x, self._y
        ix, iy = x[i], y[i]
        p, n = self._prev[i], self._next[i]
        if p != NONE and (qx - ix) * (y[p] - iy) - (qy - iy) * (x[p] - ix) > 0:
            return False
        side = (qx - ix) * (y[n] - iy) - (qy - iy) * (x[n] - ix)
        return side < 0 or (side == 0 and x[n] < qx)

    def _right_contact(self, qx: int, qy: int) -> tuple[int, int]:
        bl, br, count, x, y = self._bl, self._br, self._count, self._x, self._y
        visits = 1
        v = 1
        while v < self.size:
            a = bl[v]
            if a == NONE:
                v = 2 * v if count[2 * v] else 2 * v + 1
            else:
                b = br[v]
                if x[a] <= qx:
                    v = 2 * v + 1
                elif (x[b] - qx) * (y[a] - qy) - (y[b] - qy) * (x[a] - qx) > 0:
                    # a strictly above the line from q to b
                    v = 2 * v
                else:
                    v = 2 * v + 1
            visits += 1
        i = v - self.size
        return (i if x[i] > qx else NONE), visits

    def upper_contacts(self, q: Point) -> tuple[Point, Point] | None:
        """Tangent contacts of q, or None when q is on or below the upper hull.

        The left contact descent doubles as the containment test, so the
        call costs at most two bridge descents.
        """
        if self._count[1] == 0:
            raise EmptyInput("no live points")
        qx, qy = q
        x, y = self._x, self._y
        head, tail = self._head[1], self._tail[1]

        left, on_hull, visits = NONE, False, 0
        if qx > x[head]:
            left, on_hull, visits = self._left_contact(qx, qy)
        if qx < x[head] or qx > x[tail]:
            outside = True
        elif qx == x[head]:
            outside = qy > y[head]
        elif qx == x[tail]:
            outside = qy > y[tail]
        else:
            outside = left != NONE and on_hull and self._sees_left_tangent(left, qx, qy)

        right = NONE
        if outside and qx < x[tail]:
            right, right_visits = self._right_contact(qx, qy)
            visits += right_visits
        self.last_visits = visits
        self.counters.query_visits += visits
        if not outside:
            return None

        if left == NONE and right == NONE:
            only = self.point(self._head[1])
            return only, only
        if left == NONE:
            return self.point(right), self.point(right)
        if right == NONE:
            return self.point(left), self.point(left)
        return self.point(left), self.point(right)

    def tangents_upper(self, q: Point) -> tuple[Point, Point]:
        """Neighbours of q on the upper hull of the live points plus q.

        Follows the same conventions as geometry.chain_tangents, but never
        materialises the hull.
        """
        contacts = self.upper_contacts(q)
        if contacts is None:
            raise QueryInsideHull(f"{q} is on or below the upper hull")
        return contacts

    def extreme_point_upper(self, direction: Direction) -> Point:
        """Live point maximising dx * x + dy * y, for dy > 0."""
        if self._count[1] == 0:
            raise EmptyInput("no live points")
        dx, dy = direction
        bl, br, count, x, y = self._bl, self._br, self._count, self._x, self._y
        visits = 1
        v = 1
        while v < self.size:
            a = bl[v]
            if a == NONE:
                v = 2 * v if count[2 * v] else 2 * v + 1
            else:
                b = br[v]
                if dx * x[b] + dy * y[b] > dx * x[a] + dy * y[a]:
                    v = 2 * v + 1
                else:
                    v = 2 * v
            visits += 1
        self.last_visits = visits
        self.counters.query_visits += visits
        return self.point(v - self.size)

    def leftmost(self) -> Point:
        if self._count[1] == 0:
            raise EmptyInput("no live points")
        return self.point(self._head[1])

    def rightmost(self) -> Point:
        if self._count[1] == 0:
            raise EmptyInput("no live points")
        return self.point(self._tail[1])

    def materialize_upper(self) -> Chain:
        """Upper hull of the live points, read from the root's linked list."""
        chain = []
        i = self._head[1]
        while i != NONE:
            chain.append(self.point(i))
            i = self._next[i]
        return chain


class HullTree:
    """Upper and lower deletion-only hulls over one point set.

    The lower hull is kept as the upper hull of the points mirrored in the
    x-axis, so both sides share one implementation.
    """

    def __init__(self, points: Sequence[Point], counters: Counters | None = None):
        self.counters = counters if counters is not None else Counters()
        self.upper = UpperHullTree(points, self.counters)
        self.lower = UpperHullTree([mirror(p) for p in points], self.counters)

    @classmethod
    def build(
        cls, points: Sequence[Point], counters: Counters | None = None
    ) -> "HullTree":
        return cls(points, counters)

    def __len__(self) -> int:
        return len(self.upper)

    def __contains__(self, p: Point) -> bool:
        return p in self.upper

    def live_points(self) -> list[Point]:
        return self.upper.live_points()

    def delete(self, p: Point):
        self.upper.delete(p)
        self.lower.delete(mirror(p))

    def contains_below_upper(self, q: Point) -> bool:
        return self.upper.contains_below_upper(q)

    def contains_above_lower(self, q: Point) -> bool:
        return self.lower.contains_below_upper(mirror(q))

    def contains(self, q: Point) -> bool:
        return self.contains_below_upper(q) and self.contains_above_lower(q)

    def tangents_upper(self, q: Point) -> tuple[Point, Point]:
        return self.upper.tangents_upper(q)

    def tangents_lower(self, q: Point) -> tuple[Point, Point]:
        a, b = self.lower.tangents_upper(mirror(q))
        return mirror(a), mirror(b)

    def extreme_point_upper(self, direction: Direction) -> Point:
        return self.upper.extreme_point_upper(direction)

    def extreme_point_lower(self, direction: Direction) -> Point:
        """Live point maximising dx * x + dy * y, for dy < 0."""
        dx, dy = direction
        return mirror(self.lower.extreme_point_upper((dx, -dy)))

    def materialize_upper(self) -> Chain:
        return self.upper.materialize_upper()

    def materialize_lower(self) -> Chain:
        return [mirror(p) for p in self.lower.materialize_upper()]
