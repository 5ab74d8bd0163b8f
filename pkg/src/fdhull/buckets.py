from typing import Iterator
from fdhull.dedup import (
    DedupIndex,
    NewRepresentative,
    RemoveRepresentative,
    ReplaceRepresentative,
    Shadowed,
    UnshadowOnly,
)
from fdhull.errors import BucketOverflow, UnknownPoint
from fdhull.geometry import (
    Chain,
    Direction,
    Point,
    point_below_chain,
    score,
    upper_hull_sorted,
)
from fdhull.hulltree import Counters, UpperHullTree
from fdhull.loser_tree import LoserTree
from fdhull.utilities import get_logger


DEFAULT_BASE = 32


def max_y_per_x(points: Iterator[Point]) -> list[Point]:
    """Keep the highest point of every run of equal x in an x-sorted stream."""
    kept: list[Point] = []
    for p in points:
        if kept and kept[-1].x == p.x:
            if p.y > kept[-1].y:
                kept[-1] = p
        else:
            kept.append(p)
    return kept


class BucketArray:
    """Logarithmic method over deletion-only upper hull trees.

    Bucket i holds at most base * 2^i representatives in one UpperHullTree.
    Buckets filled by a merge start at least half full (bucket 0 is exempt)
    and are merged down again once fewer than a quarter of their capacity
    remains live. Only the upper hull is maintained; lower hulls are handled
    by a second array over mirrored points.
    """

    def __init__(self, base: int = DEFAULT_BASE, counters: Counters | None = None):
        if base < 1 or base & (base - 1):
            raise ValueError(f"base must be a power of two, got {base}")
        self.base = base
        self.buckets: list[UpperHullTree | None] = []
        self.dedup = DedupIndex()
        self.counters = counters if counters is not None else Counters()
        self.logger = get_logger("fdhull.buckets")

    def __len__(self) -> int:
        """Number of live representatives."""
        return sum(len(tree) for tree in self.trees())

    def capacity(self, i: int) -> int:
        return self.base << i

    def trees(self) -> list[UpperHullTree]:
        return [tree for tree in self.buckets if tree is not None]

    def insert(self, p: Point):
        effect = self.dedup.insert(p)
        match effect:
            case Shadowed():
                return
            case NewRepresentative(point=new):
                self._insert_representative(new)
            case ReplaceRepresentative(old=old, new=new):
                self._delete_representative(old, self.dedup.locate(old.x))
                self._insert_representative(new)

    def delete(self, p: Point):
        effect = self.dedup.delete(p)
        match effect:
            case UnshadowOnly():
                return
            case RemoveRepresentative(point=old, successor=successor, bucket_id=i):
                self._delete_representative(old, i)
                if successor is not None:
                    # The next highest point at this x takes over
                    self._insert_representative(successor)

    def _insert_representative(self, p: Point):
        # Longest run of non-empty buckets starting at bucket 0
        j = -1
        while j + 1 < len(self.buckets) and self.buckets[j + 1] is not None:
            j += 1
        self.merge(j, pending=p)

    def _delete_representative(self, p: Point, i: int | None):
        tree = self.buckets[i] if i is not None and i < len(self.buckets) else None
        if tree is None:
            raise UnknownPoint(f"{p} has no bucket")
        tree.delete(p)

        if i > 0 and 4 * tree.live < self.capacity(i):
            self.logger.debug(
                f"Bucket {i} underflow ({tree.live}/{self.capacity(i)}), "
                + f"merging buckets 0..{i}."
            )
            self.merge(i - 1)
        elif tree.live == 0:
            self.buckets[i] = None

    def _plan(self, m: int, top: int) -> list[tuple[int, int, int]]:
        """Choose target buckets for m merged points as (bucket, start, stop)."""
        if m == 0:
            return []

        # One bucket that ends up at least half full
        for a in range(top + 1):
            low = 1 if a == 0 else self.capacity(a) // 2
            if low <= m <= self.capacity(a):
                return [(a, 0, m)]

        # Fill the top bucket, the remainder goes to the smallest that fits
        full = self.capacity(top)
        remainder = m - full
        for b in range(top):
            if self.capacity(b) >= remainder:
                return [(top, 0, full), (b, full, m)]
        raise BucketOverflow(f"{m} points do not fit into buckets 0..{top}")

    def merge(self, j: int, pending: Point | None = None) -> dict[Point, int]:
        """Merge buckets 0..j+1 (plus a pending point) and redistribute them.

        Returns the new bucket of every point that was placed.
        """
        top = j + 1
        if len(self.buckets) < top + 1:
            self.buckets.extend([None] * (top + 1 - len(self.buckets)))

        runs = [tree.live_points() for tree in self.buckets[: top + 1] if tree]
        if pending is not None:
            runs.append([pending])
        stream = list(LoserTree(runs))
        for i in range(top + 1):
            self.buckets[i] = None

        m = len(stream)
        plan = self._plan(m, top)
        self.counters.merges += 1
        self.counters.moves += m
        self.logger.debug(f"Merge({j}): {m} points into buckets {plan}.")

        report = {}
        for i, start, stop in plan:
            points = stream[start:stop]
            self.buckets[i] = UpperHullTree(points, self.counters)
            for p in points:
                report[p] = i
                self.dedup.relocate(p.x, i)
        return report

    def contains_below(self, q: Point) -> bool:
        """True iff q lies on or below the upper hull of all representatives."""
        trees = self.trees()
        if not trees:
            return False

        tangents = []
        for tree in trees:
            contacts = tree.upper_contacts(q)
            if contacts is None:
                return True
            tangents.extend(contacts)

        # q is below the whole hull iff it is below the hull of the contacts
        chain = upper_hull_sorted(max_y_per_x(sorted(tangents)))
        return point_below_chain(q, chain)

    def extreme(self, direction: Direction) -> Point | None:
        """Representative maximising the direction's score, for dy > 0."""
        best = None
        for tree in self.trees():
            p = tree.extreme_point_upper(direction)
            if best is None or score(p, direction) > score(best, direction):
                best = p
        return best

    def leftmost(self) -> Point | None:
        return min((tree.leftmost() for tree in self.trees()), default=None)

    def rightmost(self) -> Point | None:
        return max((tree.rightmost() for tree in self.trees()), default=None)

    def materialize(self) -> Chain:
        """Upper hull of all representatives."""
        chains = [tree.materialize_upper() for tree in self.trees()]
        return upper_hull_sorted(max_y_per_x(LoserTree(chains)))
