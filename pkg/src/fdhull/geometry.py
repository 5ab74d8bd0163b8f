"""Exact planar primitives on integer grid points.

All predicates work on Python integers, so orientation determinants are
computed exactly. Chains are plain lists of points sorted by strictly
increasing x. Upper chains turn clockwise at every interior vertex and lower
chains turn counter-clockwise; collinear interior vertices are never kept.
"""

from bisect import bisect_left, bisect_right
from operator import attrgetter
from typing import NamedTuple, Sequence
from fdhull.errors import (
    CoordinateOutOfRange,
    DuplicateX,
    EmptyInput,
    NotSorted,
    QueryInsideHull,
)


# Ingest bound on the absolute value of any coordinate
COORD_BOUND = 2**40

_get_x = attrgetter("x")


class Point(NamedTuple):
    x: int
    y: int


Chain = list[Point]
Direction = tuple[int, int]


def check_point(p: Point) -> Point:
    """Raise CoordinateOutOfRange unless p lies within the ingest bound."""
    if abs(p.x) > COORD_BOUND or abs(p.y) > COORD_BOUND:
        raise CoordinateOutOfRange(f"{p} exceeds the ingest bound of 2^40")
    return p


def mirror(p: Point) -> Point:
    """Reflect a point in the x-axis, turning lower hulls into upper hulls."""
    return Point(p.x, -p.y)


def score(p: Point, direction: Direction) -> int:
    return direction[0] * p.x + direction[1] * p.y


def orientation(a: Point, b: Point, c: Point) -> int:
    """Sign of (b - a) x (c - a): +1 counter-clockwise, -1 clockwise, 0 collinear."""
    cross = (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x)
    return (cross > 0) - (cross < 0)


def check_sorted(points: Sequence[Point]):
    for prev, cur in zip(points, points[1:]):
        if cur.x == prev.x:
            raise DuplicateX(f"points {prev} and {cur} share x={cur.x}")
        if cur.x < prev.x:
            raise NotSorted(f"{cur} follows {prev}")


def upper_hull_sorted(points: Sequence[Point]) -> Chain:
    """Upper hull of x-sorted points with distinct x, in one stack pass."""
    check_sorted(points)
    hull: Chain = []
    for p in points:
        while len(hull) > 1 and orientation(hull[-2], hull[-1], p) >= 0:
            hull.pop()
        hull.append(p)
    return hull


def lower_hull_sorted(points: Sequence[Point]) -> Chain:
    """Lower hull of x-sorted points with distinct x, in one stack pass."""
    check_sorted(points)
    hull: Chain = []
    for p in points:
        while len(hull) > 1 and orientation(hull[-2], hull[-1], p) <= 0:
            hull.pop()
        hull.append(p)
    return hull


def is_upper_chain(chain: Sequence[Point]) -> bool:
    """Check strict x-monotonicity and strict convexity of an upper chain."""
    if any(b.x <= a.x for a, b in zip(chain, chain[1:])):
        return False
    return all(
        orientation(a, b, c) < 0 for a, b, c in zip(chain, chain[1:], chain[2:])
    )


def is_lower_chain(chain: Sequence[Point]) -> bool:
    if any(b.x <= a.x for a, b in zip(chain, chain[1:])):
        return False
    return all(
        orientation(a, b, c) > 0 for a, b, c in zip(chain, chain[1:], chain[2:])
    )


def _side_of_chain(q: Point, chain: Sequence[Point]) -> int | None:
    """Orientation of q against the chain edge spanning q.x.

    Returns None when q.x lies outside the chain's x-span. Vertices of the chain
    report 0, as do points on an edge.
    """
    if len(chain) == 0:
        raise EmptyInput("cannot query an empty chain")
    if q.x < chain[0].x or q.x > chain[-1].x:
        return None
    i = bisect_left(chain, q.x, key=_get_x)
    if chain[i].x == q.x:
        return (q.y > chain[i].y) - (q.y < chain[i].y)
    return orientation(chain[i - 1], chain[i], q)


def point_below_chain(q: Point, chain: Sequence[Point]) -> bool:
    """True iff q is on or below the upper chain within its x-span."""
    side = _side_of_chain(q, chain)
    return side is not None and side <= 0


def point_above_chain(q: Point, chain: Sequence[Point]) -> bool:
    """True iff q is on or above the lower chain within its x-span."""
    side = _side_of_chain(q, chain)
    return side is not None and side >= 0


def chain_tangents(q: Point, chain: Sequence[Point]) -> tuple[Point, Point]:
    """Neighbours of q on the upper hull of chain + {q}.

    When q sees the chain from one side only, both returned points are the
    single contact vertex. Collinear contacts resolve to the vertex farthest
    from q, since collinear hull vertices are dropped.
    """
    if point_below_chain(q, chain):
        raise QueryInsideHull(f"{q} is on or below the chain")

    # Candidates strictly left of q are chain[:k], strictly right are chain[j:]
    k = bisect_left(chain, q.x, key=_get_x)
    j = bisect_right(chain, q.x, key=_get_x)

    left = None
    if k > 0:
        # Walk right while the next candidate is strictly above line (c[i], q)
        i = bisect_left(
            range(k - 1),
            True,
            key=lambda i: orientation(chain[i], q, chain[i + 1]) <= 0,
        )
        left = chain[i]

    right = None
    if j < len(chain):
        # Walk left while the previous candidate is strictly above line (q, c[i])
        i = bisect_left(
            range(j + 1, len(chain)),
            True,
            key=lambda i: orientation(q, chain[i], chain[i - 1]) > 0,
        )
        right = chain[j + i]

    if left is None and right is None:
        # Single vertex directly below q
        return chain[k], chain[k]
    if left is None:
        return right, right
    if right is None:
        return left, left
    return left, right
