"""Brute-force reference answers.

Nothing here shares code paths with the hull structures: hulls come from
gift wrapping over the raw live set, and containment and extreme queries are
linear scans.
"""

from collections import Counter
from fdhull.errors import InvalidDirection, UnknownPoint
from fdhull.geometry import Chain, Direction, Point, check_point, score


def _cross(o: Point, a: Point, b: Point) -> int:
    return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x)


def _wrap(points: set[Point], upper: bool) -> Chain:
    sign = 1 if upper else -1
    start = min(points, key=lambda p: (p.x, -sign * p.y))
    chain = [start]
    current = start
    while True:
        best = None
        for p in points:
            if p.x <= current.x:
                continue
            if best is None:
                best = p
                continue
            turn = sign * _cross(current, best, p)
            if turn > 0 or (turn == 0 and p.x > best.x):
                # p lies above (below) the line to best, or further along it
                best = p
        if best is None:
            return chain
        chain.append(best)
        current = best


def oracle_hull(live) -> tuple[Chain, Chain]:
    """Upper and lower hull chains of the given points."""
    points = set(live)
    if not points:
        return [], []
    return _wrap(points, upper=True), _wrap(points, upper=False)


def _within(q: Point, chain: Chain, upper: bool) -> bool:
    if len(chain) == 1:
        p = chain[0]
        return q.x == p.x and (q.y <= p.y if upper else q.y >= p.y)
    for a, b in zip(chain, chain[1:]):
        if a.x <= q.x <= b.x:
            turn = _cross(a, b, q)
            return turn <= 0 if upper else turn >= 0
    return False


class OracleSet:
    """Live multiset of points with an event log."""

    def __init__(self):
        self.events: list[tuple[str, Point]] = []
        self.live = Counter()
        self._hull: tuple[Chain, Chain] | None = None

    def __len__(self) -> int:
        return sum(self.live.values())

    def insert(self, p: Point):
        p = check_point(Point(*p))
        self.events.append(("i", p))
        self.live[p] += 1
        self._hull = None

    def delete(self, p: Point):
        p = Point(*p)
        if self.live[p] == 0:
            raise UnknownPoint(f"{p} is not stored")
        self.events.append(("d", p))
        self.live[p] -= 1
        if self.live[p] == 0:
            del self.live[p]
        self._hull = None

    def replay(self) -> Counter:
        """Rebuild the live multiset from the event log."""
        live = Counter()
        for kind, p in self.events:
            live[p] += 1 if kind == "i" else -1
        return +live

    def oracle_hull(self) -> tuple[Chain, Chain]:
        """Hull of the live points, wrapped again only after an update."""
        if self._hull is None:
            self._hull = oracle_hull(self.live)
        return self._hull

    def oracle_contains(self, q: Point) -> bool:
        q = Point(*q)
        upper, lower = self.oracle_hull()
        if not upper:
            return False
        return _within(q, upper, upper=True) and _within(q, lower, upper=False)

    def oracle_extreme(self, direction: Direction) -> Point | None:
        if direction[0] == 0 and direction[1] == 0:
            raise InvalidDirection("direction must be non-zero")
        return max(self.live, key=lambda p: score(p, direction), default=None)
