from bisect import bisect_left
from operator import attrgetter
from sortedcontainers import SortedList
from fdhull.errors import InvalidDirection, UnknownPoint
from fdhull.geometry import (
    Chain,
    Direction,
    Point,
    check_point,
    lower_hull_sorted,
    point_above_chain,
    point_below_chain,
    score,
    upper_hull_sorted,
)
from fdhull.utilities import get_logger


_get_x = attrgetter("x")


def _best_on_chain(chain: Chain, direction: Direction) -> Point:
    # Scores along a hull chain rise, then fall
    i = bisect_left(
        range(len(chain) - 1),
        True,
        key=lambda i: score(chain[i + 1], direction) <= score(chain[i], direction),
    )
    return chain[i]


class Semistatic:
    """Sorted point store with flat hull vectors.

    An update first checks in logarithmic time whether it can change the
    hull. Only then are both chains recomputed by one linear scan over the
    sorted points.
    """

    def __init__(self, parameters: dict | None = None, *args, **kwargs) -> None:
        self.name = "Semi-Static"
        self.parameters = parameters or {}
        self.points = SortedList()
        self.upper: Chain = []
        self.lower: Chain = []

        self.rebuilds = 0
        self.updates = 0
        self.version = 0
        self.logger = get_logger("fdhull.semistatic")

    def __len__(self) -> int:
        return len(self.points)

    def _rebuild(self):
        highest: list[Point] = []
        lowest: list[Point] = []
        for p in self.points:
            if highest and highest[-1].x == p.x:
                # Points are sorted by (x, y)
                highest[-1] = p
            else:
                highest.append(p)
                lowest.append(p)
        self.upper = upper_hull_sorted(highest)
        self.lower = lower_hull_sorted(lowest)
        self.rebuilds += 1
        self.version += 1
        self.logger.debug(
            f"Rebuild {self.rebuilds}: {len(self.points)} points, "
            + f"{len(self.upper)} upper and {len(self.lower)} lower vertices."
        )

    def _is_vertex(self, p: Point) -> bool:
        for chain in (self.upper, self.lower):
            i = bisect_left(chain, p.x, key=_get_x)
            if i < len(chain) and chain[i] == p:
                return True
        return False

    def insert(self, p: Point):
        p = check_point(Point(*p))
        self.updates += 1
        inside = self.contains(p)
        self.points.add(p)
        if not inside:
            self._rebuild()

    def delete(self, p: Point):
        p = Point(*p)
        if p not in self.points:
            raise UnknownPoint(f"{p} is not stored")
        self.updates += 1
        self.points.remove(p)
        if p not in self.points and self._is_vertex(p):
            self._rebuild()

    def contains(self, q: Point) -> bool:
        q = Point(*q)
        if not self.upper:
            return False
        return point_below_chain(q, self.upper) and point_above_chain(q, self.lower)

    def extreme(self, direction: Direction) -> Point | None:
        dx, dy = direction
        if dx == 0 and dy == 0:
            raise InvalidDirection("direction must be non-zero")
        if not self.upper:
            return None
        if dy > 0:
            return _best_on_chain(self.upper, direction)
        if dy < 0:
            return _best_on_chain(self.lower, direction)
        return self.upper[-1] if dx > 0 else self.upper[0]

    def materialize_hull(self) -> tuple[Chain, Chain]:
        return list(self.upper), list(self.lower)

    def hull_size(self) -> int:
        return len(set(self.upper) | set(self.lower))

    def counters(self) -> dict[str, int]:
        return {"rebuilds": self.rebuilds, "updates": self.updates}
