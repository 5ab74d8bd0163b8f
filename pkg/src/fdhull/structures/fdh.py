from fdhull.buckets import DEFAULT_BASE, BucketArray
from fdhull.errors import InvalidDirection
from fdhull.geometry import Chain, Direction, Point, check_point, mirror
from fdhull.hulltree import Counters


class Fdh:
    """Fully dynamic convex hull.

    Two bucket arrays hold the upper and lower hulls. The lower array stores
    mirrored points, so its max-y representative per x is the original
    min-y point and every lower query is an upper query on mirrored input.

    Settings
    --------
    base: capacity of the smallest bucket (a power of two). The capacity of
    bucket i is base * 2^i.
    """

    def __init__(self, parameters: dict | None = None, *args, **kwargs) -> None:
        self.name = "Fully Dynamic Hull"
        self.parameters = parameters or {}
        self.base = int(self.parameters.get("base", DEFAULT_BASE))

        self.upper_counters = Counters()
        self.lower_counters = Counters()
        self.upper = BucketArray(self.base, self.upper_counters)
        self.lower = BucketArray(self.base, self.lower_counters)

    def __len__(self) -> int:
        """Number of distinct live x-coordinates."""
        return len(self.upper.dedup)

    def insert(self, p: Point):
        p = check_point(Point(*p))
        self.upper.insert(p)
        self.lower.insert(mirror(p))

    def delete(self, p: Point):
        p = Point(*p)
        self.upper.delete(p)
        self.lower.delete(mirror(p))

    def contains(self, q: Point) -> bool:
        """True iff q lies in the closed convex hull of the live points."""
        q = Point(*q)
        return self.upper.contains_below(q) and self.lower.contains_below(mirror(q))

    def extreme(self, direction: Direction) -> Point | None:
        """A live hull point maximising dx * x + dy * y.

        Returns None when the structure is empty.
        """
        dx, dy = direction
        if dx == 0 and dy == 0:
            raise InvalidDirection("direction must be non-zero")
        if len(self) == 0:
            return None

        if dy > 0:
            return self.upper.extreme(direction)
        if dy < 0:
            return mirror(self.lower.extreme((dx, -dy)))
        return self.upper.rightmost() if dx > 0 else self.upper.leftmost()

    def materialize_hull(self) -> tuple[Chain, Chain]:
        upper = self.upper.materialize()
        lower = [mirror(p) for p in self.lower.materialize()]
        return upper, lower

    def hull_size(self) -> int:
        upper, lower = self.materialize_hull()
        return len(set(upper) | set(lower))

    def counters(self) -> dict[str, int]:
        counters = {}
        for prefix, source in (
            ("upper", self.upper_counters),
            ("lower", self.lower_counters),
        ):
            for key, value in source.as_dict().items():
                counters[f"{prefix}_{key}"] = value
        for key in ("merges", "moves", "repair_steps", "build_touches"):
            counters[key] = counters[f"upper_{key}"] + counters[f"lower_{key}"]
        return counters
