from fdhull.geometry import Direction, Point
from fdhull.oracle import OracleSet


class Oracle(OracleSet):
    """Brute-force reference implementation. Keep n at or below 2^14."""

    def __init__(self, parameters: dict | None = None, *args, **kwargs) -> None:
        super().__init__()
        self.name = "Oracle"
        self.parameters = parameters or {}

    def contains(self, q: Point) -> bool:
        return self.oracle_contains(q)

    def extreme(self, direction: Direction) -> Point | None:
        return self.oracle_extreme(direction)

    def materialize_hull(self):
        return self.oracle_hull()

    def hull_size(self) -> int:
        upper, lower = self.oracle_hull()
        return len(set(upper) | set(lower))

    def counters(self) -> dict[str, int]:
        return {"events": len(self.events)}
