"""Point generators, workload schemas and the workload file format.

All randomness comes from SplitMix64, so a (generator, n, seed) triple fixes
the byte-exact workload file on every platform:

    state = (state + 0x9E3779B97F4A7C15) mod 2^64
    z = state
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) mod 2^64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) mod 2^64
    output z ^ (z >> 31)
"""

import csv
import math
from dataclasses import dataclass, field
from typing import Callable, NamedTuple
from fdhull.errors import FdhError, MalformedLine, MalformedWorkload
from fdhull.geometry import Point, check_point
from fdhull.utilities import parse_point


MASK64 = (1 << 64) - 1

# Generator radius (and square side) in grid units
RADIUS = 1000

HEADER = "!fdh-workload v1"
CHECKPOINT = "# checkpoint"
KINDS = ("i", "d", "q", "e")

# Share of queries that ask for an extreme point instead of containment
EXTREME_SHARE = 0.1


class SplitMix64:
    """Seedable 64-bit generator with a fully specified state transition."""

    def __init__(self, seed: int):
        self.state = seed & MASK64

    def next_u64(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
        return z ^ (z >> 31)

    def random(self) -> float:
        """Uniform float in [0, 1) with 53 random bits."""
        return (self.next_u64() >> 11) * 2.0**-53

    def randint(self, lo: int, hi: int) -> int:
        """Uniform integer in [lo, hi]."""
        return lo + self.next_u64() % (hi - lo + 1)

    def gauss(self, sigma: float) -> float:
        u1 = 1.0 - self.random()
        u2 = self.random()
        return sigma * math.sqrt(-2.0 * math.log(u1)) * math.cos(2.0 * math.pi * u2)

    def shuffle(self, items: list):
        for i in range(len(items) - 1, 0, -1):
            j = self.randint(0, i)
            items[i], items[j] = items[j], items[i]


def gen_box(n: int, seed: int, scale: int = 1) -> list[Point]:
    """Uniform grid points in a square of side RADIUS * scale."""
    rng = SplitMix64(seed)
    side = RADIUS * scale
    return [Point(rng.randint(0, side), rng.randint(0, side)) for _ in range(n)]


def gen_bell(n: int, seed: int, scale: int = 1) -> list[Point]:
    """2D Gaussian around the origin, rounded to the grid."""
    rng = SplitMix64(seed)
    sigma = RADIUS * scale / 4
    return [Point(round(rng.gauss(sigma)), round(rng.gauss(sigma))) for _ in range(n)]


def gen_disk(n: int, seed: int, scale: int = 1) -> list[Point]:
    """Uniform grid points in a disk, by rejection from the bounding square."""
    rng = SplitMix64(seed)
    r = RADIUS * scale
    points = []
    while len(points) < n:
        x, y = rng.randint(-r, r), rng.randint(-r, r)
        if x * x + y * y <= r * r:
            points.append(Point(x, y))
    return points


def gen_circle(n: int, seed: int, scale: int = 1) -> list[Point]:
    """Points on a circle, rounded to the grid, keeping the highest per x."""
    rng = SplitMix64(seed)
    r = RADIUS * scale
    highest: dict[int, int] = {}
    for _ in range(n):
        angle = 2.0 * math.pi * rng.random()
        x, y = round(r * math.cos(angle)), round(r * math.sin(angle))
        if x not in highest or y > highest[x]:
            highest[x] = y
    return [Point(x, y) for x, y in highest.items()]


def gen_grid(
    n: int,
    seed: int,
    shared_x_fraction: float = 0.5,
    duplicate_fraction: float = 0.1,
    scale: int = 1,
) -> list[Point]:
    """Degenerate points: shared x columns and exact duplicates.

    About shared_x_fraction of the points reuse the x of an earlier point
    with a fresh y, and duplicate_fraction are exact copies of earlier points.
    """
    rng = SplitMix64(seed)
    side = RADIUS * scale
    points: list[Point] = []
    for _ in range(n):
        u = rng.random()
        if points and u < duplicate_fraction:
            points.append(points[rng.randint(0, len(points) - 1)])
        elif points and u < duplicate_fraction + shared_x_fraction:
            x = points[rng.randint(0, len(points) - 1)].x
            points.append(Point(x, rng.randint(0, side)))
        else:
            points.append(Point(rng.randint(0, side), rng.randint(0, side)))
    return points


GENERATORS: dict[str, Callable[..., list[Point]]] = {
    "box": gen_box,
    "bell": gen_bell,
    "disk": gen_disk,
    "circle": gen_circle,
    "grid": gen_grid,
}


class Op(NamedTuple):
    kind: str
    x: int
    y: int


@dataclass
class Workload:
    """Ordered operations plus the op counts at which hulls are compared."""

    ops: list[Op] = field(default_factory=list)
    metadata: dict[str, str] = field(default_factory=dict)
    checkpoints: list[int] = field(default_factory=list)

    def __len__(self) -> int:
        return len(self.ops)

    def checkpoint(self):
        self.checkpoints.append(len(self.ops))

    def dumps(self) -> str:
        meta = " ".join(f"{k}={v}" for k, v in self.metadata.items())
        lines = [f"{HEADER} {meta}".rstrip()]
        marks = sorted(self.checkpoints)
        c = 0
        for i, op in enumerate(self.ops):
            while c < len(marks) and marks[c] == i:
                lines.append(CHECKPOINT)
                c += 1
            lines.append(f"{op.kind} {op.x} {op.y}")
        lines.extend(CHECKPOINT for _ in marks[c:])
        return "\n".join(lines) + "\n"

    def dump(self, filepath: str):
        with open(filepath, "w") as f:
            f.write(self.dumps())

    @classmethod
    def loads(cls, text: str) -> "Workload":
        workload = cls()
        lines = text.splitlines()
        if not lines or not lines[0].startswith(HEADER):
            raise MalformedWorkload(1, lines[0] if lines else "")
        for item in lines[0][len(HEADER) :].split():
            key, _, value = item.partition("=")
            workload.metadata[key] = value

        for lineno, line in enumerate(lines[1:], start=2):
            stripped = line.strip()
            if stripped == CHECKPOINT:
                workload.checkpoint()
                continue
            if not stripped or stripped.startswith("#"):
                continue
            parts = stripped.split()
            if len(parts) != 3 or parts[0] not in KINDS:
                raise MalformedWorkload(lineno, line)
            try:
                x, y = int(parts[1]), int(parts[2])
                if parts[0] == "e":
                    if x == 0 and y == 0:
                        raise ValueError("zero direction")
                else:
                    check_point(Point(x, y))
            except (ValueError, FdhError) as e:
                raise MalformedWorkload(lineno, line) from e
            workload.ops.append(Op(parts[0], x, y))
        return workload

    @classmethod
    def load(cls, filepath: str) -> "Workload":
        with open(filepath, "r") as f:
            return cls.loads(f.read())


class _Builder:
    """Appends operations while tracking the live multiset."""

    def __init__(self, workload: Workload, rng: SplitMix64, points: list[Point]):
        self.workload = workload
        self.rng = rng
        self.live: list[Point] = []
        if points:
            self.lo_x = min(p.x for p in points)
            self.hi_x = max(p.x for p in points)
            self.lo_y = min(p.y for p in points)
            self.hi_y = max(p.y for p in points)
        else:
            self.lo_x = self.hi_x = self.lo_y = self.hi_y = 0

    def insert(self, p: Point):
        self.workload.ops.append(Op("i", p.x, p.y))
        self.live.append(p)

    def delete_random(self):
        # Swap-remove a uniformly chosen live copy
        i = self.rng.randint(0, len(self.live) - 1)
        p = self.live[i]
        self.live[i] = self.live[-1]
        self.live.pop()
        self.workload.ops.append(Op("d", p.x, p.y))

    def query(self):
        rng = self.rng
        if rng.random() < EXTREME_SHARE:
            dx, dy = 0, 0
            while dx == 0 and dy == 0:
                dx, dy = rng.randint(-RADIUS, RADIUS), rng.randint(-RADIUS, RADIUS)
            self.workload.ops.append(Op("e", dx, dy))
        elif self.live and rng.random() < 0.5:
            # Live points are always inside the hull
            p = self.live[rng.randint(0, len(self.live) - 1)]
            self.workload.ops.append(Op("q", p.x, p.y))
        else:
            x = rng.randint(self.lo_x, self.hi_x)
            y = rng.randint(self.lo_y, self.hi_y)
            self.workload.ops.append(Op("q", x, y))


def make_rounds(points: list[Point], seed: int) -> Workload:
    """Two rounds of insertion, querying and deletion.

    The first round inserts the first half of the points, queries as often
    and deletes half of the live points. The second round inserts the rest,
    queries as often and deletes a quarter of the live points.
    """
    workload = Workload(metadata={"schema": "rounds", "seed": str(seed)})
    build = _Builder(workload, SplitMix64(seed), points)
    half = len(points) // 2
    for batch, fraction in ((points[:half], 2), (points[half:], 4)):
        for p in batch:
            build.insert(p)
        for _ in batch:
            build.query()
        for _ in range(len(build.live) // fraction):
            build.delete_random()
        workload.checkpoint()
    return workload


def make_mixed(points: list[Point], ratio: int, seed: int) -> Workload:
    """Inserts, deletes and queries in ratio 1:1:ratio after a warm-up.

    The first half of the points is inserted up front. The remaining inserts
    are shuffled together with as many deletes and ratio times as many
    queries.
    """
    workload = Workload(
        metadata={"schema": f"mixed:{ratio}", "seed": str(seed)},
    )
    rng = SplitMix64(seed)
    build = _Builder(workload, rng, points)
    half = len(points) // 2
    for p in points[:half]:
        build.insert(p)
    workload.checkpoint()

    rest = points[half:]
    tokens = ["i"] * len(rest) + ["d"] * len(rest) + ["q"] * (ratio * len(rest))
    rng.shuffle(tokens)
    pending = iter(rest)
    for token in tokens:
        if token == "i":
            build.insert(next(pending))
        elif token == "d" and build.live:
            build.delete_random()
        elif token == "q":
            build.query()
    workload.checkpoint()
    return workload


def make_scaling(
    points: list[Point], deletion_fraction: float = 0.5, seed: int = 0
) -> Workload:
    """Insert everything, query as often, then delete the given fraction."""
    workload = Workload(
        metadata={
            "schema": "scaling",
            "seed": str(seed),
            "deletion_fraction": str(deletion_fraction),
        }
    )
    build = _Builder(workload, SplitMix64(seed), points)
    for p in points:
        build.insert(p)
    workload.checkpoint()
    for _ in points:
        build.query()
    for _ in range(int(len(build.live) * deletion_fraction)):
        build.delete_random()
    workload.checkpoint()
    return workload


def prepare_real(points: list[Point], seed: int) -> Workload:
    """Real-data schema: inserts in file order mixed with as many queries,
    then a uniform half of the points is deleted, again mixed with queries."""
    workload = Workload(metadata={"schema": "real", "seed": str(seed)})
    rng = SplitMix64(seed)
    build = _Builder(workload, rng, points)

    tokens = ["i"] * len(points) + ["q"] * len(points)
    rng.shuffle(tokens)
    pending = iter(points)
    for token in tokens:
        if token == "i":
            build.insert(next(pending))
        else:
            build.query()
    workload.checkpoint()

    tokens = ["d"] * (len(points) // 2) + ["q"] * (len(points) // 2)
    rng.shuffle(tokens)
    for token in tokens:
        if token == "d":
            build.delete_random()
        else:
            build.query()
    workload.checkpoint()
    return workload


SCHEMAS = ("rounds", "mixed", "scaling", "real")


def make_workload(schema: str, points: list[Point], seed: int) -> Workload:
    """Build a workload from a schema string such as 'rounds' or 'mixed:10'."""
    name, _, arg = schema.partition(":")
    if name == "rounds":
        return make_rounds(points, seed)
    if name == "mixed":
        return make_mixed(points, int(arg) if arg else 1, seed)
    if name == "scaling":
        return make_scaling(points, float(arg) if arg else 0.5, seed)
    if name == "real":
        return prepare_real(points, seed)
    raise ValueError(f"unknown schema {schema!r}")


def ingest_csv(filepath: str, quantizer: int = 10**6) -> list[Point]:
    """Read decimal 'x,y' lines into grid points. Duplicates are kept."""
    points = []
    with open(filepath, "r", newline="") as f:
        for lineno, row in enumerate(csv.reader(f), start=1):
            if not row or all(not cell.strip() for cell in row):
                continue
            if len(row) != 2:
                raise MalformedLine(lineno, ",".join(row))
            try:
                points.append(parse_point(row[0], row[1], quantizer))
            except ValueError as e:
                raise MalformedLine(lineno, ",".join(row)) from e
    return points
