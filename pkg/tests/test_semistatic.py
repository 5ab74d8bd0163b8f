import random
import pytest
from fdhull.errors import InvalidDirection, UnknownPoint
from fdhull.geometry import Point, score
from fdhull.oracle import OracleSet
from fdhull.structures.semistatic import Semistatic


@pytest.fixture
def triangle():
    structure = Semistatic()
    for p in [(0, 0), (100, 0), (50, 100)]:
        structure.insert(Point(*p))
    return structure


def test_insert_inside_keeps_hull(triangle):
    version = triangle.version
    upper = triangle.upper
    triangle.insert(Point(50, 10))
    assert triangle.version == version
    assert triangle.upper is upper
    # Points on the boundary count as inside
    triangle.insert(Point(50, 0))
    assert triangle.version == version


def test_insert_outside_rebuilds(triangle):
    version = triangle.version
    triangle.insert(Point(50, 200))
    assert triangle.version == version + 1
    assert Point(50, 200) in triangle.upper


def test_delete_non_vertex_keeps_hull(triangle):
    triangle.insert(Point(50, 10))
    version = triangle.version
    triangle.delete(Point(50, 10))
    assert triangle.version == version


def test_delete_duplicate_vertex_keeps_hull(triangle):
    triangle.insert(Point(50, 100))
    version = triangle.version
    triangle.delete(Point(50, 100))
    assert triangle.version == version
    triangle.delete(Point(50, 100))
    assert triangle.version == version + 1
    assert triangle.upper == [Point(0, 0), Point(100, 0)]


def test_delete_unknown(triangle):
    with pytest.raises(UnknownPoint):
        triangle.delete(Point(1, 1))


def test_queries(triangle):
    assert triangle.contains(Point(50, 50))
    assert not triangle.contains(Point(50, 101))
    assert triangle.extreme((0, 1)) == Point(50, 100)
    assert triangle.extreme((0, -1)).y == 0
    assert triangle.extreme((1, 0)) == Point(100, 0)
    assert triangle.extreme((-1, 0)) == Point(0, 0)
    assert triangle.hull_size() == 3
    with pytest.raises(InvalidDirection):
        triangle.extreme((0, 0))


def test_empty_structure():
    structure = Semistatic()
    assert not structure.contains(Point(0, 0))
    assert structure.extreme((1, 1)) is None
    assert structure.hull_size() == 0


@pytest.mark.parametrize("seed", [0, 1, 2])
def test_mixed_updates_match_oracle(seed):
    rng = random.Random(seed)
    structure = Semistatic()
    oracle = OracleSet()
    live = []
    for _ in range(1500):
        if live and rng.random() < 0.45:
            p = live.pop(rng.randrange(len(live)))
            structure.delete(p)
            oracle.delete(p)
        else:
            p = Point(rng.randint(0, 50), rng.randint(0, 50))
            live.append(p)
            structure.insert(p)
            oracle.insert(p)
        assert structure.materialize_hull() == oracle.oracle_hull()
        q = Point(rng.randint(-5, 55), rng.randint(-5, 55))
        assert structure.contains(q) == oracle.oracle_contains(q)
        direction = (rng.randint(-5, 5), rng.randint(-5, 5))
        if direction != (0, 0) and live:
            assert score(structure.extreme(direction), direction) == score(
                oracle.oracle_extreme(direction), direction
            )


def test_few_rebuilds_on_box_points():
    rng = random.Random(3)
    structure = Semistatic()
    for _ in range(5000):
        structure.insert(Point(rng.randint(0, 10**6), rng.randint(0, 10**6)))
    assert structure.rebuilds <= 0.05 * structure.updates
