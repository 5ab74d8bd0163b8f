import pytest
from fdhull.errors import InvalidDirection, UnknownPoint
from fdhull.geometry import Point, score
from fdhull.oracle import OracleSet, oracle_hull


def P(*coords):
    return [Point(x, y) for x, y in coords]


def test_hull_cases():
    assert oracle_hull(P((0, 0), (1, 5), (2, 0))) == (
        P((0, 0), (1, 5), (2, 0)),
        P((0, 0), (2, 0)),
    )
    assert oracle_hull(P((0, 0), (1, -5), (2, 0))) == (
        P((0, 0), (2, 0)),
        P((0, 0), (1, -5), (2, 0)),
    )
    assert oracle_hull([]) == ([], [])


def test_hull_of_a_vertical_column():
    assert oracle_hull(P((3, 0), (3, 4), (3, 2))) == (P((3, 4)), P((3, 0)))


def test_hull_drops_collinear_points():
    upper, lower = oracle_hull(P((0, 0), (1, 1), (2, 2), (1, 0)))
    assert upper == P((0, 0), (2, 2))
    assert lower == P((0, 0), (1, 0), (2, 2))


@pytest.fixture
def triangle():
    oracle = OracleSet()
    for p in P((0, 0), (1, 10), (2, 0)):
        oracle.insert(p)
    return oracle


@pytest.mark.parametrize(
    "q, expected",
    [((1, 1), True), ((1, 11), False), ((1, 0), True), ((0, 0), True), ((3, 0), False)],
)
def test_contains(triangle, q, expected):
    assert triangle.oracle_contains(Point(*q)) is expected


def test_hull_vertices_are_contained(triangle):
    upper, lower = triangle.oracle_hull()
    assert all(triangle.oracle_contains(v) for v in upper + lower)


def test_extreme(triangle):
    assert triangle.oracle_extreme((0, 1)) == Point(1, 10)
    assert triangle.oracle_extreme((1, 0)) == Point(2, 0)
    assert score(triangle.oracle_extreme((-1, -1)), (-1, -1)) == 0
    with pytest.raises(InvalidDirection):
        triangle.oracle_extreme((0, 0))


def test_empty_oracle():
    oracle = OracleSet()
    assert not oracle.oracle_contains(Point(0, 0))
    assert oracle.oracle_extreme((1, 1)) is None


def test_multiset_and_replay(triangle):
    triangle.insert(Point(1, 10))
    triangle.delete(Point(1, 10))
    assert triangle.oracle_hull()[0] == P((0, 0), (1, 10), (2, 0))
    triangle.delete(Point(1, 10))
    assert triangle.oracle_hull()[0] == P((0, 0), (2, 0))
    assert triangle.replay() == triangle.live
    assert len(triangle) == 2
    with pytest.raises(UnknownPoint):
        triangle.delete(Point(1, 10))


def test_hull_is_refreshed_after_updates():
    oracle = OracleSet()
    for p in [(0, 0), (2, 0), (1, 1)]:
        oracle.insert(Point(*p))
    assert oracle.oracle_hull()[0] == [Point(0, 0), Point(1, 1), Point(2, 0)]
    oracle.insert(Point(1, 5))
    assert oracle.oracle_hull()[0] == [Point(0, 0), Point(1, 5), Point(2, 0)]
    oracle.delete(Point(1, 5))
    assert oracle.oracle_contains(Point(1, 1))
    assert not oracle.oracle_contains(Point(1, 2))
