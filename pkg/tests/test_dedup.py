import pytest
from fdhull.dedup import (
    DedupIndex,
    NewRepresentative,
    RemoveRepresentative,
    ReplaceRepresentative,
    Shadowed,
    UnshadowOnly,
)
from fdhull.errors import UnknownPoint
from fdhull.geometry import Point


@pytest.fixture
def index():
    index = DedupIndex()
    index.insert(Point(3, 1))
    index.insert(Point(3, 5))
    index.insert(Point(3, 2))
    return index


def test_insert_effects():
    index = DedupIndex()
    assert index.insert(Point(3, 1)) == NewRepresentative(Point(3, 1))
    assert index.insert(Point(3, 5)) == ReplaceRepresentative(Point(3, 1), Point(3, 5))
    assert index.insert(Point(3, 2)) == Shadowed(Point(3, 2))
    assert index.representative(3) == Point(3, 5)
    assert len(index) == 1


def test_delete_representative_promotes_successor(index):
    index.relocate(3, 4)
    effect = index.delete(Point(3, 5))
    assert effect == RemoveRepresentative(Point(3, 5), Point(3, 2), 4)
    assert index.representative(3) == Point(3, 2)


def test_delete_shadowed_point(index):
    assert index.delete(Point(3, 2)) == UnshadowOnly(Point(3, 2))
    assert index.representative(3) == Point(3, 5)


def test_delete_last_point_removes_entry():
    index = DedupIndex()
    index.insert(Point(1, 1))
    assert index.delete(Point(1, 1)) == RemoveRepresentative(Point(1, 1), None, None)
    assert len(index) == 0
    assert index.representative(1) is None
    assert index.locate(1) is None


def test_identical_copies_are_counted():
    index = DedupIndex()
    assert index.insert(Point(2, 2)) == NewRepresentative(Point(2, 2))
    assert index.insert(Point(2, 2)) == Shadowed(Point(2, 2))
    assert index.delete(Point(2, 2)) == UnshadowOnly(Point(2, 2))
    assert Point(2, 2) in index
    assert isinstance(index.delete(Point(2, 2)), RemoveRepresentative)
    assert Point(2, 2) not in index


def test_delete_unknown_point(index):
    with pytest.raises(UnknownPoint):
        index.delete(Point(9, 9))
    with pytest.raises(UnknownPoint):
        index.delete(Point(3, 4))


def test_locate_follows_relocation(index):
    assert index.locate(3) is None
    index.relocate(3, 2)
    assert index.locate(3) == 2
    # Unknown x is ignored
    index.relocate(8, 1)
    assert index.locate(8) is None


def test_representatives():
    index = DedupIndex()
    for p in [(0, 1), (0, 3), (1, -1), (2, 0), (2, 0)]:
        index.insert(Point(*p))
    assert sorted(index.representatives()) == [(0, 3), (1, -1), (2, 0)]
