import math
import random
import pytest
from fdhull.buckets import BucketArray
from fdhull.errors import UnknownPoint
from fdhull.geometry import Point, score, upper_hull_sorted
from fdhull.hulltree import UpperHullTree


def representatives(points):
    highest = {}
    for p in points:
        if p.x not in highest or p.y > highest[p.x]:
            highest[p.x] = p.y
    return sorted(Point(x, y) for x, y in highest.items())


def check_invariants(array: BucketArray):
    total = 0
    for i, tree in enumerate(array.buckets):
        if tree is None:
            continue
        assert 0 < tree.live <= array.capacity(i)
        if i > 0:
            assert 4 * tree.live >= array.capacity(i)
        for p in tree.live_points():
            assert array.dedup.locate(p.x) == i
            assert array.dedup.representative(p.x) == p
        total += tree.live
    assert total == len(array.dedup) == len(array)


def test_base_must_be_power_of_two():
    with pytest.raises(ValueError):
        BucketArray(base=24)
    with pytest.raises(ValueError):
        BucketArray(base=0)


def test_first_insert_lands_in_smallest_bucket():
    array = BucketArray(base=32)
    array.insert(Point(1, 1))
    assert array.buckets[0].live == 1
    array.delete(Point(1, 1))
    assert array.trees() == []


def test_insert_fills_smallest_bucket():
    array = BucketArray(base=4)
    for x in range(4):
        array.insert(Point(x, x * x))
    assert array.buckets[0].live == 4
    assert all(tree is None for tree in array.buckets[1:])


def test_plan_prefers_one_bucket():
    array = BucketArray(base=4)
    assert array._plan(4, top=1) == [(0, 0, 4)]
    assert array._plan(14, top=2) == [(2, 0, 14)]
    assert array._plan(5, top=1) == [(1, 0, 5)]
    assert array._plan(0, top=3) == []


def test_plan_splits_into_two_buckets():
    array = BucketArray(base=4)
    # 16 into bucket 2, remainder 3 into bucket 0
    assert array._plan(19, top=2) == [(2, 0, 16), (0, 16, 19)]


def test_underflow_triggers_merge():
    array = BucketArray(base=4)
    points = [Point(x, (x * 7) % 11) for x in range(16)]
    array.buckets = [None, None, UpperHullTree(points, array.counters)]
    for p in points:
        array.dedup.insert(p)
        array.dedup.relocate(p.x, 2)

    for p in points[:12]:
        array.delete(p)
    assert array.counters.merges == 0
    assert array.buckets[2].live == 4

    array.delete(points[12])
    assert array.counters.merges == 1
    assert array.buckets[2] is None
    assert array.buckets[0].live == 3
    check_invariants(array)


def test_shadowed_points_do_not_touch_buckets():
    array = BucketArray(base=4)
    array.insert(Point(0, 5))
    merges = array.counters.merges
    array.insert(Point(0, 1))
    array.delete(Point(0, 1))
    assert array.counters.merges == merges
    assert array.materialize() == [Point(0, 5)]


def test_replaced_representative():
    array = BucketArray(base=4)
    array.insert(Point(0, 1))
    array.insert(Point(1, 0))
    array.insert(Point(0, 5))
    assert array.materialize() == [Point(0, 5), Point(1, 0)]
    array.delete(Point(0, 5))
    assert array.materialize() == [Point(0, 1), Point(1, 0)]
    check_invariants(array)


def test_delete_unknown_point():
    array = BucketArray(base=4)
    array.insert(Point(0, 1))
    with pytest.raises(UnknownPoint):
        array.delete(Point(0, 2))


@pytest.mark.parametrize("base", [1, 4, 32])
def test_random_updates_keep_invariants(base):
    rng = random.Random(base)
    array = BucketArray(base=base)
    live = []
    for step in range(3000):
        if live and rng.random() < 0.4:
            p = live.pop(rng.randrange(len(live)))
            array.delete(p)
        else:
            p = Point(rng.randint(0, 300), rng.randint(0, 300))
            live.append(p)
            array.insert(p)
        if step % 100 == 0:
            check_invariants(array)
            assert array.materialize() == upper_hull_sorted(representatives(live))
    check_invariants(array)


def test_queries_match_single_hull():
    rng = random.Random(7)
    array = BucketArray(base=4)
    points = [Point(rng.randint(0, 1000), rng.randint(0, 1000)) for _ in range(500)]
    for p in points:
        array.insert(p)
    for p in rng.sample(points, 200):
        array.delete(p)
        points.remove(p)
    chain = upper_hull_sorted(representatives(points))
    assert array.materialize() == chain
    assert array.leftmost() == chain[0]
    assert array.rightmost() == chain[-1]

    below = UpperHullTree(chain)
    for _ in range(500):
        q = Point(rng.randint(-50, 1050), rng.randint(0, 1100))
        assert array.contains_below(q) == below.contains_below_upper(q)
    for _ in range(200):
        direction = (rng.randint(-10, 10), rng.randint(1, 10))
        best = array.extreme(direction)
        assert score(best, direction) == max(score(p, direction) for p in chain)


def test_insert_moves_stay_near_log_bound():
    n = 4096
    array = BucketArray(base=4)
    rng = random.Random(0)
    for x in rng.sample(range(10 * n), n):
        array.insert(Point(x, rng.randint(0, 10 * n)))
    assert array.counters.moves <= 4 * n * math.log2(n)
    check_invariants(array)


def test_empty_array_queries():
    array = BucketArray()
    assert not array.contains_below(Point(0, 0))
    assert array.extreme((0, 1)) is None
    assert array.leftmost() is None
    assert array.materialize() == []


def test_containment_costs_two_descents_per_bucket():
    rng = random.Random(3)
    array = BucketArray(base=4)
    for x in rng.sample(range(10**5), 3000):
        array.insert(Point(x, rng.randint(0, 10**5)))
    bound = 2 * len(array.trees()) * (math.ceil(math.log2(len(array))) + 1)
    for _ in range(500):
        q = Point(rng.randint(-10, 10**5 + 10), rng.randint(0, 2 * 10**5))
        before = array.counters.query_visits
        array.contains_below(q)
        assert array.counters.query_visits - before <= bound
