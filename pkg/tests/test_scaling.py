import math
import statistics
import pytest
from fdhull.buckets import BucketArray, max_y_per_x
from fdhull.geometry import Point, mirror
from fdhull.hulltree import Counters, UpperHullTree
from fdhull.structures.fdh import Fdh
from fdhull.workload import GENERATORS, SplitMix64, make_mixed, make_rounds
from fdhull._cli.utilities import apply_op, build_structure, first_divergence, replay


HULL_GENERATORS = ("box", "bell", "disk", "circle")


def update_and_query_means(report):
    updates = [ns for kind, ns in zip(report.kinds, report.ns) if kind in ("i", "d")]
    queries = [ns for kind, ns in zip(report.kinds, report.ns) if kind == "q"]
    return statistics.mean(updates), statistics.mean(queries)


@pytest.mark.slow
@pytest.mark.parametrize("seed", range(3))
@pytest.mark.parametrize("n", [2**10, 2**12, 2**14])
@pytest.mark.parametrize("generator", HULL_GENERATORS)
def test_two_round_workloads_match_oracle(generator, n, seed):
    workload = make_rounds(GENERATORS[generator](n, seed), seed)
    reports = [
        replay(build_structure(impl), workload, label=impl)
        for impl in ("oracle", "fdh:32", "fdh:1024", "semistatic")
    ]
    assert first_divergence(reports) is None


@pytest.mark.slow
def test_mixed_disk_counters_stay_within_log_bounds():
    normalized = []
    for n in (2**14, 2**16, 2**18):
        structure = Fdh({"base": 32})
        for op in make_mixed(GENERATORS["disk"](n, 1), 1, 1).ops:
            apply_op(structure, op.kind, op.x, op.y)
        counters = structure.counters()
        log_n = math.log2(n)
        assert counters["moves"] <= 2 * n * log_n
        assert counters["repair_steps"] <= 4 * n * log_n
        normalized.append(counters["moves"] / (n * log_n * math.log2(log_n)))

    for smaller, larger in zip(normalized, normalized[1:]):
        assert larger <= 1.2 * smaller


@pytest.mark.slow
@pytest.mark.parametrize("n", [2**12, 2**16, 2**20])
@pytest.mark.parametrize("generator", HULL_GENERATORS)
def test_build_touches_are_linear(generator, n):
    # Large scale keeps most x-coordinates distinct
    points = sorted(GENERATORS[generator](n, 3, scale=1000))
    for side in (max_y_per_x(points), max_y_per_x(sorted(map(mirror, points)))):
        counters = Counters()
        UpperHullTree(side, counters)
        assert counters.build_touches <= 8 * len(side)


@pytest.mark.slow
@pytest.mark.parametrize("generator", ["disk", "box"])
@pytest.mark.parametrize("n", [2**12, 2**14, 2**16])
def test_containment_visits_per_bucket(generator, n):
    array = BucketArray(base=32)
    for p in GENERATORS[generator](n, 5, scale=100):
        array.insert(p)

    rng = SplitMix64(n)
    r = 1000 * 100
    log_n = math.ceil(math.log2(len(array)))
    for _ in range(2000):
        q = Point(rng.randint(-r, r), rng.randint(-r, r))
        before = array.counters.query_visits
        array.contains_below(q)
        visits = array.counters.query_visits - before
        assert visits <= 2 * len(array.trees()) * (log_n + 1)


@pytest.mark.slow
def test_disk_queries_cost_more_than_semistatic():
    workload = make_rounds(GENERATORS["disk"](2**18, 0), 0)
    fdh = replay(build_structure("fdh:32"), workload, label="fdh:32")
    semistatic = replay(build_structure("semistatic"), workload, label="semistatic")
    _, fdh_query = update_and_query_means(fdh)
    _, semistatic_query = update_and_query_means(semistatic)
    assert fdh_query >= 2 * semistatic_query


@pytest.mark.slow
@pytest.mark.parametrize("generator", ["box", "bell"])
def test_semistatic_updates_win_on_few_hull_changes(generator):
    workload = make_rounds(GENERATORS[generator](2**18, 0), 0)
    fdh = replay(build_structure("fdh:32"), workload, label="fdh:32")
    semistatic = replay(build_structure("semistatic"), workload, label="semistatic")
    fdh_update, _ = update_and_query_means(fdh)
    semistatic_update, _ = update_and_query_means(semistatic)
    assert semistatic_update <= fdh_update


@pytest.mark.slow
@pytest.mark.parametrize("generator", HULL_GENERATORS)
def test_median_op_time_grows_slowly(generator):
    medians = []
    for n in (2**14, 2**18):
        workload = make_mixed(GENERATORS[generator](n, 2), 1, 2)
        report = replay(build_structure("fdh:32"), workload, label="fdh:32")
        medians.append(statistics.median(report.ns))
    assert medians[1] < 2.5 * medians[0]
