import math

import pytest

from indeque.exact import solve
from indeque.forest import (
    CyclicInputError,
    find_cycle,
    indeque_forest,
    indeque_forest_detailed,
)
from indeque.graph import Graph
from indeque.generators import cycle, path, random_forest, star
from indeque.verify import ClusterCertificate, verify_indeque


def test_path_six():
    s = indeque_forest(path(6))
    assert len(s) == 4
    assert isinstance(verify_indeque(path(6), s), ClusterCertificate)


def test_star_three_keeps_leaves():
    assert indeque_forest(star(3)) == {1, 2, 3}


def test_single_vertex():
    assert indeque_forest(Graph(1)) == {0}


def test_cycle_rejected_with_cycle_reported():
    with pytest.raises(CyclicInputError) as err:
        indeque_forest(cycle(5))
    cyc = err.value.cycle
    assert len(cyc) >= 3
    g = cycle(5)
    for a, b in zip(cyc, cyc[1:] + cyc[:1]):
        assert g.has_edge(a, b)


def test_find_cycle_none_on_forest():
    for seed in range(20):
        assert find_cycle(random_forest(seed, 12)) is None


def test_every_step_removes_three_adds_two():
    f = random_forest(3, 40)
    chosen, steps = indeque_forest_detailed(f)
    for st in steps:
        assert len(st.removed) in (1, 2, 3)
        if len(st.removed) == 3:
            assert len(st.added) == 2
        elif len(st.removed) == 2:
            assert len(st.added) == 2
        else:
            assert len(st.added) == 1
    assert sum(len(st.removed) for st in steps) == f.n
    assert set().union(*(st.added for st in steps)) == chosen


def test_guarantee_and_verification_on_random_forests():
    for seed in range(200):
        f = random_forest(seed, 1 + seed % 45)
        s = indeque_forest(f)
        assert isinstance(verify_indeque(f, s), ClusterCertificate)
        assert len(s) >= math.ceil(2 * f.n / 3)


def test_never_beats_exact_on_small_forests():
    gaps = []
    for seed in range(120):
        f = random_forest(seed + 71, 4 + seed % 12)
        s = indeque_forest(f)
        opt = solve(f).value
        assert len(s) <= opt
        gaps.append(opt - len(s))
    assert min(gaps) == 0  # tight somewhere


def test_gap_distribution_report():
    """No tightness contract; the gap histogram is printed for inspection."""
    from collections import Counter

    gaps = Counter()
    for seed in range(500):
        f = random_forest(seed + 9000, 1 + seed % 15)
        gaps[solve(f).value - len(indeque_forest(f))] += 1
    print(f"\nforest gap distribution over 500 forests (n<=15): {dict(sorted(gaps.items()))}")
    assert all(gap >= 0 for gap in gaps)
