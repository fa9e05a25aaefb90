#!/usr/bin/env python3
"""Tests for crossing counts, forced crossings, optimal layouts and the oracle."""
import sys
import traceback

sys.path.insert(0, '.')

from panelcross.analysis import extremal_instance_general, random_instance
from panelcross.core import (
    CategorySet,
    OpdInstance,
    SigmaOrdering,
    as_layout,
    layout_is_valid,
    naive_layout,
    relabel_subjects,
)
from panelcross.errors import BudgetExceededError, LayoutError
from panelcross.layout import (
    RedundantCrossing,
    Transition,
    brute_force_pcr,
    count_forced,
    count_inversions,
    count_layout_crossings,
    count_strongly_forced,
    count_weakly_forced,
    find_redundant_crossings,
    interval_crossings,
    layout_count,
    layout_report,
    optimal_layout,
    pair_transitions,
    pcr,
    valid_permutations,
)


def build(rows, k, sigma=None):
    """Instance from index rows (one per timestamp), subjects s0.., categories c1.."""
    n = len(rows[0])
    return OpdInstance(tuple(f"s{j}" for j in range(n)),
                       CategorySet(tuple(f"c{c + 1}" for c in range(k))),
                       tuple(tuple(r) for r in rows),
                       sigma or SigmaOrdering.identity(k))


def catch_up_instance():
    # a: (c1, c1, c2), b: (c2, c1, c1)
    return build([(0, 1), (0, 0), (1, 0)], 2)


def nine_subject_instance():
    """Two subjects share the topmost category at t0, then one of them drops a level."""
    first = (0, 0, 1, 2, 3, 4, 5, 6, 6)
    later = (0, 0, 1, 2, 3, 4, 5, 6, 5)
    return build([first, later, later, later], 7)


def test_count_inversions():
    assert count_inversions([]) == 0
    assert count_inversions([0, 1, 2]) == 0
    assert count_inversions([2, 1, 0]) == 3
    assert count_inversions([3, 1, 2, 0]) == 5


def test_interval_crossings():
    assert interval_crossings((0, 1), (1, 0)) == 1
    assert interval_crossings((0, 1, 2), (2, 1, 0)) == 3
    assert interval_crossings((2, 0, 1), (2, 0, 1)) == 0


def test_count_layout_crossings():
    one_category = build([(0, 0, 0), (0, 0, 0), (0, 0, 0)], 1)
    report = count_layout_crossings(one_category, as_layout([(0, 1, 2), (2, 1, 0), (2, 1, 0)]))
    assert report.total == 3
    assert report.per_interval == (3, 0)
    assert report.strong is None and report.weak is None
    same = count_layout_crossings(one_category, as_layout([(1, 0, 2)] * 3))
    assert same.total == 0


def test_count_layout_crossings_rejects_invalid():
    inst = catch_up_instance()
    try:
        count_layout_crossings(inst, as_layout([(1, 0), (0, 1), (1, 0)]))
        assert False, "category-inconsistent layout must raise"
    except LayoutError:
        pass
    try:
        count_layout_crossings(inst, as_layout([(0, 1), (1, 0)]))
        assert False, "dimension mismatch must raise"
    except LayoutError:
        pass


def test_pair_transitions():
    assert list(pair_transitions((0, 0, 1), (1, 0, 0))) == [Transition(0, 2, False)]
    assert list(pair_transitions((0, 1), (1, 0))) == [Transition(0, 1, True)]
    assert list(pair_transitions((0, 0), (0, 0))) == []


def test_strongly_forced():
    overtake = build([(0, 1), (1, 0)], 2)
    assert count_strongly_forced(overtake) == 1
    assert count_weakly_forced(overtake) == 0
    constant = build([(0, 1, 1), (0, 1, 1), (0, 1, 1)], 2)
    assert count_forced(constant) == (0, 0)
    assert count_strongly_forced(extremal_instance_general(4, 2, 2)) == 8


def test_weakly_forced():
    inst = catch_up_instance()
    assert count_forced(inst) == (0, 1)
    # never level: no weak crossing even when subjects keep swapping
    apart = build([(0, 2), (2, 0), (0, 2)], 3)
    assert count_weakly_forced(apart) == 0


def test_optimal_layout_catch_up():
    inst = catch_up_instance()
    layout = optimal_layout(inst)
    assert layout_is_valid(inst, layout)
    assert count_layout_crossings(inst, layout).total == 1
    assert pcr(inst) == brute_force_pcr(inst) == 1


def test_nine_subject_example():
    inst = nine_subject_instance()
    naive = naive_layout(inst)
    assert count_layout_crossings(inst, naive).total == 1
    layout = optimal_layout(inst)
    assert count_layout_crossings(inst, layout).total == 0
    # the optimum only reorders the two subjects sharing the top category at t0
    assert naive.pis[0][-2:] == (7, 8)
    assert layout.pis[0][-2:] == (8, 7)
    assert layout.pis[0][:-2] == naive.pis[0][:-2]
    assert layout.pis[1:] == naive.pis[1:]
    assert find_redundant_crossings(inst, naive) == [RedundantCrossing('backward', 0, (7, 8))]
    assert find_redundant_crossings(inst, layout) == []
    assert brute_force_pcr(inst) == 0


def test_single_subject():
    inst = build([(0,), (1,), (0,)], 2)
    assert pcr(inst) == 0
    assert brute_force_pcr(inst) == 0
    assert optimal_layout(inst).pis == ((0,), (0,), (0,))


def test_layout_report():
    inst = extremal_instance_general(5, 2, 3)
    layout, report = layout_report(inst)
    assert report.total == 18
    assert report.total == report.strong + report.weak
    assert sum(report.per_interval) == report.total
    assert report.to_dict()['per_interval'] == [6, 6, 6]
    assert layout_is_valid(inst, layout)


def test_oracle_counts():
    inst = build([(0, 0, 1), (0, 1, 1)], 2)
    # 2!*1! at t0, 1!*2! at t1
    assert layout_count(inst) == 4
    assert sorted(valid_permutations(inst, 0)) == [(0, 1, 2), (1, 0, 2)]


def test_oracle_budget():
    crowded = build([(0,) * 8, (0,) * 8], 1)
    try:
        brute_force_pcr(crowded)
        assert False, "oracle must refuse (8!)^2 layouts"
    except BudgetExceededError as e:
        assert e.required == 40320 ** 2
    small = build([(0,) * 3, (0,) * 3], 1)
    assert brute_force_pcr(small, budget=36) == 0


def test_properties_on_random_instances():
    for seed in range(60):
        n, k, m = 2 + seed % 4, 2 + seed % 3, 1 + seed % 3
        inst = random_instance(n, k, m, seed)
        layout, report = layout_report(inst)
        assert report.total == report.strong + report.weak, seed
        assert report.total >= report.strong
        assert report.total == brute_force_pcr(inst), seed
        assert find_redundant_crossings(inst, layout) == [], seed
        assert pcr(inst.with_sigma(inst.sigma.reversed())) == report.total, seed
        shuffled = relabel_subjects(inst, list(reversed(range(n))))
        assert pcr(shuffled) == report.total, seed


if __name__ == '__main__':
    print("=" * 60)
    print("Layout Engine Test Suite")
    print("=" * 60)
    failed = 0
    for name, test in [(n, f) for n, f in list(globals().items()) if n.startswith('test_')]:
        try:
            test()
            print(f"   ✅ {name}")
        except Exception as e:
            failed += 1
            print(f"   ❌ {name}: {e}")
            traceback.print_exc()
    print("\n" + "=" * 60)
    print(f"{'All tests passed' if not failed else f'{failed} test(s) failed'}")
    sys.exit(1 if failed else 0)
