#!/usr/bin/env python3
"""Tests for responsibility tables, sigma search, LP export and the bipartite reduction."""
import itertools
import sys
import traceback

sys.path.insert(0, '.')

from panelcross.analysis import random_instance
from panelcross.core import CategorySet, OpdInstance, SigmaOrdering, validate_instance
from panelcross.errors import BudgetExceededError, ParseError, ValidationError
from panelcross.layout import pcr
from panelcross.sigma import (
    ResponsibilityTables,
    assignment_for_sigma,
    bipartite_crossing_number,
    bipartite_reduction,
    branch_and_bound_sigma,
    compute_tables,
    count_bipartite_crossings,
    exhaustive_sigma,
    export_ilp,
    normalize_key,
    objective_for_sigma,
    optimal_sigma_bruteforce,
    optimal_sigma_exact,
    parse_lp,
)
from panelcross.sigma.tables import ALWAYS, NEVER


def three_category_example():
    # a: (c1, c3), b: (c2, c2)
    return OpdInstance.from_labels(['a', 'b'], ['c1', 'c2', 'c3'],
                                   [['c1', 'c2'], ['c3', 'c2']])


def overtake_example():
    # a: (c1, c2), b: (c2, c1)
    return OpdInstance.from_labels(['a', 'b'], ['c1', 'c2'], [['c1', 'c2'], ['c2', 'c1']])


def all_sigmas(k):
    return [SigmaOrdering.from_order(order) for order in itertools.permutations(range(k))]


def test_normalize_key():
    key = ((0, 1), (2, 1))
    assert normalize_key((0, 1), (2, 1)) == key
    # swapping the pairs or reversing both describes the same event
    assert normalize_key((2, 1), (0, 1)) == key
    assert normalize_key((1, 0), (1, 2)) == key
    assert normalize_key((1, 2), (1, 0)) == key
    assert normalize_key((0, 1), (0, 1)) == NEVER
    assert normalize_key((0, 1), (1, 0)) == ALWAYS


def test_tables_worked_example():
    tables = compute_tables(three_category_example())
    assert list(tables.entries) == [((0, 1), (2, 1))]
    entry = tables.entries[((0, 1), (2, 1))]
    assert (entry.sc, entry.wc) == (1, 0)
    assert tables.constant == 0
    assert tables.strong_events == 1 and tables.weak_events == 0


def test_tables_constant_and_empty():
    tables = compute_tables(overtake_example())
    assert tables.entries == {}
    assert tables.constant_sc == 1 and tables.constant == 1
    twins = OpdInstance.from_labels(['a', 'b'], ['c1', 'c2'], [['c1', 'c1'], ['c2', 'c2']])
    empty = compute_tables(twins)
    assert len(empty) == 0 and empty.constant == 0
    assert all(objective_for_sigma(empty, s) == 0 for s in all_sigmas(2))


def test_tables_weak_events():
    # a: (c1, c1, c2), b: (c2, c1, c1) catches up, stays level, breaks away
    inst = OpdInstance.from_labels(['a', 'b'], ['c1', 'c2'],
                                   [['c1', 'c2'], ['c1', 'c1'], ['c2', 'c1']])
    tables = compute_tables(inst)
    assert tables.constant_wc == 1 and tables.weak_events == 1


def test_tables_parallel():
    inst = random_instance(9, 4, 3, seed=3)
    serial = compute_tables(inst)
    threaded = compute_tables(inst, workers=3)
    assert serial.entries == threaded.entries
    assert serial.constant == threaded.constant


def test_objective_worked_example():
    inst = three_category_example()
    tables = compute_tables(inst)
    assert objective_for_sigma(tables, SigmaOrdering.from_order([1, 0, 2])) == 0
    assert objective_for_sigma(tables, SigmaOrdering.identity(3)) == 1
    for sigma in all_sigmas(3):
        value = objective_for_sigma(tables, sigma)
        assert value == pcr(inst.with_sigma(sigma))
        assert value == objective_for_sigma(tables, sigma.reversed())
    try:
        objective_for_sigma(tables, SigmaOrdering.identity(2))
        assert False, "sigma size mismatch must raise"
    except ValidationError:
        pass


def test_optimal_sigma_worked_example():
    inst = three_category_example()
    for method in ('auto', 'exhaustive', 'branch-and-bound'):
        result = optimal_sigma_exact(inst, method=method)
        assert result.objective == 0
        # lexicographically smallest of the zero-cost orders
        assert result.sigma.order == (0, 2, 1), (method, result.sigma.order)
    assert objective_for_sigma(compute_tables(inst), SigmaOrdering.from_order([1, 0, 2])) == 0


def test_optimal_sigma_single_category():
    inst = OpdInstance.from_labels(['a', 'b'], ['only'], [['only', 'only'], ['only', 'only']])
    result = optimal_sigma_exact(inst)
    assert result.sigma == SigmaOrdering.identity(1)
    assert result.objective == pcr(inst.with_sigma(result.sigma)) == 0


def test_search_methods_agree():
    for seed in range(40):
        k = 2 + seed % 4
        inst = random_instance(4, k, 2, seed)
        tables = compute_tables(inst)
        exhaustive = exhaustive_sigma(tables)
        bnb = branch_and_bound_sigma(tables)
        brute = optimal_sigma_bruteforce(inst)
        assert exhaustive.objective == bnb.objective == brute.objective, seed
        assert exhaustive.sigma == bnb.sigma == brute.sigma, seed
        assert pcr(inst.with_sigma(bnb.sigma)) == bnb.objective


def test_auto_method_picks_search_by_size():
    small = random_instance(4, 3, 2, seed=5)
    result = optimal_sigma_exact(small, method='auto')
    assert result.nodes == 6  # every one of the 3! orders
    assert result == optimal_sigma_exact(small, method='exhaustive')

    large = random_instance(4, 7, 2, seed=5)
    result = optimal_sigma_exact(large, method='auto')
    bnb = branch_and_bound_sigma(compute_tables(large))
    assert (result.sigma, result.objective, result.nodes) == (bnb.sigma, bnb.objective, bnb.nodes)


def test_sigma_budgets():
    inst = random_instance(4, 4, 2, seed=1)
    try:
        optimal_sigma_exact(inst, budget=3)
        assert False, "k above the budget must raise"
    except BudgetExceededError as e:
        assert '--export-lp' in str(e)
        assert (e.required, e.budget) == (4, 3)
    try:
        optimal_sigma_exact(inst, method='annealing')
        assert False, "unknown method must raise"
    except ValidationError:
        pass
    busy = random_instance(6, 5, 3, seed=2)
    try:
        branch_and_bound_sigma(compute_tables(busy), max_nodes=3)
        assert False, "node budget must be enforced"
    except BudgetExceededError:
        pass


def test_export_worked_example():
    tables = compute_tables(three_category_example())
    text = export_ilp(tables, 3)
    assert ' obj: 1 y_0_1_2_1' in text.splitlines()
    model = parse_lp(text)
    assert len([v for v in model.binaries if v.startswith('x_')]) == 6
    assert [v for v in model.binaries if v.startswith('y_')] == ['y_0_1_2_1']
    assert len(model.rows('anti_')) == 6
    assert len(model.rows('trans_')) == 6
    assert len(model.rows('xor')) == 2
    assert model.objective == {'y_0_1_2_1': 1}
    assert model.constant == 0

    # hand-solving: every sigma encodes a feasible point with its own objective
    for sigma in all_sigmas(3):
        values = assignment_for_sigma(model, sigma)
        assert model.feasible(values)
        assert model.evaluate(values) == objective_for_sigma(tables, sigma)
    best = assignment_for_sigma(model, SigmaOrdering.from_order([1, 0, 2]))
    assert model.evaluate(best) == 0


def test_export_rejects_cycles():
    model = parse_lp(export_ilp(compute_tables(three_category_example()), 3))
    cyclic = {'x_0_1': 1, 'x_1_2': 1, 'x_2_0': 1, 'x_1_0': 0, 'x_2_1': 0, 'x_0_2': 0}
    assert not model.feasible(cyclic)


def test_export_empty_and_constant():
    model = parse_lp(export_ilp(ResponsibilityTables(2), 2))
    assert model.objective == {}
    assert len(model.rows('anti_')) == 2 and model.rows('trans_') == []
    text = export_ilp(compute_tables(overtake_example()), 2)
    assert '\\ constant: 1' in text
    assert parse_lp(text).constant == 1


def test_parse_lp_errors():
    text = export_ilp(compute_tables(three_category_example()), 3)
    try:
        parse_lp(text.replace('End\n', ''))
        assert False, "missing End must raise"
    except ParseError:
        pass
    try:
        parse_lp(text.replace(' anti_0_1: x_0_1 + x_1_0 = 1', ' anti_0_1 x_0_1 + x_1_0'))
        assert False, "malformed row must raise"
    except ParseError:
        pass


def test_bipartite_crossings():
    edges = [('u1', 'v1'), ('u2', 'v2')]
    assert count_bipartite_crossings(['u1', 'u2'], ['v2', 'v1'], edges) == 1
    assert count_bipartite_crossings(['u1', 'u2'], ['v1', 'v2'], edges) == 0


def test_bipartite_reduction_k22():
    left, right = ['u1', 'u2'], ['v1', 'v2']
    edges = [(u, v) for u in left for v in right]
    inst = bipartite_reduction(left, right, edges)
    assert inst.sigma is None
    assert inst.n == 4 and inst.k == 4 and inst.m == 1
    assert inst.subjects[0] == 'u1-v1'
    assert validate_instance(inst) == []
    assert bipartite_crossing_number(left, right, edges) == 1
    assert optimal_sigma_exact(inst).objective == 1
    assert optimal_sigma_bruteforce(inst).objective == 1


def test_bipartite_reduction_orientation_and_errors():
    inst = bipartite_reduction(['a'], ['b', 'c'], [('b', 'a'), ('a', 'c')])
    assert inst.subjects == ('a-b', 'a-c')
    for edges in ([('a', 'd')], [('b', 'c')], [('a', 'b'), ('b', 'a')]):
        try:
            bipartite_reduction(['a'], ['b', 'c'], edges)
            assert False, f"{edges} must be rejected"
        except ValidationError:
            pass
    try:
        bipartite_reduction(['a', 'b'], ['b'], [])
        assert False, "overlapping sides must raise"
    except ValidationError:
        pass


if __name__ == '__main__':
    print("=" * 60)
    print("Sigma Optimizer Test Suite")
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
