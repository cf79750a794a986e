import pytest

from conftest import assert_stats_ledger

from frontier_search import solve
from frontier_search.problems import Knapsack, KnapsackInstance


def three_items():
    return Knapsack(KnapsackInstance(5, ((2, 3), (3, 4), (4, 5))))


def prefix(th, bits):
    y = th.initial()
    for b in bits:
        y = th.apply_move(y, b)
    return y


def test_initial_prefix_empty():
    th = three_items()
    root = th.initial()
    assert root.serial == () and root.level == 0
    assert root.weight == 0 and root.utility == 0


def test_split_is_binary_branch():
    th = three_items()
    children = th.split(prefix(th, (1,)))
    assert [c.serial for c in children] == [(1, 0), (1, 1)]


def test_split_blocks_overweight_in_branch():
    th = three_items()
    y = prefix(th, (1, 1))  # weight 5 of 5
    children = th.split(y)
    assert [c.serial for c in children] == [(1, 1, 0)]


def test_split_terminal_when_all_decided():
    th = three_items()
    assert th.split(prefix(th, (0, 0, 0))) == []


def test_extract_complete_prefix_only():
    th = three_items()
    assert th.extract(prefix(th, (1, 1))) is None
    assert th.extract(prefix(th, (1, 1, 0))) == frozenset((0, 1))


def test_feasibility_and_cost():
    th = three_items()
    assert th.feasible(frozenset((0, 1)))
    assert not th.feasible(frozenset((1, 2)))  # weight 7 over capacity 5
    assert not th.feasible(frozenset((5,)))  # unknown item
    assert th.cost(frozenset((0, 1))) == 7
    assert th.cost(frozenset()) == 0


def test_partial_cost_is_selected_utility():
    th = three_items()
    assert th.partial_cost(prefix(th, (1, 1))) == 7
    assert th.partial_cost(th.initial()) == 0


def test_semi_congruence_lighter_prefix():
    th = Knapsack(KnapsackInstance(10, ((3, 5), (4, 4))))
    light = prefix(th, (1, 0))  # weight 3
    heavy = prefix(th, (0, 1))  # weight 4
    assert th.semi_congruent(light, heavy)
    assert not th.semi_congruent(heavy, light)
    assert not th.semi_congruent(prefix(th, (1,)), heavy)  # different lengths


def test_dominates_lighter_and_more_useful():
    th = Knapsack(KnapsackInstance(10, ((3, 5), (4, 4))))
    assert th.dominates(prefix(th, (1, 0)), prefix(th, (0, 1)))
    y = prefix(th, (1, 1))
    assert th.dominates(y, y)


def test_dominance_key_is_prefix_length():
    th = three_items()
    assert th.dominance_key(prefix(th, (1, 0, 1))) == 3
    assert th.dominance_key(prefix(th, (1, 0))) != th.dominance_key(prefix(th, (1, 0, 1)))


def test_max_depth_is_item_count():
    assert Knapsack(KnapsackInstance(5, ((1, 1),) * 5)).max_depth() == 5


def test_solve_three_items():
    result = solve(three_items())
    assert result.optimal_cost == 7
    assert result.optima == {frozenset((0, 1))}
    assert_stats_ledger(result.stats)


def test_solve_zero_capacity():
    result = solve(Knapsack(KnapsackInstance(0, ((2, 3), (1, 1)))))
    assert result.optimal_cost == 0
    assert result.optima == {frozenset()}


def test_solve_exact_fill():
    result = solve(Knapsack(KnapsackInstance(4, ((4, 9),))))
    assert result.optimal_cost == 9
    assert result.optima == {frozenset((0,))}


def test_zero_weight_items_selectable_at_zero_capacity():
    result = solve(Knapsack(KnapsackInstance(0, ((0, 2), (1, 5)))))
    assert result.optimal_cost == 2
    assert result.optima == {frozenset((0,))}


def test_invalid_instances_rejected():
    with pytest.raises(ValueError):
        KnapsackInstance(-1, ())
    with pytest.raises(ValueError):
        KnapsackInstance(3, ((-1, 2),))
