import pytest

from conftest import assert_stats_ledger

from frontier_search import EngineConfig, Mode, GreedyViolation, solve
from frontier_search.problems import Graph, SinglePairShortestPath
from frontier_search.problems.graphs import InvalidNode


def theory(g, s=0, t=2):
    return SinglePairShortestPath(g, s, t)


def test_initial_is_empty_path(triangle):
    th = theory(triangle)
    root = th.initial()
    assert root.serial == () and root.level == 0
    assert root.end == 0 and root.cost == 0


def test_split_from_source(triangle):
    th = theory(triangle)
    children = th.split(th.initial())
    assert [c.serial for c in children] == [(0,), (2,)]
    assert all(c.level == 1 for c in children)


def test_split_avoids_revisits(triangle):
    # From the path along edge 0 (0-1), only the edge to the unvisited node
    # extends; the direct 0-2 edge does not touch the end node.
    th = theory(triangle)
    y = th.apply_move(th.initial(), 0)
    children = th.split(y)
    assert [c.serial for c in children] == [(0, 1)]


def test_split_terminal_space_empty(triangle):
    th = theory(triangle)
    y = th.apply_move(th.apply_move(th.initial(), 0), 1)
    assert th.split(y) == []


def test_extract_only_at_target(triangle):
    th = theory(triangle)
    y = th.apply_move(th.initial(), 0)
    assert th.extract(y) is None
    z = th.apply_move(y, 1)
    assert th.extract(z) == (0, 1)


def test_feasible_checks_contiguous_simple_path(triangle):
    th = theory(triangle)
    assert th.feasible((0, 1))
    assert th.feasible((2,))
    assert not th.feasible((1,))  # does not start at the source
    assert not th.feasible((0,))  # ends short of the target
    assert not th.feasible((0, 1, 2))  # returns to the start node
    assert not th.feasible((0, 99))  # unknown edge index


def test_cost_sums_weights(triangle):
    th = theory(triangle)
    assert th.cost((0, 1)) == 2
    assert th.cost((2,)) == 3
    assert th.cost(()) == 0


def test_partial_cost(triangle):
    th = theory(triangle)
    assert th.partial_cost(th.initial()) == 0
    assert th.partial_cost(th.apply_move(th.initial(), 0)) == 1


def test_semi_congruence_requires_same_end_and_no_extra_visits(diamond):
    th = theory(diamond, 0, 3)
    via1 = th.apply_move(th.apply_move(th.initial(), 0), 2)  # 0-1-3
    via2 = th.apply_move(th.apply_move(th.initial(), 1), 3)  # 0-2-3
    prefix = th.apply_move(th.initial(), 0)  # 0-1
    assert th.semi_congruent(via1, via1)
    # Same end node but neither visited set contains the other's.
    assert not th.semi_congruent(via1, via2)
    assert not th.semi_congruent(prefix, via1)  # different end nodes


def test_dominates_same_end_and_cheaper():
    g = Graph(3, ((0, 1, 1), (1, 2, 1), (0, 2, 5)))
    th = theory(g)
    cheap = th.apply_move(th.apply_move(th.initial(), 0), 1)
    dear = th.apply_move(th.initial(), 2)
    assert th.dominates(cheap, dear)
    assert not th.dominates(dear, cheap)
    assert th.dominates(cheap, cheap)


def test_dominance_key_is_end_node(triangle):
    th = theory(triangle)
    a = th.apply_move(th.initial(), 0)  # ends at 1
    b = th.apply_move(th.initial(), 2)  # ends at 2
    c = th.apply_move(a, 1)  # ends at 2
    assert th.dominance_key(b) == th.dominance_key(c) == 2
    assert th.dominance_key(a) != th.dominance_key(b)


def test_max_depth_is_edge_count():
    g = Graph(4, ((0, 1, 1), (1, 2, 1), (2, 3, 1), (0, 3, 1)))
    assert theory(g, 0, 3).max_depth() == 4


def test_invalid_nodes_rejected(triangle):
    with pytest.raises(InvalidNode):
        SinglePairShortestPath(triangle, 0, 7)
    with pytest.raises(InvalidNode):
        SinglePairShortestPath(triangle, -1, 2)


def test_unreachable_target_yields_empty_optima():
    g = Graph(3, ((0, 1, 1),))  # node 2 is isolated
    result = solve(theory(g, 0, 2))
    assert result.optimal_cost is None and result.optima == frozenset()
    assert_stats_ledger(result.stats)


def test_two_equal_cost_routes(diamond):
    # Both unit routes cost 2; equal-cost merging keeps one representative,
    # so the result is a nonempty subset of the true optimum set.
    th = theory(diamond, 0, 3)
    result = solve(th)
    assert result.optimal_cost == 2
    assert result.optima <= {(0, 2), (1, 3)}
    assert len(result.optima) >= 1


def test_parallel_edges_supported():
    g = Graph(2, ((0, 1, 5), (0, 1, 2)))
    result = solve(theory(g, 0, 1))
    assert result.optimal_cost == 2 and result.optima == {(1,)}


def test_zero_weight_edges(triangle):
    g = Graph(3, ((0, 1, 0), (1, 2, 0), (0, 2, 3)))
    result = solve(theory(g))
    assert result.optimal_cost == 0 and result.optima == {(0, 1)}


def test_greedy_mode_fails_on_wide_frontier(diamond):
    th = theory(diamond, 0, 3)
    with pytest.raises(GreedyViolation):
        solve(th, EngineConfig(mode=Mode.GREEDY))
