"""Shared helpers: small instances, descriptor enumeration, stats checks."""

from __future__ import annotations

import pytest

from frontier_search.problems import Graph
from frontier_search.theory import ProblemTheory


def enumerate_levels(theory: ProblemTheory, max_level: int | None = None):
    """All reachable descriptors grouped by level, duplicates removed."""
    if max_level is None:
        max_level = theory.max_depth()
    levels = [[theory.initial()]]
    while len(levels) - 1 < max_level and levels[-1]:
        nxt: dict = {}
        for y in levels[-1]:
            for child in theory.split(y):
                nxt.setdefault(child.serial, child)
        if not nxt:
            break
        levels.append(list(nxt.values()))
    return levels


def sibling_families(theory: ProblemTheory, max_level: int | None = None):
    """Children grouped by parent, for every reachable parent."""
    families = []
    for layer in enumerate_levels(theory, max_level):
        for y in layer:
            children = theory.split(y)
            if len(children) > 1:
                families.append(children)
    return families


def assert_stats_ledger(stats) -> None:
    assert stats.accounting_identity_holds(), stats


@pytest.fixture
def triangle() -> Graph:
    """Nodes 0(start)-1-2(goal); direct edge is costlier than the detour."""
    return Graph(3, ((0, 1, 1), (1, 2, 1), (0, 2, 3)))


@pytest.fixture
def diamond() -> Graph:
    """Two disjoint unit-weight routes from node 0 to node 3."""
    return Graph(4, ((0, 1, 1), (0, 2, 1), (1, 3, 1), (2, 3, 1)))


@pytest.fixture
def weighted_triangle() -> Graph:
    return Graph(3, ((0, 1, 1), (1, 2, 2), (0, 2, 3)))
