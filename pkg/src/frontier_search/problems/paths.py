"""Single-pair shortest path over simple paths.

Partial solutions are simple paths growing edge by edge from the source
node; a solution is extractable as soon as the path's end node is the
target.  Paths ending at the same node are compared by accumulated weight:
the cheaper one dominates, which keeps the frontier no wider than the node
count.  The relation deliberately ignores which interior nodes the paths
visited; that is safe in this engine because frontiers are level-synchronized
(equal edge counts), but it is stronger than what same-extension transfer
justifies, so ``semi_congruent`` additionally demands that the dominating
path's visited set is contained in the other's.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from ..theory import Direction, ProblemTheory
from .graphs import Graph, InvalidNode, adjacency


@dataclass(frozen=True, eq=False)
class PathDescriptor:
    """Simple path from the source, as a sequence of edge indices."""

    serial: tuple[int, ...]  # edge indices in walk order
    end: int
    visited: frozenset[int]
    cost: int

    @property
    def level(self) -> int:
        return len(self.serial)


class SinglePairShortestPath(ProblemTheory):
    """Find a minimum-weight simple path between two nodes."""

    direction = Direction.MINIMIZE
    strictly_ranked = False

    def __init__(self, graph: Graph, source: int, target: int):
        if not 0 <= source < graph.n:
            raise InvalidNode(f"source {source} out of range")
        if not 0 <= target < graph.n:
            raise InvalidNode(f"target {target} out of range")
        self.graph = graph
        self.source = source
        self.target = target
        self._adj = adjacency(graph)

    def initial(self) -> PathDescriptor:
        return PathDescriptor((), self.source, frozenset((self.source,)), 0)

    def child_moves(self, y: PathDescriptor) -> list[tuple[int, int]]:
        # Only edges hanging off the end node that reach an unvisited node;
        # anything else could never become a feasible path.
        moves = [
            (w, ei)
            for ei, other, w in self._adj[y.end]
            if other not in y.visited
        ]
        moves.sort(key=lambda mv: mv[1])
        return moves

    def apply_move(self, y: PathDescriptor, move: int) -> PathDescriptor:
        a, b, w = self.graph.edges[move]
        nxt = b if y.end == a else a
        return PathDescriptor(
            y.serial + (move,), nxt, y.visited | {nxt}, y.cost + w
        )

    def extract(self, y: PathDescriptor) -> Optional[tuple[int, ...]]:
        return y.serial if y.end == self.target else None

    def max_depth(self) -> int:
        return self.graph.m

    def feasible(self, z: tuple[int, ...]) -> bool:
        cur = self.source
        seen = {cur}
        for ei in z:
            if not 0 <= ei < self.graph.m:
                return False
            a, b, _ = self.graph.edges[ei]
            if cur == a:
                nxt = b
            elif cur == b:
                nxt = a
            else:
                return False
            if nxt in seen:
                return False
            seen.add(nxt)
            cur = nxt
        return cur == self.target

    def cost(self, z: tuple[int, ...]) -> int:
        return sum(self.graph.edges[ei][2] for ei in z)

    def partial_cost(self, y: PathDescriptor) -> int:
        return y.cost

    def semi_congruent(self, y: PathDescriptor, other: PathDescriptor) -> bool:
        return y.end == other.end and y.visited <= other.visited

    def dominates(self, y: PathDescriptor, other: PathDescriptor) -> bool:
        return y.end == other.end and y.cost <= other.cost

    def dominance_key(self, y: PathDescriptor) -> int:
        return y.end

    def equivalence_key(self, y: PathDescriptor) -> int:
        # Same end node (the dominance key) and equal cost is exactly mutual
        # dominance.
        return y.cost
