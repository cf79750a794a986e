"""Tree-growing problems: shortest-path tree and minimum spanning tree.

All three theories here share the same shape: a partial solution is an
acyclic edge set that grows by one edge per level until it spans the graph,
and the dominance relation is a strict ranking of the children of a common
parent, so the undominated frontier always has width one (the greedy choice).
Ranking compares ``(partial_cost, serial)``, which for children of one parent
is exactly "cheapest added element, smallest edge index on ties":

* minimum spanning tree, cut variant: grow one tree from a root along its
  lightest crossing edge (Prim's scheme);
* minimum spanning tree, forest variant: merge components along the lightest
  edge joining two of them (Kruskal's scheme);
* shortest-path tree: attach the outside node whose root path through the
  tree is shortest (Dijkstra's scheme); the tree cost is the sum of all
  root-path costs, so each attachment contributes the new node's distance.

The ranking only means anything between siblings; ``dominates`` therefore
answers False for same-level descriptors that do not share a parent.  Its
guarantee is carried by the surviving minimum: the cheapest child of any
parent extends to a completion at least as good as every sibling's (the
classic exchange argument), which is exactly what keeping a single
undominated child per level requires.
"""

from __future__ import annotations

from bisect import insort
from dataclasses import dataclass
from typing import Mapping, Optional

from ..theory import Direction, ProblemTheory
from .graphs import Graph, InvalidNode, adjacency, require_connected


@dataclass(frozen=True, eq=False)
class TreeDescriptor:
    """Tree grown from a root, as a set of edge indices.

    ``dist`` caches root-path costs and is only populated by the
    shortest-path-tree theory.
    """

    serial: tuple[int, ...]  # sorted edge indices
    edges: frozenset[int]
    nodes: frozenset[int]
    cost: int
    dist: Optional[Mapping[int, int]] = None

    @property
    def level(self) -> int:
        return len(self.serial)


@dataclass(frozen=True, eq=False)
class ForestDescriptor:
    """Spanning forest as a set of edge indices plus its node partition.

    ``comp[v]`` is the smallest node id in v's component, so equal partitions
    compare equal componentwise.
    """

    serial: tuple[int, ...]
    edges: frozenset[int]
    comp: tuple[int, ...]
    cost: int

    @property
    def level(self) -> int:
        return len(self.serial)


def _with_edge(serial: tuple[int, ...], ei: int) -> tuple[int, ...]:
    out = list(serial)
    insort(out, ei)
    return tuple(out)


def is_spanning_tree(graph: Graph, z: frozenset[int]) -> bool:
    """Acyclic, connected, covers every node; decided by union-find."""
    if len(z) != graph.n - 1:
        return False
    parent = list(range(graph.n))

    def find(v: int) -> int:
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    for ei in z:
        if not 0 <= ei < graph.m:
            return False
        a, b, _ = graph.edges[ei]
        ra, rb = find(a), find(b)
        if ra == rb:
            return False
        parent[ra] = rb
    return True


def tree_distances(graph: Graph, z: frozenset[int], source: int) -> dict[int, int]:
    """Root-path cost of every node in the tree ``z``, starting at ``source``."""
    adj: dict[int, list[tuple[int, int]]] = {}
    for ei in z:
        a, b, w = graph.edges[ei]
        adj.setdefault(a, []).append((b, w))
        adj.setdefault(b, []).append((a, w))
    dist = {source: 0}
    stack = [source]
    while stack:
        u = stack.pop()
        for v, w in adj.get(u, ()):
            if v not in dist:
                dist[v] = dist[u] + w
                stack.append(v)
    return dist


class _TreeGrowthTheory(ProblemTheory):
    """Shared machinery for the rooted tree-growing theories."""

    direction = Direction.MINIMIZE
    strictly_ranked = True

    def __init__(self, graph: Graph, root: int):
        if not 0 <= root < graph.n:
            raise InvalidNode(f"root {root} out of range")
        require_connected(graph)
        self.graph = graph
        self.root = root
        self._adj = adjacency(graph)

    def _crossing(self, y: TreeDescriptor) -> list[tuple[int, int, int]]:
        """Edges with exactly one endpoint inside, as (ei, inside, outside)."""
        out = [
            (ei, u, v)
            for u in y.nodes
            for ei, v, _ in self._adj[u]
            if v not in y.nodes
        ]
        out.sort()
        return out

    def extract(self, y: TreeDescriptor) -> Optional[frozenset[int]]:
        return y.edges if len(y.nodes) == self.graph.n else None

    def max_depth(self) -> int:
        return self.graph.n - 1

    def feasible(self, z: frozenset[int]) -> bool:
        return is_spanning_tree(self.graph, z)

    def partial_cost(self, y: TreeDescriptor) -> int:
        return y.cost

    def semi_congruent(self, y: TreeDescriptor, other: TreeDescriptor) -> bool:
        # Equal reached-node sets leave identical crossing-edge choices, so
        # any completing move sequence transfers verbatim.
        return y.nodes == other.nodes

    def _shared_parent_valid(self, shared: frozenset[int]) -> bool:
        """Whether an edge set is a reachable tree descriptor (rooted, connected)."""
        if not shared:
            return True
        seen: dict[int, int] = {}
        adj: dict[int, list[int]] = {}
        for ei in shared:
            a, b, _ = self.graph.edges[ei]
            adj.setdefault(a, []).append(b)
            adj.setdefault(b, []).append(a)
        if self.root not in adj:
            return False
        stack = [self.root]
        reached = {self.root}
        while stack:
            u = stack.pop()
            for v in adj[u]:
                if v not in reached:
                    reached.add(v)
                    stack.append(v)
        return len(reached) == len(shared) + 1 and reached == set(adj)

    def dominates(self, y: TreeDescriptor, other: TreeDescriptor) -> bool:
        # The ranking compares children of one parent; unrelated same-level
        # trees are incomparable.
        if y.serial == other.serial:
            return True
        if len(y.edges - other.edges) != 1 or len(other.edges - y.edges) != 1:
            return False
        if not self._shared_parent_valid(y.edges & other.edges):
            return False
        return (y.cost, y.serial) <= (other.cost, other.serial)

    def equivalence_key(self, y: TreeDescriptor):
        # Mutual dominance would force equal (cost, serial), i.e. identity.
        return y.serial


class PrimSpanningTree(_TreeGrowthTheory):
    """Minimum spanning tree grown from a root node along cut edges."""

    def initial(self) -> TreeDescriptor:
        return TreeDescriptor((), frozenset(), frozenset((self.root,)), 0)

    def child_moves(self, y: TreeDescriptor) -> list[tuple[int, int]]:
        return [(self.graph.edges[ei][2], ei) for ei, _, _ in self._crossing(y)]

    def apply_move(self, y: TreeDescriptor, move: int) -> TreeDescriptor:
        a, b, w = self.graph.edges[move]
        new = b if a in y.nodes else a
        return TreeDescriptor(
            _with_edge(y.serial, move),
            y.edges | {move},
            y.nodes | {new},
            y.cost + w,
        )

    def cost(self, z: frozenset[int]) -> int:
        return sum(self.graph.edges[ei][2] for ei in z)


class ShortestPathTree(_TreeGrowthTheory):
    """Tree of minimum-cost root paths from a source to every node.

    The cost of a (partial) tree is the sum of the root-path costs of all its
    nodes, so attaching node v through edge (u, v) contributes
    ``dist(u) + w``; the greedy child attaches the node closest to the source.
    """

    def initial(self) -> TreeDescriptor:
        return TreeDescriptor(
            (), frozenset(), frozenset((self.root,)), 0, {self.root: 0}
        )

    def child_moves(self, y: TreeDescriptor) -> list[tuple[int, int]]:
        assert y.dist is not None
        return [
            (y.dist[u] + self.graph.edges[ei][2], ei)
            for ei, u, _ in self._crossing(y)
        ]

    def apply_move(self, y: TreeDescriptor, move: int) -> TreeDescriptor:
        assert y.dist is not None
        a, b, w = self.graph.edges[move]
        u, new = (a, b) if a in y.nodes else (b, a)
        d = y.dist[u] + w
        dist = dict(y.dist)
        dist[new] = d
        return TreeDescriptor(
            _with_edge(y.serial, move),
            y.edges | {move},
            y.nodes | {new},
            y.cost + d,
            dist,
        )

    def cost(self, z: frozenset[int]) -> int:
        # Recomputed from scratch, independently of descriptor caches.
        return sum(tree_distances(self.graph, z, self.root).values())

    def distances(self, z: frozenset[int]) -> dict[int, int]:
        return tree_distances(self.graph, z, self.root)


class KruskalSpanningTree(ProblemTheory):
    """Minimum spanning tree built by merging forest components."""

    direction = Direction.MINIMIZE
    strictly_ranked = True

    def __init__(self, graph: Graph):
        require_connected(graph)
        self.graph = graph

    def initial(self) -> ForestDescriptor:
        return ForestDescriptor((), frozenset(), tuple(range(self.graph.n)), 0)

    def child_moves(self, y: ForestDescriptor) -> list[tuple[int, int]]:
        return [
            (w, ei)
            for ei, (a, b, w) in enumerate(self.graph.edges)
            if y.comp[a] != y.comp[b]
        ]

    def apply_move(self, y: ForestDescriptor, move: int) -> ForestDescriptor:
        a, b, w = self.graph.edges[move]
        ca, cb = y.comp[a], y.comp[b]
        keep, drop = (ca, cb) if ca < cb else (cb, ca)
        comp = tuple(keep if c == drop else c for c in y.comp)
        return ForestDescriptor(
            _with_edge(y.serial, move), y.edges | {move}, comp, y.cost + w
        )

    def extract(self, y: ForestDescriptor) -> Optional[frozenset[int]]:
        return y.edges if y.level == self.graph.n - 1 else None

    def max_depth(self) -> int:
        return self.graph.n - 1

    def feasible(self, z: frozenset[int]) -> bool:
        return is_spanning_tree(self.graph, z)

    def cost(self, z: frozenset[int]) -> int:
        return sum(self.graph.edges[ei][2] for ei in z)

    def partial_cost(self, y: ForestDescriptor) -> int:
        return y.cost

    def semi_congruent(self, y: ForestDescriptor, other: ForestDescriptor) -> bool:
        # Equal partitions leave identical joining-edge choices.
        return y.comp == other.comp

    def dominates(self, y: ForestDescriptor, other: ForestDescriptor) -> bool:
        if y.serial == other.serial:
            return True
        if len(y.edges - other.edges) != 1 or len(other.edges - y.edges) != 1:
            return False
        # Any sub-forest is a reachable descriptor, so single-edge symmetric
        # difference already makes them siblings.
        return (y.cost, y.serial) <= (other.cost, other.serial)

    def equivalence_key(self, y: ForestDescriptor):
        return y.serial
