"""Problem-theory interface for dominance-pruned frontier search.

A problem is plugged into the search engine as a ``ProblemTheory``: a bundle
of pure operations over immutable partial-solution descriptors.  The engine
only ever talks to this interface; everything problem-specific (what a
descriptor is, how it splits, when a complete solution can be read off, how
partial solutions dominate each other) lives in the theory object.

Descriptors must expose two attributes:

``serial``
    A tuple of ints that canonically serializes the descriptor.  Two
    descriptors denote the same search space iff their serials are equal,
    and the lexicographic order on serials is the canonical total order used
    for deterministic tie-breaking throughout the engine.

``level``
    Number of splits separating the descriptor from the initial space.
"""

from __future__ import annotations

from abc import ABC, abstractmethod
from enum import Enum
from typing import Any, Callable, Hashable, Optional, Protocol, runtime_checkable


class Direction(Enum):
    """Optimization sense.

    Maximization is realized by flipping comparisons; stored costs are never
    negated, so costs stay non-negative ints in both directions.
    """

    MINIMIZE = "minimize"
    MAXIMIZE = "maximize"

    def better(self, a: int, b: int) -> bool:
        """Strictly better."""
        return a < b if self is Direction.MINIMIZE else a > b

    def at_least_as_good(self, a: int, b: int) -> bool:
        return a <= b if self is Direction.MINIMIZE else a >= b


class DominanceVerdict(Enum):
    """Outcome of testing dominance between two descriptors in both directions.

    ``LEFT_DOMINATES``/``RIGHT_DOMINATES`` are one-sided; ``MUTUAL`` holds iff
    the pairwise test succeeds in both directions.
    """

    LEFT_DOMINATES = "left"
    RIGHT_DOMINATES = "right"
    MUTUAL = "mutual"
    INCOMPARABLE = "incomparable"


@runtime_checkable
class SpaceDescriptor(Protocol):
    """Structural type of the engine's search-space descriptors."""

    serial: tuple[int, ...]

    @property
    def level(self) -> int: ...


# A move is the problem-specific piece of information consumed by one split:
# an edge index for the graph problems, a 0/1 decision for knapsack.
Move = Hashable
Solution = Any


class ProblemTheory(ABC):
    """Operations instantiating the search theory for one problem instance.

    All methods are pure functions of their arguments; theories and
    descriptors are immutable after construction and safe to share across
    threads.  The problem input itself is bound at construction time and
    validated there.
    """

    #: Optimization sense used by the engine when comparing solution costs
    #: and by the default dominance test.
    direction: Direction = Direction.MINIMIZE

    #: True when ``dominates`` is a total strict ranking on the children of
    #: any one frontier member, keyed by ``(partial_cost, serial)``.  The
    #: engine then keeps exactly one child per level (the greedy choice)
    #: without materializing the others.
    strictly_ranked: bool = False

    #: Optional map from descriptor to a hashable key such that two same-level
    #: descriptors mutually dominate iff their keys are equal.  ``None`` makes
    #: the engine fall back to pairwise mutual-dominance tests.
    equivalence_key: Optional[Callable[[Any], Hashable]] = None

    # -- space structure ---------------------------------------------------

    @abstractmethod
    def initial(self) -> Any:
        """The level-0 descriptor covering the whole candidate space."""

    @abstractmethod
    def child_moves(self, y: Any) -> list[tuple[int, Move]]:
        """All immediate split moves of ``y`` with their cost increments.

        Returns ``(increment, move)`` pairs such that applying ``move``
        yields a child with ``partial_cost(child) == partial_cost(y) +
        increment``.  Pairs are listed in canonical child order; the list is
        empty for terminal spaces.
        """

    @abstractmethod
    def apply_move(self, y: Any, move: Move) -> Any:
        """The child of ``y`` produced by one split move."""

    def split(self, y: Any) -> list[Any]:
        """All immediate subspaces of ``y``, in canonical order."""
        return [self.apply_move(y, move) for _, move in self.child_moves(y)]

    @abstractmethod
    def extract(self, y: Any) -> Optional[Solution]:
        """The complete candidate solution ``y`` denotes, if any."""

    @abstractmethod
    def max_depth(self) -> int:
        """Upper bound on split depth; guarantees the search terminates."""

    # -- specification of correct outputs ----------------------------------

    @abstractmethod
    def feasible(self, z: Solution) -> bool:
        """Whether ``z`` is a correct output for the bound problem input."""

    @abstractmethod
    def cost(self, z: Solution) -> int:
        """Cost of a feasible solution."""

    @abstractmethod
    def partial_cost(self, y: Any) -> int:
        """Cost of the partial solution ``y`` under the same cost form.

        Compositional with splitting: for every child move ``(inc, m)`` of
        ``y``, ``partial_cost(apply_move(y, m)) == partial_cost(y) + inc``.
        """

    # -- dominance ----------------------------------------------------------

    def semi_congruent(self, y: Any, other: Any) -> bool:
        """Sufficient condition for extension transfer.

        When true, every sequence of split moves that completes ``other``
        into a feasible solution can be replayed on ``y`` and completes it
        too.  Only called on same-level descriptors (or whatever narrower
        scope the concrete theory documents).  Default: canonical equality.
        """
        return y.serial == other.serial

    def dominates(self, y: Any, other: Any) -> bool:
        """Pruning preorder: ``other`` may be dropped when ``y`` dominates it.

        Default implementation: semi-congruent and at least as cheap (flipped
        under maximization).  Problems may override with a stronger derived
        relation.
        """
        if not self.semi_congruent(y, other):
            return False
        return self.direction.at_least_as_good(
            self.partial_cost(y), self.partial_cost(other)
        )

    def dominance_key(self, y: Any) -> Hashable:
        """Sound partition key: ``dominates(y, y')`` implies equal keys.

        The engine restricts pairwise dominance tests to same-key groups.
        Default: a single group.
        """
        return None


def dominance_verdict(theory: ProblemTheory, left: Any, right: Any) -> DominanceVerdict:
    """Classify a pair of descriptors under the theory's dominance relation."""
    lr = theory.dominates(left, right)
    rl = theory.dominates(right, left)
    if lr and rl:
        return DominanceVerdict.MUTUAL
    if lr:
        return DominanceVerdict.LEFT_DOMINATES
    if rl:
        return DominanceVerdict.RIGHT_DOMINATES
    return DominanceVerdict.INCOMPARABLE


class IdentityDominance(ProblemTheory):
    """Wrapper disabling a theory's dominance (kept reflexive only).

    Used to measure how much work pruning does: the engine degenerates to
    plain duplicate-free breadth-first enumeration, which must still reach
    the same optimal cost.
    """

    strictly_ranked = False
    equivalence_key = None

    def __init__(self, base: ProblemTheory):
        self.base = base
        self.direction = base.direction

    def initial(self):
        return self.base.initial()

    def child_moves(self, y):
        return self.base.child_moves(y)

    def apply_move(self, y, move):
        return self.base.apply_move(y, move)

    def extract(self, y):
        return self.base.extract(y)

    def max_depth(self):
        return self.base.max_depth()

    def feasible(self, z):
        return self.base.feasible(z)

    def cost(self, z):
        return self.base.cost(z)

    def partial_cost(self, y):
        return self.base.partial_cost(y)

    def semi_congruent(self, y, other):
        return y.serial == other.serial

    def dominates(self, y, other):
        return y.serial == other.serial

    def dominance_key(self, y):
        return self.base.dominance_key(y)
