"""0-1 knapsack: maximize utility within a weight capacity.

Partial solutions decide items in index order, so a descriptor is a prefix
of in/out bits.  Prefixes that decided the same items compare by weight and
utility: lighter-and-at-least-as-useful dominates, which is exactly the
default semi-congruence-plus-cost rule under maximization.  The undominated
frontier is the strict Pareto front over (weight, utility), at most one
entry per distinct reachable weight.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from ..theory import Direction, ProblemTheory


@dataclass(frozen=True)
class KnapsackInstance:
    capacity: int
    items: tuple[tuple[int, int], ...]  # (weight, utility)

    def __post_init__(self):
        if self.capacity < 0:
            raise ValueError(f"capacity must be non-negative, got {self.capacity}")
        for i, (w, u) in enumerate(self.items):
            if w < 0 or u < 0:
                raise ValueError(f"item {i}: negative weight or utility")

    @property
    def n(self) -> int:
        return len(self.items)


@dataclass(frozen=True, eq=False)
class KnapsackDescriptor:
    """Decisions for the first ``level`` items, one bit per item."""

    serial: tuple[int, ...]  # 0 = out, 1 = in
    weight: int
    utility: int

    @property
    def level(self) -> int:
        return len(self.serial)


class Knapsack(ProblemTheory):

    direction = Direction.MAXIMIZE
    strictly_ranked = False

    def __init__(self, instance: KnapsackInstance):
        self.instance = instance

    def initial(self) -> KnapsackDescriptor:
        return KnapsackDescriptor((), 0, 0)

    def child_moves(self, y: KnapsackDescriptor) -> list[tuple[int, int]]:
        k = y.level
        if k == self.instance.n:
            return []
        w, u = self.instance.items[k]
        moves = [(0, 0)]
        if y.weight + w <= self.instance.capacity:
            moves.append((u, 1))
        return moves

    def apply_move(self, y: KnapsackDescriptor, move: int) -> KnapsackDescriptor:
        w, u = self.instance.items[y.level]
        if move:
            return KnapsackDescriptor(y.serial + (1,), y.weight + w, y.utility + u)
        return KnapsackDescriptor(y.serial + (0,), y.weight, y.utility)

    def extract(self, y: KnapsackDescriptor) -> Optional[frozenset[int]]:
        if y.level != self.instance.n:
            return None
        return frozenset(i for i, bit in enumerate(y.serial) if bit)

    def max_depth(self) -> int:
        return self.instance.n

    def feasible(self, z: frozenset[int]) -> bool:
        if any(not 0 <= i < self.instance.n for i in z):
            return False
        return sum(self.instance.items[i][0] for i in z) <= self.instance.capacity

    def cost(self, z: frozenset[int]) -> int:
        return sum(self.instance.items[i][1] for i in z)

    def partial_cost(self, y: KnapsackDescriptor) -> int:
        return y.utility

    def semi_congruent(self, y: KnapsackDescriptor, other: KnapsackDescriptor) -> bool:
        # Same decided prefix length and no heavier: whatever still fits on
        # top of ``other`` fits on top of ``y``.
        return y.level == other.level and y.weight <= other.weight

    # dominates: inherited default (semi-congruent and utility at least as high)

    def dominance_key(self, y: KnapsackDescriptor) -> int:
        return y.level

    def equivalence_key(self, y: KnapsackDescriptor) -> tuple[int, int]:
        # Mutual dominance is exactly equal weight and equal utility.
        return (y.weight, y.utility)
