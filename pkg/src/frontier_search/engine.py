"""Level-by-level frontier search with dominance pruning.

The solver keeps one frontier of undominated, pairwise-distinct descriptors
per depth level and runs each level through a fixed pipeline:

    expand -> dedupe -> reduce_equivalent -> filter_dominated -> collect_locals

Feasible solutions are read off each post-prune frontier (including the
initial one) and folded into a running optimum, which is equivalent to
applying the cost-extremal filter once at the end.  The search stops when the
frontier empties or the depth bound is reached.

When a theory declares ``strictly_ranked`` and the frontier is a singleton,
the pipeline collapses to picking the single cheapest child (canonical order
breaking ties) without materializing the rest; the outcome, including all
statistics, is identical to the generic pipeline.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from enum import Enum
from typing import Any, Iterable, Optional

from .theory import Direction, ProblemTheory, Solution


class Mode(Enum):
    EXHAUSTIVE = "exhaustive"
    GREEDY = "greedy"


class GreedyFallback(Enum):
    #: Raise GreedyViolation when a greedy-mode frontier is wider than 1.
    FAIL = "fail"
    #: Keep searching with the full undominated frontier instead.
    FALLBACK_EXHAUSTIVE = "fallback-exhaustive"


class GreedyViolation(RuntimeError):
    """Greedy mode found an undominated frontier wider than one."""

    def __init__(self, level: int, width: int):
        super().__init__(f"undominated frontier has width {width} at level {level}")
        self.level = level
        self.width = width


@dataclass(frozen=True)
class EngineConfig:
    mode: Mode = Mode.EXHAUSTIVE
    greedy_violation: GreedyFallback = GreedyFallback.FAIL
    #: Maximum split depth; defaults to the theory's own bound.
    depth_bound: Optional[int] = None
    collect_per_level_stats: bool = True
    #: Worker threads used to split frontier members in parallel.  Outputs
    #: are identical for any value; 1 keeps everything on the calling thread.
    threads: int = 1


@dataclass(frozen=True)
class Frontier:
    """One level's undominated spaces, canonically ordered and duplicate-free."""

    level: int
    spaces: tuple[Any, ...]

    @property
    def width(self) -> int:
        return len(self.spaces)


@dataclass(frozen=True)
class SearchStats:
    levels: int
    generated: int
    duplicates_removed: int
    equivalence_merged: int
    dominated_pruned: int
    locals_found: int
    #: One (raw_width, undominated_width) pair per expanded level.
    per_level_width: tuple[tuple[int, int], ...]

    def accounting_identity_holds(self) -> bool:
        """Every generated child is removed exactly once or survives."""
        survived = sum(undom for _, undom in self.per_level_width)
        return (
            self.generated
            == self.duplicates_removed
            + self.equivalence_merged
            + self.dominated_pruned
            + survived
        )


@dataclass(frozen=True)
class SolveResult:
    #: All optimal feasible solutions found; a subset of the true optimum set,
    #: nonempty whenever any feasible solution is reachable within the bound.
    optima: frozenset
    optimal_cost: Optional[int]
    stats: SearchStats


# ---------------------------------------------------------------------------
# pipeline stages
# ---------------------------------------------------------------------------


def expand(theory: ProblemTheory, spaces: Iterable[Any], threads: int = 1) -> list[Any]:
    """All children of the frontier, concatenated in canonical member order."""
    spaces = list(spaces)
    if threads > 1 and len(spaces) > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            batches = list(pool.map(theory.split, spaces))
    else:
        batches = [theory.split(y) for y in spaces]
    children: list[Any] = []
    for batch in batches:
        children.extend(batch)
    return children


def dedupe(children: Iterable[Any]) -> tuple[list[Any], int]:
    """Drop canonical-equality duplicates, keeping first occurrences."""
    seen: set[tuple[int, ...]] = set()
    kept: list[Any] = []
    removed = 0
    for child in children:
        if child.serial in seen:
            removed += 1
        else:
            seen.add(child.serial)
            kept.append(child)
    return kept, removed


def reduce_equivalent(theory: ProblemTheory, spaces: list[Any]) -> tuple[list[Any], int]:
    """Collapse mutual-dominance classes to their canonically smallest member.

    ``spaces`` must be deduped and canonically sorted, so the first member
    seen in each class is the one kept.
    """
    merged = 0
    reps: list[Any] = []
    if theory.equivalence_key is not None:
        seen_keys: set = set()
        for y in spaces:
            k = (theory.dominance_key(y), theory.equivalence_key(y))
            if k in seen_keys:
                merged += 1
            else:
                seen_keys.add(k)
                reps.append(y)
        return reps, merged
    # Pairwise fallback: compare against the representative of every class
    # found so far within the same dominance-key group.
    groups: dict = {}
    for y in spaces:
        group = groups.setdefault(theory.dominance_key(y), [])
        for rep in group:
            if theory.dominates(y, rep) and theory.dominates(rep, y):
                merged += 1
                break
        else:
            group.append(y)
            reps.append(y)
    return reps, merged


def filter_dominated(theory: ProblemTheory, reps: list[Any]) -> tuple[list[Any], int]:
    """Remove every member strictly dominated by another representative.

    ``reps`` must be free of mutual dominances, which makes survival
    order-independent.
    """
    groups: dict = {}
    for y in reps:
        groups.setdefault(theory.dominance_key(y), []).append(y)
    survivors: list[Any] = []
    pruned = 0
    for y in reps:
        group = groups[theory.dominance_key(y)]
        if any(other is not y and theory.dominates(other, y) for other in group):
            pruned += 1
        else:
            survivors.append(y)
    return survivors, pruned


def collect_locals(theory: ProblemTheory, spaces: Iterable[Any]) -> list[tuple[Solution, int]]:
    """Feasible solutions extractable directly from frontier members."""
    found = []
    for y in spaces:
        z = theory.extract(y)
        if z is not None and theory.feasible(z):
            found.append((z, theory.cost(z)))
    return found


def opt_c(
    candidates: Iterable[tuple[Solution, int]], direction: Direction
) -> tuple[Optional[int], frozenset]:
    """Cost-extremal subset of a candidate set; ties are all retained."""
    best_cost: Optional[int] = None
    best: set = set()
    for z, c in candidates:
        if best_cost is None or direction.better(c, best_cost):
            best_cost = c
            best = {z}
        elif c == best_cost:
            best.add(z)
    return best_cost, frozenset(best)


def check_greedy(spaces: list[Any]) -> Optional[int]:
    """None when the frontier qualifies as a greedy step, else its width."""
    return None if len(spaces) <= 1 else len(spaces)


# ---------------------------------------------------------------------------
# solver
# ---------------------------------------------------------------------------


def _merge_best(
    best_cost: Optional[int],
    best: set,
    found: list[tuple[Solution, int]],
    direction: Direction,
) -> tuple[Optional[int], set]:
    for z, c in found:
        if best_cost is None or direction.better(c, best_cost):
            best_cost = c
            best = {z}
        elif c == best_cost:
            best.add(z)
    return best_cost, best


def _greedy_step(theory: ProblemTheory, parent: Any) -> tuple[Optional[Any], int]:
    """Cheapest child of ``parent`` under the theory's strict ranking.

    Ties on cost increment fall back to the smallest move, which for
    move-per-element serializations is exactly the canonically smallest
    child.  Returns (child, number of candidate moves).
    """
    moves = theory.child_moves(parent)
    if not moves:
        return None, 0
    inc, move = min(moves)
    return theory.apply_move(parent, move), len(moves)


def solve(theory: ProblemTheory, config: EngineConfig | None = None) -> SolveResult:
    """Run the search to completion and return all optima found with stats.

    Deterministic for fixed inputs.  Raises GreedyViolation in greedy mode
    (with the fail policy) as soon as an undominated frontier is wider than
    one; an exhausted depth bound is not an error and yields empty optima.
    """
    config = config or EngineConfig()
    depth_bound = (
        config.depth_bound if config.depth_bound is not None else theory.max_depth()
    )

    generated = duplicates = merged = pruned = locals_found = 0
    rows: list[tuple[int, int]] = []
    levels = 0

    frontier = Frontier(0, (theory.initial(),))
    found = collect_locals(theory, frontier.spaces)
    locals_found += len(found)
    best_cost, best = _merge_best(None, set(), found, theory.direction)

    while frontier.spaces and frontier.level < depth_bound:
        levels += 1
        if theory.strictly_ranked and frontier.width == 1:
            child, n_moves = _greedy_step(theory, frontier.spaces[0])
            generated += n_moves
            if child is None:
                survivors: list[Any] = []
            else:
                survivors = [child]
                pruned += n_moves - 1
            raw = n_moves
        else:
            children = expand(theory, frontier.spaces, config.threads)
            raw = len(children)
            generated += raw
            children, n_dup = dedupe(children)
            duplicates += n_dup
            # Canonical order before reduction keeps the result independent
            # of expansion interleaving.
            children.sort(key=lambda y: y.serial)
            reps, n_merged = reduce_equivalent(theory, children)
            merged += n_merged
            survivors, n_pruned = filter_dominated(theory, reps)
            pruned += n_pruned

        if config.mode is Mode.GREEDY:
            width = check_greedy(survivors)
            if width is not None and config.greedy_violation is GreedyFallback.FAIL:
                raise GreedyViolation(frontier.level + 1, width)

        if config.collect_per_level_stats:
            rows.append((raw, len(survivors)))
        frontier = Frontier(frontier.level + 1, tuple(survivors))
        found = collect_locals(theory, frontier.spaces)
        locals_found += len(found)
        best_cost, best = _merge_best(best_cost, best, found, theory.direction)

    stats = SearchStats(
        levels=levels,
        generated=generated,
        duplicates_removed=duplicates,
        equivalence_merged=merged,
        dominated_pruned=pruned,
        locals_found=locals_found,
        per_level_width=tuple(rows),
    )
    return SolveResult(optima=frozenset(best), optimal_cost=best_cost, stats=stats)
