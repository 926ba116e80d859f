"""Exact minimum-transversal (hitting set) oracle over edge-set families.

This is the package's independent referee: a branch-and-bound search that
enumerates ALL minimum-cardinality edge sets meeting every member of a
family.  Applying it to the simple perfect matchings re-derives the
blockers; applying it again re-derives the semi-simple matchings; a third
application lands back on the blockers.
"""

from __future__ import annotations

import os
from dataclasses import dataclass

from .errors import BudgetExceededError, CGGError, DomainError
from .geometry import EdgeSet, GraphContext, edge_at
from .matchings import Family, enumerate_spms

DEFAULT_NODE_BUDGET = 10 ** 9
DEFAULT_ORACLE_LIMIT = 5
NODE_BUDGET_ENV = "CGG_MAX_NODES"


def node_budget_from_env(default: int = DEFAULT_NODE_BUDGET) -> int:
    """The node-count ceiling, honoring the CGG_MAX_NODES environment variable."""
    raw = os.environ.get(NODE_BUDGET_ENV)
    if raw is None:
        return default
    try:
        value = int(raw)
    except ValueError as exc:
        raise DomainError(f"{NODE_BUDGET_ENV} must be an integer, got {raw!r}") from exc
    if value <= 0:
        raise DomainError(f"{NODE_BUDGET_ENV} must be positive, got {value}")
    return value


@dataclass(frozen=True)
class TransversalProblem:
    """A family of non-empty edge sets to be met by a minimum candidate set."""

    family: Family

    def __post_init__(self) -> None:
        if len(self.family) == 0:
            raise DomainError("transversal problems need a non-empty family")
        if any(len(member) == 0 for member in self.family):
            raise DomainError("transversal problems forbid empty family members")

    @property
    def ctx(self) -> GraphContext:
        return self.family.ctx


@dataclass(frozen=True)
class TransversalSolution:
    """All minimum transversals plus the search statistics that produced them."""

    family: Family
    min_size: int
    nodes: int

    @property
    def solutions(self) -> int:
        return len(self.family)

    def stats(self) -> dict:
        return {"min_size": self.min_size, "solutions": self.solutions, "nodes": self.nodes}


def hits_all(candidate: EdgeSet, family: Family) -> bool:
    """True iff the candidate shares at least one edge with every member."""
    if candidate.ctx.m != family.ctx.m:
        raise DomainError("candidate belongs to a different graph context")
    return all(candidate.mask & member.mask for member in family)


class _Search:
    """One fixed-depth sweep of the exclusion-branching search.

    Branching adds one edge of an unmet member per level; sibling subtrees
    exclude the edges already branched on, so every hitting set is reached
    through exactly one path and no dedup pass is needed.
    """

    __slots__ = ("masks", "depth", "budget", "find_all", "nodes", "solutions", "done")

    def __init__(self, masks: list[int], depth: int, budget: int, find_all: bool) -> None:
        self.masks = masks
        self.depth = depth
        self.budget = budget
        self.find_all = find_all
        self.nodes = 0
        self.solutions: list[int] = []
        self.done = False

    def run(self) -> None:
        self._visit(0, 0)

    def _visit(self, chosen: int, excluded: int) -> None:
        self.nodes += 1
        if self.nodes > self.budget:
            raise BudgetExceededError(
                f"transversal search exceeded its budget of {self.budget} nodes"
            )
        unmet = [mm for mm in self.masks if not mm & chosen]
        if not unmet:
            if chosen.bit_count() != self.depth:  # pragma: no cover - deepening order forbids it
                raise CGGError("search covered the family above the proven minimum")
            self.solutions.append(chosen)
            if not self.find_all:
                self.done = True
            return
        remaining = self.depth - chosen.bit_count()
        if remaining <= 0:
            return
        # Pairwise-disjoint unmet members each need their own new edge.
        union = 0
        disjoint = 0
        for mm in unmet:
            if not mm & union:
                disjoint += 1
                union |= mm
        if disjoint > remaining:
            return
        # Branch on the unmet member with the fewest usable edges (first wins ties).
        best = -1
        best_count = -1
        for mm in unmet:
            usable = mm & ~excluded
            count = usable.bit_count()
            if count == 0:
                return  # some member can no longer be hit in this subtree
            if best_count < 0 or count < best_count:
                best, best_count = usable, count
        branch_excluded = excluded
        while best:
            bit = best & -best
            best ^= bit
            self._visit(chosen | bit, branch_excluded)
            if self.done:
                return
            branch_excluded |= bit


def _deepening(problem: TransversalProblem, max_nodes: int, find_all: bool) -> TransversalSolution:
    ctx = problem.ctx
    masks = [member.mask for member in problem.family]
    universe = 0
    for mm in masks:
        universe |= mm
    # Start the deepening at the root's disjoint-members bound.
    union = 0
    depth = 0
    for mm in masks:
        if not mm & union:
            depth += 1
            union |= mm
    total_nodes = 0
    while depth <= universe.bit_count():
        sweep = _Search(masks, depth, max_nodes - total_nodes, find_all)
        sweep.run()
        total_nodes += sweep.nodes
        if sweep.solutions:
            sets = [
                EdgeSet.from_edges(ctx, (edge_at(ctx, i) for i in _bit_indices(mask)))
                for mask in sweep.solutions
            ]
            family = Family.from_sets(ctx, sets, "custom")
            if len(family) != len(sweep.solutions):  # pragma: no cover - structural dedup
                raise CGGError("exclusion branching emitted a duplicate transversal")
            return TransversalSolution(family, depth, total_nodes)
        depth += 1
    raise CGGError("no transversal exists although all members are non-empty")  # pragma: no cover


def _bit_indices(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def solve_min_transversals(
    problem: TransversalProblem, max_nodes: int | None = None
) -> TransversalSolution:
    """All minimum transversals of the family, with node statistics."""
    budget = node_budget_from_env() if max_nodes is None else max_nodes
    return _deepening(problem, budget, find_all=True)


def min_transversal_size(problem: TransversalProblem, max_nodes: int | None = None) -> int:
    """The minimum number of edges needed to meet every family member."""
    budget = node_budget_from_env() if max_nodes is None else max_nodes
    return _deepening(problem, budget, find_all=False).min_size


def enumerate_min_transversals(
    problem: TransversalProblem, max_nodes: int | None = None, label: str = "custom"
) -> Family:
    """The canonical family of all minimum transversals."""
    return solve_min_transversals(problem, max_nodes).family.relabeled(label)


def derive_sequence(
    ctx: GraphContext,
    k: int,
    max_m: int = DEFAULT_ORACLE_LIMIT,
    max_nodes: int | None = None,
) -> Family:
    """A_k from scratch: A_0 is the simple perfect matchings, and each later
    level is the family of minimum transversals of the one before it."""
    if not isinstance(k, int) or isinstance(k, bool) or not 0 <= k <= 3:
        raise DomainError(f"sequence index must be an integer in 0..3, got {k!r}")
    if ctx.m > max_m:
        raise BudgetExceededError(
            f"the transversal oracle is limited to m <= {max_m} (got m = {ctx.m}); "
            "raise the limit explicitly to go further"
        )
    family = enumerate_spms(ctx)
    for level in range(1, k + 1):
        problem = TransversalProblem(family)
        family = enumerate_min_transversals(problem, max_nodes, label=f"A{level}")
    return family
