"""Closed-form counts, co-blocker bounds, and the k! lower-bound family.

Everything here is exact integer arithmetic; the only enumeration is the
explicit construction of the factorially many semi-simple matchings that
witness the lower bound.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import permutations

from .errors import CGGError, DomainError
from .geometry import Edge, EdgeSet, GraphContext, edge_order
from .matchings import (
    DEFAULT_SEMI_SIMPLE_LIMIT,
    Family,
    Matching,
    enumerate_semi_simple,
    is_semi_simple,
)


def catalan(m: int) -> int:
    """The m-th Catalan number, the number of simple perfect matchings."""
    if not isinstance(m, int) or isinstance(m, bool) or m < 1:
        raise DomainError(f"catalan needs a positive integer, got {m!r}")
    return math.comb(2 * m, m) // (m + 1)


def blocker_count(m: int) -> int:
    """m * 2^(m-1), the number of caterpillar blockers."""
    if not isinstance(m, int) or isinstance(m, bool) or m < 2:
        raise DomainError(f"blocker_count needs an integer m >= 2, got {m!r}")
    return m * 2 ** (m - 1)


def coblocker_bounds(m: int) -> tuple[int, int]:
    """(floor(m/3)!, m!): the proven sandwich around the co-blocker count."""
    if not isinstance(m, int) or isinstance(m, bool) or m < 2:
        raise DomainError(f"coblocker_bounds needs an integer m >= 2, got {m!r}")
    return math.factorial(m // 3), math.factorial(m)


def coblocker_count(ctx: GraphContext, max_m: int = DEFAULT_SEMI_SIMPLE_LIMIT) -> int:
    """The exact number of semi-simple perfect matchings, by enumeration."""
    return len(enumerate_semi_simple(ctx, max_m))


def generate_lower_bound_family(ctx: GraphContext) -> Family:
    """The k! semi-simple matchings behind the lower bound, k = floor(m/3).

    Boundary edges are fixed at all label pairs congruent to (1, 2) mod 3
    below 6k, topped up with [6k, 6k+1] and [6k+2, 6k+3] as the residue of
    m requires; the remaining vertices (0 mod 6 and 3 mod 6, below 6k) are
    matched to each other in every possible way.
    """
    m = ctx.m
    if m < 3:
        raise DomainError(
            f"the lower-bound construction needs m >= 3, got m = {m}"
        )
    k = m // 3
    fixed = [(3 * i + 1, 3 * i + 2) for i in range(2 * k)]
    if m % 3 >= 1:
        fixed.append((6 * k, 6 * k + 1))
    if m % 3 == 2:
        fixed.append((6 * k + 2, 6 * k + 3))
    sources = [6 * i for i in range(k)]
    targets = [6 * i + 3 for i in range(k)]
    sets = []
    for perm in permutations(targets):
        pairs = list(fixed)
        for a, b in zip(sources, perm):
            e = Edge.of(a, b)
            if edge_order(ctx, e) % 2 == 0:
                raise CGGError(f"lower-bound edge {e} has even order")
            pairs.append((a, b))
        sets.append(Matching.from_pairs(ctx, pairs).edges)
    family = Family.from_sets(ctx, sets, "custom")
    if len(family) != math.factorial(k):
        raise CGGError(
            f"lower-bound family for m = {m} has {len(family)} members, expected {k}!"
        )
    return family


@dataclass(frozen=True)
class CountReport:
    """One row of the counts table; coblocker_count is None when not computed."""

    m: int
    spm_count: int
    blocker_count: int
    coblocker_count: int | None
    lower_bound: int
    upper_bound: int

    def __post_init__(self) -> None:
        if self.lower_bound != math.factorial(self.m // 3):
            raise DomainError(f"lower bound for m = {self.m} must be {self.m // 3}!")
        if self.upper_bound != math.factorial(self.m):
            raise DomainError(f"upper bound for m = {self.m} must be {self.m}!")
        if self.coblocker_count is not None and not (
            self.lower_bound <= self.coblocker_count <= self.upper_bound
        ):
            raise DomainError(
                f"co-blocker count {self.coblocker_count} escapes the bounds "
                f"[{self.lower_bound}, {self.upper_bound}] at m = {self.m}"
            )


def count_report(
    m: int,
    include_coblockers: bool = True,
    max_m: int = DEFAULT_SEMI_SIMPLE_LIMIT,
) -> CountReport:
    """Assemble the counts row for one m, enumerating co-blockers when feasible."""
    ctx = GraphContext(m)
    lower, upper = coblocker_bounds(m)
    computed = coblocker_count(ctx, max_m) if include_coblockers and m <= max_m else None
    return CountReport(m, catalan(m), blocker_count(m), computed, lower, upper)


def count_table(
    m_first: int,
    m_last: int,
    include_coblockers: bool = True,
    max_m: int = DEFAULT_SEMI_SIMPLE_LIMIT,
) -> list[CountReport]:
    """Count rows for every m in the inclusive range."""
    if m_first > m_last:
        raise DomainError(f"empty range {m_first}..{m_last}")
    return [count_report(m, include_coblockers, max_m) for m in range(m_first, m_last + 1)]
