"""Perfect matchings of the convex graph: classification and enumeration.

Covers the three nested families used throughout the package (non-crossing,
semi-simple, all-odd-order perfect matchings) together with the two
boundary-edge sidedness checks that semi-simple matchings are guaranteed to
satisfy.
"""

from __future__ import annotations

from itertools import permutations
from typing import Iterable, Iterator

from .errors import BudgetExceededError, DomainError
from .geometry import (
    Edge,
    EdgeSet,
    GraphContext,
    are_neighbors,
    edge_order,
    edges_cross,
    in_open_arc,
)

# Default resource guards; every enumerator takes an override parameter.
DEFAULT_SPM_LIMIT = 12
DEFAULT_SEMI_SIMPLE_LIMIT = 10
DEFAULT_ODD_LIMIT = 9
DEFAULT_ALL_MATCHINGS_LIMIT = 7

FAMILY_LABELS = ("A0", "A1", "A2", "A3", "custom")


def _guard(name: str, m: int, max_m: int) -> None:
    if m > max_m:
        raise BudgetExceededError(
            f"{name} is limited to m <= {max_m} (got m = {m}); pass a higher limit to override"
        )


class Matching:
    """A perfect matching: m pairwise endpoint-disjoint edges covering all 2m vertices."""

    __slots__ = ("ctx", "edges", "_partner")

    def __init__(self, ctx: GraphContext, edges: EdgeSet) -> None:
        if edges.ctx.m != ctx.m:
            raise DomainError("edge set belongs to a different graph context")
        partner = [-1] * ctx.n
        count = 0
        for e in edges:
            if partner[e.u] != -1 or partner[e.v] != -1:
                raise DomainError(f"edges share vertex: {e} overlaps a previous edge")
            partner[e.u] = e.v
            partner[e.v] = e.u
            count += 1
        if count != ctx.m:
            raise DomainError(f"perfect matching needs exactly {ctx.m} edges, got {count}")
        object.__setattr__(self, "ctx", ctx)
        object.__setattr__(self, "edges", edges)
        object.__setattr__(self, "_partner", tuple(partner))

    def __setattr__(self, name, value):  # pragma: no cover - guard only
        raise AttributeError("Matching is immutable")

    @classmethod
    def from_pairs(cls, ctx: GraphContext, pairs: Iterable[tuple[int, int]]) -> Matching:
        return cls(ctx, EdgeSet.from_pairs(ctx, pairs))

    def partner(self, v: int) -> int:
        self.ctx.check_vertex(v)
        return self._partner[v]

    def edge_list(self) -> tuple[Edge, ...]:
        return self.edges.edges()

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Matching):
            return NotImplemented
        return self.edges == other.edges

    def __hash__(self) -> int:
        return hash(self.edges)

    def __repr__(self) -> str:
        return f"Matching({self.edges!r})"


class Family:
    """A duplicate-free collection of edge sets in canonical order.

    Members are sorted by their ascending edge-index tuples, compared
    lexicographically, so the emitted order never depends on how the family
    was produced.  Equality compares m and the members only; the label is
    metadata.
    """

    __slots__ = ("ctx", "label", "members")

    def __init__(self, ctx: GraphContext, label: str, members: tuple[EdgeSet, ...]) -> None:
        if label not in FAMILY_LABELS:
            raise DomainError(f"family label must be one of {FAMILY_LABELS}, got {label!r}")
        object.__setattr__(self, "ctx", ctx)
        object.__setattr__(self, "label", label)
        object.__setattr__(self, "members", members)

    def __setattr__(self, name, value):  # pragma: no cover - guard only
        raise AttributeError("Family is immutable")

    @classmethod
    def from_sets(cls, ctx: GraphContext, sets: Iterable[EdgeSet], label: str = "custom") -> Family:
        unique: dict[int, EdgeSet] = {}
        for s in sets:
            if s.ctx.m != ctx.m:
                raise DomainError("family members belong to different graph contexts")
            unique[s.mask] = s
        members = tuple(sorted(unique.values(), key=EdgeSet.indices))
        return cls(ctx, label, members)

    def relabeled(self, label: str) -> Family:
        return Family(self.ctx, label, self.members)

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self) -> Iterator[EdgeSet]:
        return iter(self.members)

    def __getitem__(self, i: int) -> EdgeSet:
        return self.members[i]

    def __contains__(self, s: EdgeSet) -> bool:
        return any(member == s for member in self.members)

    def member_masks(self) -> frozenset[int]:
        return frozenset(s.mask for s in self.members)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Family):
            return NotImplemented
        return self.ctx.m == other.ctx.m and self.members == other.members

    def __hash__(self) -> int:
        return hash((self.ctx.m, tuple(s.mask for s in self.members)))

    def __repr__(self) -> str:
        return f"Family({self.label}, m={self.ctx.m}, count={len(self.members)})"


def is_simple(matching: Matching) -> bool:
    """True iff no two edges of the matching cross."""
    ctx = matching.ctx
    es = matching.edge_list()
    for i in range(len(es)):
        for j in range(i + 1, len(es)):
            if edges_cross(ctx, es[i], es[j]):
                return False
    return True


def is_semi_simple(matching: Matching) -> bool:
    """True iff every edge has odd order and no two edges are crossing neighbors."""
    ctx = matching.ctx
    es = matching.edge_list()
    if any(edge_order(ctx, e) % 2 == 0 for e in es):
        return False
    for i in range(len(es)):
        for j in range(i + 1, len(es)):
            if edges_cross(ctx, es[i], es[j]) and are_neighbors(ctx, es[i], es[j]):
                return False
    return True


def _noncrossing_pairings(lo: int, hi: int) -> Iterator[list[tuple[int, int]]]:
    # Non-crossing pairings of the labels lo..hi (inclusive, even count).
    if lo > hi:
        yield []
        return
    for p in range(lo + 1, hi + 1, 2):
        for left in _noncrossing_pairings(lo + 1, p - 1):
            for right in _noncrossing_pairings(p + 1, hi):
                yield [(lo, p)] + left + right


def enumerate_spms(ctx: GraphContext, max_m: int = DEFAULT_SPM_LIMIT) -> Family:
    """All simple (non-crossing) perfect matchings; Catalan-many members."""
    _guard("simple perfect matching enumeration", ctx.m, max_m)
    sets = [
        EdgeSet.from_pairs(ctx, pairing)
        for pairing in _noncrossing_pairings(0, ctx.n - 1)
    ]
    return Family.from_sets(ctx, sets, "A0")


def enumerate_odd_matchings(ctx: GraphContext, max_m: int = DEFAULT_ODD_LIMIT) -> Family:
    """All perfect matchings whose edges all have odd order; exactly m! members.

    Odd order means the endpoints differ by an odd amount, so these are the
    bijections from even labels to odd labels.
    """
    _guard("odd-order matching enumeration", ctx.m, max_m)
    evens = range(0, ctx.n, 2)
    odds = list(range(1, ctx.n, 2))
    sets = [
        EdgeSet.from_edges(ctx, (Edge.of(a, b) for a, b in zip(evens, perm)))
        for perm in permutations(odds)
    ]
    return Family.from_sets(ctx, sets, "custom")


def enumerate_semi_simple(ctx: GraphContext, max_m: int = DEFAULT_SEMI_SIMPLE_LIMIT) -> Family:
    """All semi-simple perfect matchings.

    Backtracks over the even/odd bipartition (odd-order edges always join an
    even and an odd label), rejecting a partial assignment as soon as it
    contains a crossing pair of neighbors.  The pruning is sound because a
    violating pair stays violating in every extension.
    """
    _guard("semi-simple matching enumeration", ctx.m, max_m)
    n = ctx.n
    odds = list(range(1, n, 2))
    chosen: list[Edge] = []
    used = [False] * n
    sets: list[EdgeSet] = []

    def extend(i: int) -> None:
        if i == ctx.m:
            sets.append(EdgeSet.from_edges(ctx, chosen))
            return
        a = 2 * i
        for b in odds:
            if used[b]:
                continue
            e = Edge.of(a, b)
            ok = True
            for f in chosen:
                if edges_cross(ctx, e, f) and are_neighbors(ctx, e, f):
                    ok = False
                    break
            if not ok:
                continue
            used[b] = True
            chosen.append(e)
            extend(i + 1)
            chosen.pop()
            used[b] = False

    extend(0)
    return Family.from_sets(ctx, sets, "A2")


def enumerate_perfect_matchings(ctx: GraphContext, max_m: int = DEFAULT_ALL_MATCHINGS_LIMIT) -> Family:
    """All perfect matchings, crossing or not; (2m-1)!! members."""
    _guard("perfect matching enumeration", ctx.m, max_m)
    sets: list[EdgeSet] = []
    chosen: list[Edge] = []

    def extend(free: list[int]) -> None:
        if not free:
            sets.append(EdgeSet.from_edges(ctx, chosen))
            return
        a = free[0]
        rest = free[1:]
        for i, b in enumerate(rest):
            chosen.append(Edge(a, b))
            extend(rest[:i] + rest[i + 1:])
            chosen.pop()

    extend(list(range(ctx.n)))
    return Family.from_sets(ctx, sets, "custom")


def _has_boundary_edge_inside(matching: Matching, a: int, b: int) -> bool:
    # A boundary edge of the matching with both endpoints strictly inside arc (a, b).
    ctx = matching.ctx
    for f in matching.edges:
        if edge_order(ctx, f) == 1 and in_open_arc(ctx, a, b, f.u) and in_open_arc(ctx, a, b, f.v):
            return True
    return False


def check_halfplane_property(matching: Matching, e: Edge) -> bool:
    """True iff both open arcs cut off by an interior edge contain a boundary edge of the matching.

    The two open half-planes determined by the chord e correspond exactly to
    the two open cyclic arcs between its endpoints.
    """
    if e not in matching.edges:
        raise DomainError(f"edge {e} is not in the matching")
    if edge_order(matching.ctx, e) < 2:
        raise DomainError(f"edge {e} is a boundary edge; the check needs an interior edge")
    return _has_boundary_edge_inside(matching, e.u, e.v) and _has_boundary_edge_inside(
        matching, e.v, e.u
    )


def check_quadrant_property(matching: Matching, e1: Edge, e2: Edge) -> bool:
    """True iff all four open arcs determined by a crossing pair contain a boundary edge.

    With the four endpoints in cyclic order p0 < p1 < p2 < p3, the open
    quadrants of the two chords meet the polygon boundary exactly in the
    arcs (p0,p1), (p1,p2), (p2,p3), (p3,p0).
    """
    if e1 not in matching.edges or e2 not in matching.edges:
        raise DomainError("both edges must belong to the matching")
    if not edges_cross(matching.ctx, e1, e2):
        raise DomainError(f"edges {e1} and {e2} do not cross")
    p0, p1, p2, p3 = sorted((e1.u, e1.v, e2.u, e2.v))
    return all(
        _has_boundary_edge_inside(matching, a, b)
        for a, b in ((p0, p1), (p1, p2), (p2, p3), (p3, p0))
    )
