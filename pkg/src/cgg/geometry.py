"""Vertices, edges, and cyclic-order predicates of the complete convex geometric graph.

The graph on n = 2m vertices is kept purely combinatorial: vertices are the
labels 0..n-1 in convex position, edges are unordered label pairs, and every
geometric notion (crossing, sidedness) is phrased as a condition on cyclic
arcs, which is exact for points in convex position.  No coordinates, no
floating point.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from .errors import DomainError


@dataclass(frozen=True)
class GraphContext:
    """The complete convex geometric graph on 2m cyclically labelled vertices.

    ``m`` must be at least 2; the caterpillar machinery downstream needs a
    spine of length >= 2, which does not exist for m = 1.
    """

    m: int

    def __post_init__(self) -> None:
        if not isinstance(self.m, int) or isinstance(self.m, bool) or self.m < 2:
            raise DomainError(f"m must be an integer >= 2, got {self.m!r}")

    @property
    def n(self) -> int:
        """Number of vertices, 2m."""
        return 2 * self.m

    @property
    def edge_count(self) -> int:
        """Size of the edge universe, n(n-1)/2 = m(2m-1)."""
        return self.m * (2 * self.m - 1)

    def check_vertex(self, v: int) -> None:
        if not isinstance(v, int) or isinstance(v, bool) or not 0 <= v < self.n:
            raise DomainError(f"vertex label {v!r} out of range 0..{self.n - 1}")

    def edge(self, a: int, b: int) -> Edge:
        """Validating edge factory; accepts endpoints in either order."""
        self.check_vertex(a)
        self.check_vertex(b)
        return Edge.of(a, b)

    def all_edges(self) -> Iterator[Edge]:
        """All edges in canonical index order (lexicographic on (u, v))."""
        for u in range(self.n - 1):
            for v in range(u + 1, self.n):
                yield Edge(u, v)


@dataclass(frozen=True, order=True)
class Edge:
    """An unordered vertex pair, stored canonically with u < v."""

    u: int
    v: int

    def __post_init__(self) -> None:
        if not 0 <= self.u < self.v:
            raise DomainError(f"edge endpoints must satisfy 0 <= u < v, got ({self.u}, {self.v})")

    @classmethod
    def of(cls, a: int, b: int) -> Edge:
        """Build an edge from endpoints in either order."""
        if a == b:
            raise DomainError(f"edge endpoints must be distinct, got ({a}, {b})")
        return cls(a, b) if a < b else cls(b, a)

    def endpoints(self) -> tuple[int, int]:
        return (self.u, self.v)

    def __repr__(self) -> str:
        return f"[{self.u},{self.v}]"


def check_edge(ctx: GraphContext, e: Edge) -> None:
    """Raise DomainError unless e is a valid edge of ctx."""
    if not 0 <= e.u < e.v < ctx.n:
        raise DomainError(f"edge {e} invalid for n={ctx.n}")


def edge_index(ctx: GraphContext, e: Edge) -> int:
    """Canonical triangular index of an edge (lexicographic over pairs u < v)."""
    check_edge(ctx, e)
    n = ctx.n
    return e.u * (2 * n - e.u - 1) // 2 + (e.v - e.u - 1)


def edge_at(ctx: GraphContext, index: int) -> Edge:
    """Inverse of edge_index."""
    if not 0 <= index < ctx.edge_count:
        raise DomainError(f"edge index {index} out of range 0..{ctx.edge_count - 1}")
    n = ctx.n
    u = 0
    while index >= n - 1 - u:
        index -= n - 1 - u
        u += 1
    return Edge(u, u + 1 + index)


def edge_order(ctx: GraphContext, e: Edge) -> int:
    """Cyclic length of an edge: min(v-u, 2m-(v-u)), in 1..m."""
    check_edge(ctx, e)
    d = e.v - e.u
    return min(d, ctx.n - d)


def edge_direction(ctx: GraphContext, e: Edge) -> int:
    """Sum of the endpoint labels modulo 2m."""
    check_edge(ctx, e)
    return (e.u + e.v) % ctx.n


def are_parallel(ctx: GraphContext, e: Edge, f: Edge) -> bool:
    """True iff the two edges have equal direction."""
    return edge_direction(ctx, e) == edge_direction(ctx, f)


def are_neighbors(ctx: GraphContext, e: Edge, f: Edge) -> bool:
    """True iff some endpoint of e is cyclically adjacent to some endpoint of f.

    Sharing a vertex alone does not qualify; an actual distance-1 pair of
    endpoints must exist.
    """
    check_edge(ctx, e)
    check_edge(ctx, f)
    n = ctx.n
    for p in (e.u, e.v):
        for q in (f.u, f.v):
            d = (p - q) % n
            if d == 1 or d == n - 1:
                return True
    return False


def edges_cross(ctx: GraphContext, e: Edge, f: Edge) -> bool:
    """True iff e and f intersect in an interior point.

    For convex position this means the endpoint pairs interleave cyclically:
    no shared endpoint, and exactly one endpoint of f lies strictly inside
    the open arc (e.u, e.v).
    """
    check_edge(ctx, e)
    check_edge(ctx, f)
    if e.u in (f.u, f.v) or e.v in (f.u, f.v):
        return False
    return (e.u < f.u < e.v) != (e.u < f.v < e.v)


def is_boundary(ctx: GraphContext, e: Edge) -> bool:
    """True iff e is a side of the polygon (order 1)."""
    return edge_order(ctx, e) == 1


def in_open_arc(ctx: GraphContext, a: int, b: int, x: int) -> bool:
    """True iff x lies strictly inside the cyclic arc from a to b (increasing labels)."""
    n = ctx.n
    return 0 < (x - a) % n < (b - a) % n


def rotate_edge(ctx: GraphContext, e: Edge, shift: int) -> Edge:
    """Relabel both endpoints by +shift mod 2m."""
    check_edge(ctx, e)
    n = ctx.n
    return Edge.of((e.u + shift) % n, (e.v + shift) % n)


def reflect_edge(ctx: GraphContext, e: Edge) -> Edge:
    """Relabel both endpoints by k -> 2m-1-k."""
    check_edge(ctx, e)
    n = ctx.n
    return Edge.of(n - 1 - e.u, n - 1 - e.v)


class EdgeSet:
    """An immutable subset of the edge universe, backed by an integer bit-vector.

    Bit i corresponds to the edge with canonical index i, so intersection,
    union, and disjointness tests are single word-parallel integer
    operations.  Iteration yields edges in canonical index order.
    """

    __slots__ = ("ctx", "mask")

    def __init__(self, ctx: GraphContext, mask: int = 0) -> None:
        if mask < 0 or mask >> ctx.edge_count:
            raise DomainError("bit mask outside the edge universe")
        object.__setattr__(self, "ctx", ctx)
        object.__setattr__(self, "mask", mask)

    def __setattr__(self, name, value):  # pragma: no cover - guard only
        raise AttributeError("EdgeSet is immutable")

    @classmethod
    def from_edges(cls, ctx: GraphContext, edges: Iterable[Edge]) -> EdgeSet:
        mask = 0
        for e in edges:
            mask |= 1 << edge_index(ctx, e)
        return cls(ctx, mask)

    @classmethod
    def from_pairs(cls, ctx: GraphContext, pairs: Iterable[tuple[int, int]]) -> EdgeSet:
        return cls.from_edges(ctx, (ctx.edge(a, b) for a, b in pairs))

    def __len__(self) -> int:
        return self.mask.bit_count()

    def __bool__(self) -> bool:
        return self.mask != 0

    def __contains__(self, e: Edge) -> bool:
        return bool(self.mask >> edge_index(self.ctx, e) & 1)

    def __iter__(self) -> Iterator[Edge]:
        mask = self.mask
        while mask:
            low = mask & -mask
            yield edge_at(self.ctx, low.bit_length() - 1)
            mask ^= low

    def indices(self) -> tuple[int, ...]:
        """Canonical sort key: ascending edge indices."""
        out = []
        mask = self.mask
        while mask:
            low = mask & -mask
            out.append(low.bit_length() - 1)
            mask ^= low
        return tuple(out)

    def edges(self) -> tuple[Edge, ...]:
        return tuple(self)

    def pairs(self) -> list[list[int]]:
        """JSON form: [u, v] lists with u < v, in canonical order."""
        return [[e.u, e.v] for e in self]

    def _check_same_context(self, other: EdgeSet) -> None:
        if self.ctx.m != other.ctx.m:
            raise DomainError("edge sets belong to different graph contexts")

    def __and__(self, other: EdgeSet) -> EdgeSet:
        self._check_same_context(other)
        return EdgeSet(self.ctx, self.mask & other.mask)

    def __or__(self, other: EdgeSet) -> EdgeSet:
        self._check_same_context(other)
        return EdgeSet(self.ctx, self.mask | other.mask)

    def __sub__(self, other: EdgeSet) -> EdgeSet:
        self._check_same_context(other)
        return EdgeSet(self.ctx, self.mask & ~other.mask)

    def isdisjoint(self, other: EdgeSet) -> bool:
        self._check_same_context(other)
        return self.mask & other.mask == 0

    def issubset(self, other: EdgeSet) -> bool:
        self._check_same_context(other)
        return self.mask & ~other.mask == 0

    def rotate(self, shift: int) -> EdgeSet:
        return EdgeSet.from_edges(self.ctx, (rotate_edge(self.ctx, e, shift) for e in self))

    def reflect(self) -> EdgeSet:
        return EdgeSet.from_edges(self.ctx, (reflect_edge(self.ctx, e) for e in self))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, EdgeSet):
            return NotImplemented
        return self.ctx.m == other.ctx.m and self.mask == other.mask

    def __hash__(self) -> int:
        return hash((self.ctx.m, self.mask))

    def __repr__(self) -> str:
        return "{" + ",".join(repr(e) for e in self) + "}"
