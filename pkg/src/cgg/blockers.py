"""Caterpillar blockers: construction, enumeration, recognition, witnesses.

A blocker is an m-edge set meeting every simple perfect matching.  Each one
is a caterpillar: a path of t >= 2 boundary edges (the spine) plus m - t
legs attached to interior spine vertices, pinned down by a strictly
increasing offset sequence.  The witness construction turns any perfect
matching that is not semi-simple into a blocker disjoint from it.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .errors import BudgetExceededError, CGGError, DomainError
from .geometry import Edge, EdgeSet, GraphContext, edge_order, is_boundary
from .matchings import Family, Matching, is_semi_simple

DEFAULT_BLOCKER_LIMIT = 16


@dataclass(frozen=True, order=True)
class BlockerSpec:
    """Parameters (s, t, epsilons) pinning down one caterpillar blocker.

    s is the spine's starting vertex, t the number of spine edges
    (2 <= t <= m), and epsilons the strictly increasing offsets
    (one per leg, each in 1..m-2; empty when t = m).
    """

    s: int
    t: int
    epsilons: tuple[int, ...]

    def check(self, ctx: GraphContext) -> None:
        ctx.check_vertex(self.s)
        if not 2 <= self.t <= ctx.m:
            raise DomainError(f"spine length must satisfy 2 <= t <= {ctx.m}, got {self.t}")
        eps = self.epsilons
        if len(eps) != ctx.m - self.t:
            raise DomainError(
                f"need exactly {ctx.m - self.t} leg offsets for t = {self.t}, got {len(eps)}"
            )
        for i, e in enumerate(eps):
            if not isinstance(e, int) or not 1 <= e <= ctx.m - 2:
                raise DomainError(f"leg offsets must lie in 1..{ctx.m - 2}, got {e}")
            if i > 0 and e <= eps[i - 1]:
                raise DomainError(f"leg offsets must be strictly increasing, got {eps}")

    def to_dict(self) -> dict:
        return {"s": self.s, "t": self.t, "eps": list(self.epsilons)}

    @classmethod
    def from_dict(cls, data: dict) -> BlockerSpec:
        try:
            return cls(int(data["s"]), int(data["t"]), tuple(int(e) for e in data["eps"]))
        except (KeyError, TypeError, ValueError) as exc:
            raise DomainError(f"malformed blocker spec: {data!r}") from exc


def build_blocker(ctx: GraphContext, spec: BlockerSpec) -> EdgeSet:
    """The m-edge caterpillar for (s, t, epsilons).

    In unshifted coordinates the spine is the boundary path 0-1-...-t and
    leg j (1 <= j <= m-t) joins t+j-1-eps_j on the spine to t+j+eps_j
    beyond it; every label is then shifted by +s.
    """
    spec.check(ctx)
    n, t, s = ctx.n, spec.t, spec.s
    pairs = [((i - 1 + s) % n, (i + s) % n) for i in range(1, t + 1)]
    for j, eps in enumerate(spec.epsilons, start=1):
        a = t + j - 1 - eps
        b = t + j + eps
        # the offset bounds keep both endpoints inside 0..2m-2 before shifting
        pairs.append(((a + s) % n, (b + s) % n))
    out = EdgeSet.from_pairs(ctx, pairs)
    if len(out) != ctx.m:
        raise CGGError(f"caterpillar for {spec} collapsed to {len(out)} edges")
    return out


def enumerate_blockers(ctx: GraphContext, max_m: int = DEFAULT_BLOCKER_LIMIT) -> Family:
    """All m * 2^(m-1) blockers, canonically sorted.

    Iterates every (s, t, epsilons) triple; the parametrization is injective,
    which we assert rather than assume.
    """
    if ctx.m > max_m:
        raise BudgetExceededError(
            f"blocker enumeration is limited to m <= {max_m} (got m = {ctx.m})"
        )
    m = ctx.m
    seen: dict[int, BlockerSpec] = {}
    sets = []
    for s in range(ctx.n):
        for t in range(2, m + 1):
            for eps in combinations(range(1, m - 1), m - t):
                spec = BlockerSpec(s, t, eps)
                blocker = build_blocker(ctx, spec)
                if blocker.mask in seen:
                    raise CGGError(
                        f"duplicate blocker from {spec} and {seen[blocker.mask]}"
                    )
                seen[blocker.mask] = spec
                sets.append(blocker)
    family = Family.from_sets(ctx, sets, "A1")
    if len(family) != m * 2 ** (m - 1):
        raise CGGError(
            f"expected {m * 2 ** (m - 1)} blockers for m = {m}, built {len(family)}"
        )
    return family


def star_blocker(ctx: GraphContext, x: int) -> EdgeSet:
    """All odd-order edges at vertex x: exactly m of them, forming a blocker."""
    ctx.check_vertex(x)
    edges = set()
    for d in range(1, ctx.n):
        if min(d, ctx.n - d) % 2 == 1:
            edges.add(Edge.of(x, (x + d) % ctx.n))
    out = EdgeSet.from_edges(ctx, edges)
    if len(out) != ctx.m:
        raise CGGError(f"star at {x} has {len(out)} odd-order edges, expected {ctx.m}")
    return out


def _boundary_path(ctx: GraphContext, edges: EdgeSet) -> tuple[int, int] | None:
    # Locate the spine: the set's boundary edges must form a single cyclic-arc
    # path of at least two edges.  Returns (start vertex, edge count) or None.
    boundary = [e for e in edges if is_boundary(ctx, e)]
    t = len(boundary)
    if t < 2:
        return None
    covered = set()
    for e in boundary:
        covered.update(e.endpoints())
    if len(covered) != t + 1:
        return None  # repeats or branches: not a simple path
    # A path of boundary edges covers a contiguous arc; find its unique start
    # (the covered vertex whose predecessor is not covered).
    starts = [v for v in covered if (v - 1) % ctx.n not in covered]
    if len(starts) != 1:
        return None  # zero starts would mean a full cycle; >1 means gaps
    s = starts[0]
    # Confirm every arc edge is present (covered contiguity alone is not enough).
    arc_edges = {Edge.of((s + i) % ctx.n, (s + i + 1) % ctx.n) for i in range(t)}
    if arc_edges != set(boundary):
        return None
    return s, t


def validate_blocker(ctx: GraphContext, edges: EdgeSet) -> BlockerSpec | None:
    """Recover (s, t, epsilons) from an m-edge set, or None if it has no such form.

    The spine must be the set's entire collection of boundary edges, forming
    one path; leg offsets are then forced by the leg directions, so the
    parse — when it exists — is unique.
    """
    if edges.ctx.m != ctx.m:
        raise DomainError("edge set belongs to a different graph context")
    if len(edges) != ctx.m:
        raise DomainError(f"blocker candidates must have exactly {ctx.m} edges, got {len(edges)}")
    located = _boundary_path(ctx, edges)
    if located is None:
        return None
    s, t = located
    n, m = ctx.n, ctx.m
    legs = [e for e in edges if not is_boundary(ctx, e)]
    if len(legs) != m - t:
        return None  # unreachable given the spine parse, but cheap to keep
    # Work in spine-start coordinates: subtract s from every label.
    offsets: dict[int, int] = {}
    for e in legs:
        u = (e.u - s) % n
        v = (e.v - s) % n
        d = (u + v) % n
        if d % 2 == 0:
            return None
        c = (d + 1) // 2
        # Leg j sits at direction 2(t+j)-1, so c = t+j recovers the leg index.
        if not t + 1 <= c <= m or c in offsets:
            return None
        # One endpoint is c + eps, the other c - 1 - eps; only one assignment
        # can put eps inside 1..m-2 because the two candidates sum to -1 mod 2m.
        eps = (u - c) % n
        other = v
        if not 1 <= eps <= m - 2:
            eps = (v - c) % n
            other = u
        if not 1 <= eps <= m - 2:
            return None
        if other != (c - 1 - eps) % n:
            return None
        offsets[c] = eps
    eps_seq = tuple(offsets[c] for c in sorted(offsets))
    if any(eps_seq[i] >= eps_seq[i + 1] for i in range(len(eps_seq) - 1)):
        return None
    spec = BlockerSpec(s, t, eps_seq)
    spec.check(ctx)
    if build_blocker(ctx, spec) != edges:
        return None  # pragma: no cover - parse is exact, kept as a tripwire
    return spec


def _transform_label(n: int, r: int, reflected: bool, k: int) -> int:
    # Forward relabeling used by the witness scan: rotate by -r, optionally
    # after the reflection k -> n-1-k (the composite is its own inverse).
    if reflected:
        return (n - 1 - k + r) % n
    return (k - r) % n


def _inverse_label(n: int, r: int, reflected: bool, k: int) -> int:
    if reflected:
        return (n - 1 - k + r) % n
    return (k + r) % n


def witness_missed_blocker(ctx: GraphContext, matching: Matching | EdgeSet) -> EdgeSet:
    """A blocker disjoint from a matching that fails to be semi-simple.

    Case (a): some vertex x has no odd-order edge of the input at it
    (uncovered, or covered by an even-order edge) — the star at x misses
    every input edge.  Case (b): an all-odd matching with a crossing pair
    of neighbors — relabel so the pair reads [0, 2l-1], [2k, 2m-1], attach
    legs to the boundary path through 2m-1 and 0, and map back.
    """
    edges = matching.edges if isinstance(matching, Matching) else matching
    if edges.ctx.m != ctx.m:
        raise DomainError("matching belongs to a different graph context")
    if len(edges) != ctx.m:
        raise DomainError(f"witness inputs must have exactly {ctx.m} edges, got {len(edges)}")
    n, m = ctx.n, ctx.m

    # Case (a): scan vertices in label order for one with no odd-order edge.
    has_odd = [False] * n
    for e in edges:
        if edge_order(ctx, e) % 2 == 1:
            has_odd[e.u] = has_odd[e.v] = True
    for x in range(n):
        if not has_odd[x]:
            return star_blocker(ctx, x)

    # Every vertex meets an odd-order edge, and m edges have only 2m endpoint
    # slots, so the input is a perfect matching with all orders odd.
    pm = matching if isinstance(matching, Matching) else Matching(ctx, edges)
    if is_semi_simple(pm):
        raise DomainError("matching is semi-simple: every blocker meets it")

    # Case (b): find a relabeling (rotations first, then reflection composed
    # with rotations) under which the crossing-neighbor pair becomes
    # [0, 2l-1] and [2k, 2m-1] with 0 < 2k < 2l-1.
    for reflected in (False, True):
        for r in range(n):
            partner = [-1] * n
            for e in edges:
                u = _transform_label(n, r, reflected, e.u)
                v = _transform_label(n, r, reflected, e.v)
                partner[u] = v
                partner[v] = u
            y = partner[0]
            x = partner[n - 1]
            if y == n - 1 or x >= y:
                continue
            # y is odd and x is even automatically (all orders are odd).
            l = (y + 1) // 2
            pairs = [(n - 2, n - 1), (n - 1, 0), (0, 1)]
            pairs.extend((0, 2 * j - 1) for j in range(2, l))
            pairs.extend((2 * j, n - 1) for j in range(l, m - 1))
            back = [
                (_inverse_label(n, r, reflected, a), _inverse_label(n, r, reflected, b))
                for a, b in pairs
            ]
            out = EdgeSet.from_pairs(ctx, back)
            if not out.isdisjoint(edges):  # pragma: no cover - construction guarantees this
                raise CGGError("witness construction produced a non-disjoint blocker")
            return out
    raise CGGError("no relabeling reached the witness normal form")  # pragma: no cover
