"""Independent brute-force oracles used to cross-check the package.

Nothing here reuses the package's combinatorial logic: crossings are decided
with floating-point segment geometry, matchings come from a direct pairing
recursion on labels, and minimum transversals from exhaustive subset search.
"""

import math
from itertools import combinations

from cgg.geometry import EdgeSet, edge_index


def circle_points(n):
    return [
        (math.cos(2 * math.pi * k / n), math.sin(2 * math.pi * k / n)) for k in range(n)
    ]


def _orient(p, q, r):
    return (q[0] - p[0]) * (r[1] - p[1]) - (q[1] - p[1]) * (r[0] - p[0])


def float_cross(n, a, b, c, d):
    """Do open segments (a,b) and (c,d) of the regular n-gon properly intersect?"""
    if len({a, b, c, d}) < 4:
        return False
    pts = circle_points(n)
    p1, p2, p3, p4 = pts[a], pts[b], pts[c], pts[d]
    d1 = _orient(p3, p4, p1)
    d2 = _orient(p3, p4, p2)
    d3 = _orient(p1, p2, p3)
    d4 = _orient(p1, p2, p4)
    return d1 * d2 < 0 and d3 * d4 < 0


def brute_perfect_matchings(n):
    """Every way to pair up the labels 0..n-1, as lists of (u, v) pairs."""
    if n % 2:
        raise ValueError("odd label count")

    def pair_up(labels):
        if not labels:
            yield []
            return
        a = labels[0]
        for i in range(1, len(labels)):
            b = labels[i]
            rest = labels[1:i] + labels[i + 1:]
            for tail in pair_up(rest):
                yield [(a, b)] + tail

    yield from pair_up(list(range(n)))


def pm_is_noncrossing(n, pairs):
    return not any(
        float_cross(n, a, b, c, d)
        for (a, b), (c, d) in combinations(pairs, 2)
    )


def pm_is_semi_simple(n, pairs):
    """All pair gaps odd, and no two pairs that cross while nearly touching."""
    for a, b in pairs:
        if (b - a) % 2 == 0:
            return False
    for (a, b), (c, d) in combinations(pairs, 2):
        if not float_cross(n, a, b, c, d):
            continue
        gaps = [
            min((p - q) % n, (q - p) % n)
            for p in (a, b)
            for q in (c, d)
        ]
        if min(gaps) == 1:
            return False
    return True


def masks_of(ctx, pair_lists):
    """Canonical bitmask set for a collection of pair lists."""
    out = set()
    for pairs in pair_lists:
        mask = 0
        for a, b in pairs:
            mask |= 1 << edge_index(ctx, ctx.edge(a, b))
        out.add(mask)
    return out


def brute_min_transversals(ctx, family):
    """All minimum hitting sets by exhaustive subset search over the universe.

    Only feasible for tiny m; that is the point — it shares no code with the
    branch-and-bound search it referees.
    """
    member_masks = [member.mask for member in family]
    universe = list(range(ctx.edge_count))
    for k in range(1, ctx.edge_count + 1):
        hits = []
        for combo in combinations(universe, k):
            mask = 0
            for idx in combo:
                mask |= 1 << idx
            if all(mask & mm for mm in member_masks):
                hits.append(mask)
        if hits:
            return k, set(hits)
    raise AssertionError("family had an empty member")


def family_masks(family):
    return {member.mask for member in family}


def edge_set_from_mask(ctx, mask):
    from cgg.geometry import edge_at

    edges = []
    while mask:
        low = mask & -mask
        edges.append(edge_at(ctx, low.bit_length() - 1))
        mask ^= low
    return EdgeSet.from_edges(ctx, edges)
