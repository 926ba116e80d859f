"""Vocabulary-level checks: orders, directions, crossings, and the bit-vector sets."""

import pytest

from cgg.errors import DomainError
from cgg.geometry import (
    Edge,
    EdgeSet,
    GraphContext,
    are_neighbors,
    are_parallel,
    edge_at,
    edge_direction,
    edge_index,
    edge_order,
    edges_cross,
    in_open_arc,
    is_boundary,
    reflect_edge,
    rotate_edge,
)
from helpers import float_cross


def E(a, b):
    return Edge.of(a, b)


def test_context_rejects_bad_m():
    for bad in (1, 0, -3, 2.5, "4", True):
        with pytest.raises(DomainError):
            GraphContext(bad)


def test_context_sizes():
    for m in range(2, 9):
        ctx = GraphContext(m)
        assert ctx.n == 2 * m
        assert ctx.edge_count == m * (2 * m - 1)
        assert ctx.edge_count == ctx.n * (ctx.n - 1) // 2
        assert sum(1 for _ in ctx.all_edges()) == ctx.edge_count


def test_edge_canonical_form():
    assert E(5, 2) == Edge(2, 5)
    assert E(0, 1).endpoints() == (0, 1)
    with pytest.raises(DomainError):
        Edge(3, 3)
    with pytest.raises(DomainError):
        Edge(4, 2)
    with pytest.raises(DomainError):
        E(2, 2)
    with pytest.raises(DomainError):
        Edge(-1, 2)


def test_edge_order_examples():
    assert edge_order(GraphContext(4), E(2, 7)) == 3
    assert edge_order(GraphContext(3), E(0, 1)) == 1
    assert edge_order(GraphContext(4), E(0, 4)) == 4


def test_edge_order_range_and_class_sizes():
    # 2m edges of each order below m, and only m diameters.
    for m in range(2, 9):
        ctx = GraphContext(m)
        per_order = {}
        for e in ctx.all_edges():
            o = edge_order(ctx, e)
            assert 1 <= o <= m
            per_order[o] = per_order.get(o, 0) + 1
        for o in range(1, m):
            assert per_order[o] == ctx.n
        assert per_order[m] == m


def test_edge_direction_examples():
    assert edge_direction(GraphContext(4), E(2, 7)) == 1
    assert edge_direction(GraphContext(4), E(3, 5)) == 0
    assert edge_direction(GraphContext(3), E(0, 3)) == 3


def test_order_parity_matches_direction_parity():
    for m in range(2, 9):
        ctx = GraphContext(m)
        for e in ctx.all_edges():
            assert edge_order(ctx, e) % 2 == edge_direction(ctx, e) % 2


def test_are_parallel_examples():
    assert are_parallel(GraphContext(4), E(0, 1), E(2, 7))
    assert not are_parallel(GraphContext(4), E(0, 1), E(1, 2))
    assert are_parallel(GraphContext(3), E(0, 3), E(1, 2))


def test_are_neighbors_examples():
    assert are_neighbors(GraphContext(3), E(0, 3), E(2, 5))
    assert not are_neighbors(GraphContext(7), E(0, 7), E(3, 10))
    # Shared vertex does not matter by itself; here 1 and 2 are adjacent.
    assert are_neighbors(GraphContext(3), E(0, 1), E(1, 2))
    # Shared vertex with no adjacent endpoint pair anywhere: not neighbors.
    assert not are_neighbors(GraphContext(4), E(0, 4), E(2, 4))


def test_edges_cross_examples():
    assert edges_cross(GraphContext(2), E(0, 2), E(1, 3))
    assert not edges_cross(GraphContext(3), E(0, 1), E(2, 3))
    assert not edges_cross(GraphContext(3), E(0, 2), E(2, 4))


def test_edges_cross_agrees_with_float_geometry():
    for m in range(2, 6):
        ctx = GraphContext(m)
        universe = list(ctx.all_edges())
        for e in universe:
            for f in universe:
                expected = float_cross(ctx.n, e.u, e.v, f.u, f.v)
                assert edges_cross(ctx, e, f) == expected, (m, e, f)


def test_predicate_symmetries():
    for m in range(2, 6):
        ctx = GraphContext(m)
        universe = list(ctx.all_edges())
        for e in universe:
            assert not edges_cross(ctx, e, e)
            for f in universe:
                assert edges_cross(ctx, e, f) == edges_cross(ctx, f, e)
                assert are_neighbors(ctx, e, f) == are_neighbors(ctx, f, e)
                assert are_parallel(ctx, e, f) == are_parallel(ctx, f, e)


def test_rotation_equivariance():
    for m in range(2, 6):
        ctx = GraphContext(m)
        universe = list(ctx.all_edges())
        for e in universe:
            re = rotate_edge(ctx, e, 1)
            assert edge_order(ctx, re) == edge_order(ctx, e)
            assert edge_direction(ctx, re) == (edge_direction(ctx, e) + 2) % ctx.n
            for f in universe:
                rf = rotate_edge(ctx, f, 1)
                assert edges_cross(ctx, re, rf) == edges_cross(ctx, e, f)
                assert are_neighbors(ctx, re, rf) == are_neighbors(ctx, e, f)
                assert are_parallel(ctx, re, rf) == are_parallel(ctx, e, f)


def test_reflection_invariance():
    for m in range(2, 6):
        ctx = GraphContext(m)
        universe = list(ctx.all_edges())
        for e in universe:
            assert edge_order(ctx, reflect_edge(ctx, e)) == edge_order(ctx, e)
            for f in universe:
                assert edges_cross(ctx, reflect_edge(ctx, e), reflect_edge(ctx, f)) == edges_cross(
                    ctx, e, f
                )
                assert are_neighbors(
                    ctx, reflect_edge(ctx, e), reflect_edge(ctx, f)
                ) == are_neighbors(ctx, e, f)


def test_is_boundary_examples():
    assert is_boundary(GraphContext(3), E(5, 0))
    assert not is_boundary(GraphContext(3), E(0, 2))
    assert is_boundary(GraphContext(2), E(0, 3))


def test_in_open_arc():
    ctx = GraphContext(3)
    assert in_open_arc(ctx, 0, 3, 1)
    assert in_open_arc(ctx, 0, 3, 2)
    assert not in_open_arc(ctx, 0, 3, 0)
    assert not in_open_arc(ctx, 0, 3, 3)
    assert not in_open_arc(ctx, 0, 3, 4)
    # wrap-around arc
    assert in_open_arc(ctx, 4, 1, 5)
    assert in_open_arc(ctx, 4, 1, 0)
    assert not in_open_arc(ctx, 4, 1, 2)


def test_edge_index_is_a_bijection():
    for m in range(2, 7):
        ctx = GraphContext(m)
        seen = set()
        for e in ctx.all_edges():
            i = edge_index(ctx, e)
            assert 0 <= i < ctx.edge_count
            assert edge_at(ctx, i) == e
            seen.add(i)
        assert len(seen) == ctx.edge_count
    with pytest.raises(DomainError):
        edge_at(GraphContext(2), 6)
    with pytest.raises(DomainError):
        edge_index(GraphContext(2), E(0, 5))


def test_edge_index_is_lexicographic():
    ctx = GraphContext(3)
    ordered = sorted(ctx.all_edges(), key=lambda e: edge_index(ctx, e))
    assert ordered == sorted(ctx.all_edges(), key=lambda e: (e.u, e.v))


def test_edgeset_basics():
    ctx = GraphContext(3)
    s = EdgeSet.from_pairs(ctx, [(4, 5), (0, 1), (2, 3)])
    assert len(s) == 3
    assert E(0, 1) in s and E(4, 5) in s
    assert E(0, 2) not in s
    # iteration is in canonical index order regardless of construction order
    assert s.edges() == (E(0, 1), E(2, 3), E(4, 5))
    assert s.pairs() == [[0, 1], [2, 3], [4, 5]]
    assert list(s.indices()) == sorted(s.indices())


def test_edgeset_algebra():
    ctx = GraphContext(3)
    a = EdgeSet.from_pairs(ctx, [(0, 1), (2, 3)])
    b = EdgeSet.from_pairs(ctx, [(2, 3), (4, 5)])
    assert (a & b).pairs() == [[2, 3]]
    assert (a | b).pairs() == [[0, 1], [2, 3], [4, 5]]
    assert (a - b).pairs() == [[0, 1]]
    assert not a.isdisjoint(b)
    assert a.isdisjoint(EdgeSet.from_pairs(ctx, [(0, 5)]))
    assert (a & b).issubset(a) and (a & b).issubset(b)
    assert a.issubset(a | b)


def test_edgeset_context_mismatch():
    a = EdgeSet.from_pairs(GraphContext(3), [(0, 1)])
    b = EdgeSet.from_pairs(GraphContext(4), [(0, 1)])
    with pytest.raises(DomainError):
        a & b
    with pytest.raises(DomainError):
        a.isdisjoint(b)
    assert a != b


def test_edgeset_rotate_reflect():
    ctx = GraphContext(3)
    s = EdgeSet.from_pairs(ctx, [(0, 1), (2, 5)])
    assert s.rotate(1) == EdgeSet.from_pairs(ctx, [(1, 2), (3, 0)])
    assert s.reflect() == EdgeSet.from_pairs(ctx, [(4, 5), (3, 0)])
    assert s.rotate(ctx.n) == s
    assert s.reflect().reflect() == s


def test_edgeset_immutable():
    ctx = GraphContext(2)
    s = EdgeSet.from_pairs(ctx, [(0, 1)])
    with pytest.raises(AttributeError):
        s.mask = 0
    with pytest.raises(DomainError):
        EdgeSet(ctx, 1 << ctx.edge_count)
    with pytest.raises(DomainError):
        EdgeSet(ctx, -1)
