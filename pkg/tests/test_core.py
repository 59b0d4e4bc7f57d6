import pytest
from hypothesis import given, strategies as st

from eicycle.core import (
    CycleOrder,
    Hypergraph,
    cycle_edges,
    degree,
    is_k_uniform,
    is_r_regular,
    make_edge,
    normalize_vertex,
)
from eicycle.errors import InvalidParameter


@pytest.mark.parametrize("v, n, expected", [(25, 24, 1), (0, 24, 24), (-3, 26, 23), (24, 24, 24), (1, 1, 1)])
def test_normalize_vertex(v, n, expected):
    assert normalize_vertex(v, n) == expected


def test_normalize_vertex_rejects_zero_modulus():
    with pytest.raises(InvalidParameter):
        normalize_vertex(3, 0)


@given(st.integers(-10**6, 10**6), st.integers(1, 500))
def test_normalize_vertex_periodic_and_idempotent(v, n):
    r = normalize_vertex(v, n)
    assert 1 <= r <= n
    assert normalize_vertex(r, n) == r
    assert normalize_vertex(v + n, n) == r


def test_cycle_edges_canonical_5():
    assert cycle_edges(CycleOrder.canonical(5)) == {(1, 2), (2, 3), (3, 4), (4, 5), (1, 5)}


def test_cycle_edges_canonical_3():
    assert cycle_edges(CycleOrder.canonical(3)) == {(1, 2), (2, 3), (1, 3)}


def test_cycle_edges_permuted_order():
    order = CycleOrder((1, 2, 3, 25) + tuple(range(4, 25)))
    edges = cycle_edges(order)
    assert (3, 25) in edges and (4, 25) in edges
    assert (3, 4) not in edges


def test_cycle_order_rejects_small_or_bad():
    with pytest.raises(InvalidParameter):
        CycleOrder.canonical(2)
    with pytest.raises(InvalidParameter):
        CycleOrder((1, 2, 2, 4))


@given(st.permutations(list(range(1, 13))))
def test_cycle_edges_shape(perm):
    edges = cycle_edges(CycleOrder(tuple(perm)))
    assert len(edges) == 12
    counts = {}
    for a, b in edges:
        counts[a] = counts.get(a, 0) + 1
        counts[b] = counts.get(b, 0) + 1
    assert set(counts.values()) == {2}


def test_degree_on_example(example24):
    assert degree(example24, 1) == 3
    assert degree(example24, 13) == 3
    with pytest.raises(InvalidParameter):
        degree(example24, 25)


def test_degree_empty():
    assert degree(Hypergraph(5), 3) == 0


def test_uniform_regular(example24):
    assert is_k_uniform(example24, 6)
    assert is_r_regular(example24, 3)
    assert not is_k_uniform(example24, 3)
    empty = Hypergraph(4)
    assert is_k_uniform(empty, 7) and is_r_regular(empty, 0)


def test_hypergraph_rejects_duplicates_and_range():
    with pytest.raises(InvalidParameter):
        Hypergraph(3, ((1, 2, 3), (3, 2, 1)))
    with pytest.raises(InvalidParameter):
        Hypergraph(3, ((1, 4),))
    with pytest.raises(InvalidParameter):
        Hypergraph(3, ((1, 1),))


def test_hypergraph_keeps_edge_order_and_sorts_vertices():
    h = Hypergraph(5, ((5, 1), (2, 3, 1)))
    assert h.edges == ((1, 5), (1, 2, 3))


def test_singletons_allowed():
    assert Hypergraph(3, ((2,), (1, 2))).edges == ((2,), (1, 2))


def test_make_edge_collapse():
    assert make_edge((2, 3, 4, 16, 17, 18), 16, collapse=True) == (1, 2, 3, 4, 16)
    with pytest.raises(InvalidParameter):
        make_edge((2, 3, 4, 16, 17, 18), 16)
