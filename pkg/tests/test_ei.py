import itertools

from hypothesis import given, settings, strategies as st

from eicycle.core import CycleOrder, Hypergraph, cycle_edges
from eicycle.ei import ei_complement_variant, edge_intersection_hypergraph, generation_certificate
from eicycle.construct import unchecked_hypercycle3


def naive_ei(edges) -> set[frozenset]:
    sets = [frozenset(e) for e in edges]
    out = set()
    for i, j in itertools.combinations(range(len(sets)), 2):
        x = sets[i] & sets[j]
        if len(x) >= 2:
            out.add(x)
    return out


@st.composite
def hypergraphs(draw, max_n=12, max_edges=8):
    n = draw(st.integers(1, max_n))
    edges = draw(
        st.lists(
            st.frozensets(st.integers(1, n), min_size=1, max_size=n),
            max_size=max_edges,
            unique=True,
        )
    )
    return Hypergraph(n, tuple(tuple(e) for e in edges))


@settings(max_examples=1000, deadline=None)
@given(hypergraphs())
def test_ei_matches_naive_pairs(h):
    ours = {frozenset(e) for e in edge_intersection_hypergraph(h).edges}
    assert ours == naive_ei(h.edges)


@settings(max_examples=200, deadline=None)
@given(hypergraphs())
def test_ei_edges_come_from_two_hyperedges(h):
    ei = edge_intersection_hypergraph(h)
    assert ei.n == h.n
    assert list(ei.edges) == sorted(ei.edges)
    for e in ei.edges:
        assert len(e) >= 2
        assert sum(1 for f in h.edges if set(e) <= set(f)) >= 2


@settings(max_examples=200, deadline=None)
@given(hypergraphs())
def test_certificate_pairs_are_exact(h):
    cert = generation_certificate(h)
    assert set(cert) == set(edge_intersection_hypergraph(h).edges)
    for key, pairs in cert.items():
        assert pairs and pairs == sorted(pairs)
        for a, b in pairs:
            assert a < b
            assert tuple(sorted(set(h.edges[a - 1]) & set(h.edges[b - 1]))) == key


def test_example_ei_is_c24(example24):
    assert set(edge_intersection_hypergraph(example24).edges) == cycle_edges(CycleOrder.canonical(24))


def test_single_hyperedge_has_empty_ei():
    assert edge_intersection_hypergraph(Hypergraph(3, ((1, 2, 3),))).edges == ()


def test_subset_pair_counts():
    h = Hypergraph(3, ((1, 2), (1, 2, 3)))
    assert edge_intersection_hypergraph(h).edges == ((1, 2),)
    # the set-difference formulation loses it
    assert ei_complement_variant(h).edges == ()


def test_certificate_examples(example24):
    cert = generation_certificate(example24)
    assert cert[(2, 3)] == [(1, 2)]
    assert cert[(1, 24)] == [(6, 9)]


def test_certificate_empty():
    assert generation_certificate(Hypergraph(6, ((1, 2), (3, 4), (5, 6)))) == {}


def test_hypercycle4_ei_has_chords():
    ei = naive_ei(unchecked_hypercycle3(4).hypergraph.edges)
    assert frozenset({1, 3}) in ei
