"""The edge intersection operator and its generation certificate.

EI(H) collects every intersection e & f of two distinct hyperedges with at
least two vertices.  When e is a proper subset of f the intersection is e
itself, and it counts.  A set-difference formulation that drops intersections
equal to some input hyperedge (``Complement[..., eh]``) silently loses those
edges; ``ei_complement_variant`` reproduces that behaviour for comparison.
"""
from __future__ import annotations

from .core import Hyperedge, Hypergraph, mask_vertices

# EI edge -> 1-based index pairs (a, b), a < b, with e_a & e_b equal to the key.
GenerationCertificate = dict[Hyperedge, list[tuple[int, int]]]


def _intersection_pairs(h: Hypergraph):
    masks = h.masks
    m = len(masks)
    for a in range(m):
        ma = masks[a]
        for b in range(a + 1, m):
            inter = ma & masks[b]
            if inter.bit_count() >= 2:
                yield a, b, inter


def edge_intersection_hypergraph(h: Hypergraph) -> Hypergraph:
    found = {inter for _, _, inter in _intersection_pairs(h)}
    return Hypergraph(h.n, tuple(sorted(mask_vertices(x) for x in found)))


def generation_certificate(h: Hypergraph) -> GenerationCertificate:
    cert: GenerationCertificate = {}
    for a, b, inter in _intersection_pairs(h):
        cert.setdefault(mask_vertices(inter), []).append((a + 1, b + 1))
    return {key: cert[key] for key in sorted(cert)}


def ei_complement_variant(h: Hypergraph) -> Hypergraph:
    """All-pairs intersections of size >= 2 minus the input hyperedges themselves.

    Kept only to demonstrate the subset-pair defect; never use it for
    verification.
    """
    sets = [frozenset(e) for e in h.edges]
    inters = {a & b for a in sets for b in sets}
    kept = {tuple(sorted(s)) for s in inters if len(s) > 1} - set(h.edges)
    return Hypergraph(h.n, tuple(sorted(kept)))
