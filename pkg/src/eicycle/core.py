"""Hypergraphs on the vertex set {1..n}, cycle orders and primitive predicates.

Vertices are 1-based throughout; the residue 0 maps to n.  Hyperedges are
stored as ascending tuples, and the edge order of a hypergraph is preserved
because construction indices (e_1, e_2, ...) are meaningful.
"""
from __future__ import annotations

from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field
from functools import cached_property

from .errors import InvalidParameter

Hyperedge = tuple[int, ...]


def normalize_vertex(v: int, n: int) -> int:
    """Reduce an arbitrary integer to the 1-based residue in 1..n."""
    if n < 1:
        raise InvalidParameter(f"vertex count must be positive, got {n}")
    return (v - 1) % n + 1


def make_edge(vertices: Iterable[int], n: int | None = None, *, collapse: bool = False) -> Hyperedge:
    """Canonical hyperedge from vertex labels, optionally reduced modulo n.

    Repeated labels after reduction are an error unless ``collapse`` is set:
    a formula that folds two vertices onto one is normally a bug worth seeing.
    """
    vs = list(vertices)
    if n is not None:
        vs = [normalize_vertex(v, n) for v in vs]
    if collapse:
        vs = set(vs)
    edge = tuple(sorted(vs))
    if len(set(edge)) != len(edge):
        raise InvalidParameter(f"repeated vertex in hyperedge {edge}")
    if not edge:
        raise InvalidParameter("empty hyperedge")
    return edge


def edge_mask(edge: Iterable[int]) -> int:
    m = 0
    for v in edge:
        m |= 1 << v
    return m


def mask_vertices(mask: int) -> Hyperedge:
    out = []
    v = 0
    while mask:
        if mask & 1:
            out.append(v)
        mask >>= 1
        v += 1
    return tuple(out)


@dataclass(frozen=True)
class Hypergraph:
    n: int
    edges: tuple[Hyperedge, ...] = field(default_factory=tuple)

    def __post_init__(self) -> None:
        if self.n < 1:
            raise InvalidParameter(f"vertex count must be positive, got {self.n}")
        canon = []
        seen = set()
        for raw in self.edges:
            e = tuple(sorted(raw))
            if not e:
                raise InvalidParameter("empty hyperedge")
            if len(set(e)) != len(e):
                raise InvalidParameter(f"repeated vertex in hyperedge {e}")
            if e[0] < 1 or e[-1] > self.n:
                raise InvalidParameter(f"hyperedge {e} leaves 1..{self.n}")
            if e in seen:
                raise InvalidParameter(f"duplicate hyperedge {e}")
            seen.add(e)
            canon.append(e)
        object.__setattr__(self, "edges", tuple(canon))

    def __len__(self) -> int:
        return len(self.edges)

    @cached_property
    def masks(self) -> tuple[int, ...]:
        return tuple(edge_mask(e) for e in self.edges)

    @property
    def vertices(self) -> range:
        return range(1, self.n + 1)

    def degrees(self) -> list[int]:
        """Degrees indexed by vertex; slot 0 is unused."""
        deg = [0] * (self.n + 1)
        for e in self.edges:
            for v in e:
                deg[v] += 1
        return deg

    def size_profile(self) -> dict[int, int]:
        prof: dict[int, int] = {}
        for e in self.edges:
            prof[len(e)] = prof.get(len(e), 0) + 1
        return dict(sorted(prof.items()))

    def relabel(self, mapping: dict[int, int]) -> Hypergraph:
        return Hypergraph(self.n, tuple(tuple(mapping[v] for v in e) for e in self.edges))


@dataclass(frozen=True)
class CycleOrder:
    """A cyclic vertex sequence; consecutive entries (and last/first) are cycle edges."""

    sequence: tuple[int, ...]

    def __post_init__(self) -> None:
        seq = tuple(int(v) for v in self.sequence)
        n = len(seq)
        if n < 3:
            raise InvalidParameter(f"a cycle needs at least 3 vertices, got {n}")
        if sorted(seq) != list(range(1, n + 1)):
            raise InvalidParameter("cycle order must be a permutation of 1..n")
        object.__setattr__(self, "sequence", seq)

    @classmethod
    def canonical(cls, n: int) -> CycleOrder:
        if n < 3:
            raise InvalidParameter(f"a cycle needs at least 3 vertices, got {n}")
        return cls(tuple(range(1, n + 1)))

    @property
    def n(self) -> int:
        return len(self.sequence)

    @property
    def is_canonical(self) -> bool:
        return self.sequence == tuple(range(1, self.n + 1))

    @cached_property
    def position(self) -> dict[int, int]:
        return {v: i for i, v in enumerate(self.sequence)}

    def successor(self, v: int) -> int:
        return self.sequence[(self.position[v] + 1) % self.n]

    def predecessor(self, v: int) -> int:
        return self.sequence[(self.position[v] - 1) % self.n]

    def ordered_edges(self) -> list[tuple[int, int]]:
        """Cycle edges as (v, successor(v)) in sequence order."""
        seq = self.sequence
        return [(seq[i], seq[(i + 1) % self.n]) for i in range(self.n)]

    @cached_property
    def edge_masks(self) -> frozenset[int]:
        return frozenset((1 << a) | (1 << b) for a, b in self.ordered_edges())

    def adjacent(self, a: int, b: int) -> bool:
        return b == self.successor(a) or a == self.successor(b)


def cycle_edges(order: CycleOrder | int) -> set[Hyperedge]:
    """The n cycle edges of ``order`` as sorted pairs; an int means the canonical cycle."""
    if isinstance(order, int):
        order = CycleOrder.canonical(order)
    return {tuple(sorted(p)) for p in order.ordered_edges()}


def degree(h: Hypergraph, v: int) -> int:
    if not 1 <= v <= h.n:
        raise InvalidParameter(f"vertex {v} outside 1..{h.n}")
    return sum(1 for e in h.edges if v in e)


def is_k_uniform(h: Hypergraph, k: int) -> bool:
    return all(len(e) == k for e in h.edges)


def is_r_regular(h: Hypergraph, r: int) -> bool:
    return all(d == r for d in h.degrees()[1:])


def uniformity(h: Hypergraph) -> int | None:
    sizes = {len(e) for e in h.edges}
    return sizes.pop() if len(sizes) == 1 else None


def regularity(h: Hypergraph) -> int | None:
    degs = set(h.degrees()[1:])
    return degs.pop() if len(degs) == 1 else None


def hypergraph(n: int, edges: Sequence[Iterable[int]]) -> Hypergraph:
    """Convenience constructor accepting any iterables as edges."""
    return Hypergraph(n, tuple(tuple(e) for e in edges))
