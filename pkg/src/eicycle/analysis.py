"""Cycle-relative structure of hyperedges: sections, chords and k_e.

A k-section of e is a maximal run of k cyclically consecutive vertices of e
along the cycle order.  k_e counts the cycle edges {v, succ(v)} inside e,
which is the sum of (length - 1) over the sections.
"""
from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass

from .core import CycleOrder, Hyperedge
from .errors import DegenerateInput, InvalidParameter


@dataclass(frozen=True)
class Section:
    start: int
    length: int


@dataclass(frozen=True)
class SectionDecomposition:
    sections: tuple[Section, ...]

    def lengths(self) -> tuple[int, ...]:
        return tuple(sorted(s.length for s in self.sections))

    def vertices(self, order: CycleOrder) -> list[tuple[int, ...]]:
        """Each section expanded to its vertices in cycle order."""
        out = []
        for s in self.sections:
            run = [s.start]
            for _ in range(s.length - 1):
                run.append(order.successor(run[-1]))
            out.append(tuple(run))
        return out


def _check(e: Iterable[int], order: CycleOrder) -> frozenset[int]:
    es = frozenset(e)
    if not es:
        raise InvalidParameter("empty hyperedge")
    if not es <= order.position.keys():
        raise InvalidParameter(f"hyperedge {sorted(es)} leaves the cycle's vertex set")
    if len(es) >= order.n:
        raise DegenerateInput("a hyperedge covering the whole cycle has no sections")
    return es


def section_decomposition(e: Hyperedge, order: CycleOrder) -> SectionDecomposition:
    es = _check(e, order)
    sections = []
    for v in es:
        if order.predecessor(v) in es:
            continue
        length = 1
        w = order.successor(v)
        while w in es:
            length += 1
            w = order.successor(w)
        sections.append(Section(v, length))
    sections.sort(key=lambda s: s.start)
    return SectionDecomposition(tuple(sections))


def half_generation_count(e: Hyperedge, order: CycleOrder) -> int:
    return sum(s.length - 1 for s in section_decomposition(e, order).sections)


def section_profile(e: Hyperedge, order: CycleOrder) -> tuple[int, ...]:
    return section_decomposition(e, order).lengths()


# The eleven ways six vertices split into sections, grouped by k_e.
SIX_VERTEX_PROFILES: dict[int, tuple[tuple[int, ...], ...]] = {
    5: ((6,),),
    4: ((1, 5), (2, 4), (3, 3)),
    3: ((1, 1, 4), (1, 2, 3), (2, 2, 2)),
    2: ((1, 1, 1, 3), (1, 1, 2, 2)),
    1: ((1, 1, 1, 1, 2),),
    0: ((1, 1, 1, 1, 1, 1),),
}


def is_chord(s: Iterable[int], order: CycleOrder) -> bool:
    ss = tuple(s)
    if len(set(ss)) < 2:
        raise InvalidParameter("a chord candidate needs at least two vertices")
    if len(set(ss)) >= 3:
        return True
    a, b = ss
    return not order.adjacent(a, b)


def first_sections_tile(windows: Iterable[tuple[int, ...]], order: CycleOrder) -> bool:
    """True iff ``windows`` are exactly the n cyclic 3-windows of ``order``, each once."""
    expected = sorted(
        tuple(sorted(order.sequence[(i + d) % order.n] for d in range(3))) for i in range(order.n)
    )
    return sorted(tuple(sorted(w)) for w in windows) == expected
