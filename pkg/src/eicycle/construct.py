"""Hypergraphs whose edge intersection hypergraph is the cycle C_n.

Even n >= 24 is written as n = 8k + l with l in {0, 2, 4, 6}.  The n/2
six-element hyperedges come in l/2 five-groups followed by k - l/2
four-groups; inside a group the first 3-sections advance by one vertex while
the second 3-sections sit further round the cycle.  For k = 4 the second
3-sections of the second and third member of every group are swapped.

Odd n >= 25 inserts a new vertex n between 3 and 4 of the (n-1)-construction
and adds the triple {3, n, 4}.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, field

from .core import CycleOrder, Hyperedge, Hypergraph, make_edge, normalize_vertex
from .errors import InternalConsistencyError, OutOfRange

RECIPES = ("hypercycle3", "lemma1", "lemma2", "lemma3", "small-n")
LEMMA2_SIZES = frozenset({32, 34, 36, 38})


class GroupKind(str, enum.Enum):
    FOUR = "four"
    FIVE = "five"


@dataclass(frozen=True)
class GroupSpec:
    group_index: int
    kind: GroupKind
    base_edge_index: int
    case_tag: str

    @property
    def size(self) -> int:
        return 5 if self.kind is GroupKind.FIVE else 4


@dataclass(frozen=True)
class ConstructionOutput:
    hypergraph: Hypergraph
    cycle: CycleOrder
    recipe: str
    groups: tuple[GroupSpec, ...] = ()
    parameters: dict = field(default_factory=dict)
    # Per hyperedge, the "first" 3-section in cycle order (None when not group-based).
    first_sections: tuple[tuple[int, ...] | None, ...] = ()
    verified: bool = False

    @property
    def n(self) -> int:
        return self.hypergraph.n


def _split(n: int) -> tuple[int, int]:
    return n // 8, n % 8


def strong_hypercycle3(n: int) -> ConstructionOutput:
    if n < 5:
        raise OutOfRange(f"the strong 3-uniform hypercycle realizes C_n only for n >= 5, got {n}")
    return unchecked_hypercycle3(n)


def unchecked_hypercycle3(n: int) -> ConstructionOutput:
    """{i, i+1, i+2} for every i, without the n >= 5 guard (n >= 3)."""
    if n < 3:
        raise OutOfRange(f"need n >= 3, got {n}")
    edges = tuple(make_edge((i, i + 1, i + 2), n) for i in range(1, n + 1))
    windows = tuple(tuple(normalize_vertex(i + d, n) for d in range(3)) for i in range(1, n + 1))
    return ConstructionOutput(
        Hypergraph(n, edges), CycleOrder.canonical(n), "hypercycle3", first_sections=windows
    )


def _check_even_layout(n: int, unchecked: bool) -> None:
    if n % 2:
        raise OutOfRange(f"n must be even, got {n}")
    if unchecked:
        k, l = _split(n)
        if n < 8 or k < l // 2:
            raise OutOfRange(f"no group layout exists for n = {n}")
    elif n < 24:
        raise OutOfRange(f"the group construction needs n >= 24, got {n}")


def group_layout(n: int, *, unchecked: bool = False) -> list[GroupSpec]:
    _check_even_layout(n, unchecked)
    k, l = _split(n)
    half = l // 2
    groups = []
    for jt in range(half):
        tag = "II" if (n != 30 and l >= 2 and jt == half - 1) else "I"
        groups.append(GroupSpec(jt, GroupKind.FIVE, 5 * jt + 1, tag))
    for jt in range(half, k):
        tag = "IV" if (l >= 2 and jt == k - 1) else "III"
        groups.append(GroupSpec(jt, GroupKind.FOUR, 4 * jt + half + 1, tag))
    return groups


def _group_sections(g: GroupSpec, l: int) -> tuple[list[int], list[int], int]:
    """Start vertices of first and second 3-sections for each member of a group.

    Starts are unreduced; the third value is the group offset (10*jt or x).
    """
    jt = g.group_index
    if g.kind is GroupKind.FIVE:
        base = 10 * jt
        firsts = [base + 1 + i for i in range(5)]
        if g.case_tag == "I":
            seconds = [base + 8, base + 19, base + 16, base - 3, base]
        else:
            seconds = [base + 8, base + 17, base + 14, base - 3, base]
        return firsts, seconds, base
    x = 8 * jt if l == 0 else 8 * jt + l - 1
    firsts = [x + 1 + i for i in range(4)]
    if g.case_tag == "III":
        seconds = [x + 7, x + 16, x + 13, x - 2]
    else:
        seconds = [x + 7, x + 18, x + 15, x - 2]
    return firsts, seconds, x


def construct_even(n: int, variant: str = "auto", *, unchecked: bool = False) -> ConstructionOutput:
    """Closed-form 6-uniform construction; no verification is done here.

    ``variant='auto'`` swaps second sections exactly when n is 32..38.
    ``unchecked=True`` drops the n >= 24 guard so the known failures for
    small n and wrong variants can be reproduced; such output is unverified.
    """
    if variant not in ("auto", "lemma1", "lemma2"):
        raise OutOfRange(f"unknown variant {variant!r}")
    _check_even_layout(n, unchecked)
    if variant == "auto":
        variant = "lemma2" if n in LEMMA2_SIZES else "lemma1"
    elif not unchecked and (variant == "lemma2") != (n in LEMMA2_SIZES):
        raise OutOfRange(f"variant {variant} does not apply to n = {n}; pass unchecked=True")
    swap = variant == "lemma2"
    k, l = _split(n)
    groups = group_layout(n, unchecked=unchecked)
    edges: list[Hyperedge] = []
    firsts_out: list[tuple[int, ...]] = []
    offsets = {}
    for g in groups:
        firsts, seconds, offset = _group_sections(g, l)
        offsets[g.group_index] = offset
        if swap:
            seconds[1], seconds[2] = seconds[2], seconds[1]
        for p, q in zip(firsts, seconds):
            edges.append(make_edge((p, p + 1, p + 2, q, q + 1, q + 2), n, collapse=unchecked))
            firsts_out.append(tuple(normalize_vertex(p + d, n) for d in range(3)))
    return ConstructionOutput(
        Hypergraph(n, tuple(edges)),
        CycleOrder.canonical(n),
        variant,
        tuple(groups),
        {"k": k, "l": l, "offsets": offsets, "unchecked": unchecked},
        tuple(firsts_out),
    )


def construct_odd(n: int) -> ConstructionOutput:
    if n % 2 == 0 or n < 25:
        raise OutOfRange(f"the odd construction needs odd n >= 25, got {n}")
    base = construct_even(n - 1)
    old = base.hypergraph.edges
    holders3 = [i for i, e in enumerate(old) if 3 in e]
    holders4 = [i for i, e in enumerate(old) if 4 in e]
    if holders3 != [0, 1, 2] or holders4 != [1, 2, 3]:
        raise InternalConsistencyError(
            f"vertex 3 lies in {holders3}, vertex 4 in {holders4}; expected e1-e3 and e2-e4"
        )
    edges = list(old)
    edges[1] = make_edge((set(old[1]) - {4}) | {n})
    edges[2] = make_edge((set(old[2]) - {3}) | {n})
    edges.append((3, 4, n))
    firsts = list(base.first_sections)
    firsts[1] = (2, 3, n)
    firsts[2] = (n, 4, 5)
    firsts.append((3, n, 4))
    cycle = CycleOrder((1, 2, 3, n) + tuple(range(4, n)))
    params = dict(base.parameters, base_recipe=base.recipe)
    return ConstructionOutput(
        Hypergraph(n, tuple(edges)), cycle, "lemma3", base.groups, params, tuple(firsts)
    )


# Minimum realization of C_4 found by exhaustive search (see search.min_realization).
C4_WITNESS: tuple[Hyperedge, ...] = ((1, 2), (1, 2, 3, 4), (1, 4), (2, 3), (3, 4))


def construct_small(n: int) -> ConstructionOutput:
    if not 3 <= n <= 23:
        raise OutOfRange(f"small-n construction covers 3..23, got {n}")
    if n == 3:
        edges = ((1, 2), (1, 2, 3), (1, 3), (2, 3))
        return ConstructionOutput(Hypergraph(3, edges), CycleOrder.canonical(3), "small-n")
    if n == 4:
        return ConstructionOutput(Hypergraph(4, C4_WITNESS), CycleOrder.canonical(4), "small-n")
    return strong_hypercycle3(n)


def construct(n: int) -> ConstructionOutput:
    """Verified realization of C_n for any n >= 3."""
    from .verify import verify_cycle_realization

    if n < 3:
        raise OutOfRange(f"need n >= 3, got {n}")
    if n <= 23:
        out = construct_small(n)
    elif n % 2 == 0:
        out = construct_even(n)
    else:
        out = construct_odd(n)
    report = verify_cycle_realization(out.hypergraph, out.cycle)
    if not report.is_cycle_realization:
        raise InternalConsistencyError(f"construction for n = {n} failed verification: {report}")
    return ConstructionOutput(
        out.hypergraph, out.cycle, out.recipe, out.groups, out.parameters, out.first_sections, True
    )
