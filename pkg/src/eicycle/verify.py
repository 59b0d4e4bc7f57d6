"""Decide whether EI(H) equals a cycle and report every defect found."""
from __future__ import annotations

from dataclasses import dataclass, field

from .analysis import half_generation_count, is_chord
from .construct import ConstructionOutput
from .core import CycleOrder, Hyperedge, Hypergraph, cycle_edges, regularity, uniformity
from .ei import edge_intersection_hypergraph, generation_certificate
from .errors import InvalidParameter


@dataclass(frozen=True)
class VerificationReport:
    is_cycle_realization: bool
    missing_edges: tuple[Hyperedge, ...]
    chords: tuple[Hyperedge, ...]
    oversized: tuple[Hyperedge, ...]
    uniformity: int | None
    regularity: int | None
    edge_count: int
    sum_ke: int
    failed_claims: tuple[str, ...] = field(default=())

    @property
    def ok(self) -> bool:
        return self.is_cycle_realization and not self.failed_claims

    def summary(self) -> str:
        lines = [
            f"is_cycle_realization = {str(self.is_cycle_realization).lower()}",
            f"edge_count = {self.edge_count}",
            f"uniformity = {self.uniformity if self.uniformity is not None else '-'}",
            f"regularity = {self.regularity if self.regularity is not None else '-'}",
            f"sum_ke = {self.sum_ke}",
        ]
        for label, items in (
            ("missing", self.missing_edges),
            ("chords", self.chords),
            ("oversized", self.oversized),
        ):
            if items:
                lines.append(f"{label} = " + " ".join(_braces(e) for e in items))
        lines.extend(f"failed claim: {c}" for c in self.failed_claims)
        return "\n".join(lines)


def _braces(vs) -> str:
    return "{" + ",".join(str(v) for v in vs) + "}"


def verify_cycle_realization(h: Hypergraph, order: CycleOrder) -> VerificationReport:
    if order.n != h.n:
        raise InvalidParameter(f"cycle has {order.n} vertices, hypergraph has {h.n}")
    target = cycle_edges(order)
    ei_edges = set(edge_intersection_hypergraph(h).edges)
    missing = tuple(sorted(target - ei_edges))
    chords = tuple(sorted(e for e in ei_edges if is_chord(e, order)))
    oversized = tuple(e for e in chords if len(e) >= 3)
    sum_ke = sum(half_generation_count(e, order) for e in h.edges if len(e) < h.n)
    return VerificationReport(
        is_cycle_realization=not (missing or chords),
        missing_edges=missing,
        chords=chords,
        oversized=oversized,
        uniformity=uniformity(h),
        regularity=regularity(h),
        edge_count=len(h),
        sum_ke=sum_ke,
    )


def check_theorem2_claims(out: ConstructionOutput) -> VerificationReport:
    """Verify a 6-uniform construction and the counts it is supposed to hit."""
    if out.recipe not in ("lemma1", "lemma2", "lemma3"):
        raise InvalidParameter(f"claims apply to lemma constructions, not {out.recipe!r}")
    h, n = out.hypergraph, out.n
    report = verify_cycle_realization(h, out.cycle)
    failed = []
    if not report.is_cycle_realization:
        failed.append("EI(H) differs from the cycle")
    if report.regularity != 3:
        failed.append(f"not 3-regular (regularity {report.regularity})")
    sizes = h.size_profile()
    if n % 2 == 0:
        if len(h) != n // 2:
            failed.append(f"{len(h)} hyperedges, expected {n // 2}")
        if sizes != {6: n // 2}:
            failed.append(f"size profile {sizes}, expected all 6")
    else:
        if len(h) != (n + 1) // 2:
            failed.append(f"{len(h)} hyperedges, expected {(n + 1) // 2}")
        if sizes != {3: 1, 6: (n - 1) // 2}:
            failed.append(f"size profile {sizes}, expected one 3 and the rest 6")
    if report.is_cycle_realization and report.sum_ke < 2 * n:
        failed.append(f"sum of k_e is {report.sum_ke} < 2n")
    return VerificationReport(**{**report.__dict__, "failed_claims": tuple(failed)})


def render_certificate(h: Hypergraph, order: CycleOrder) -> str:
    """One line per cycle edge in cyclic order, starting with the edge after the first vertex."""
    if not verify_cycle_realization(h, order).is_cycle_realization:
        raise InvalidParameter("hypergraph does not realize the cycle; no certificate")
    cert = generation_certificate(h)
    pairs = order.ordered_edges()
    pairs = pairs[1:] + pairs[:1]
    lines = []
    for a, b in pairs:
        i, j = cert[tuple(sorted((a, b)))][0]
        lines.append(f"e{i} ∩ e{j} = {{{a},{b}}}")
    return "\n".join(lines) + "\n"
