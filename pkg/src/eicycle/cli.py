"""Command-line front end.

Exit status: 0 on success, 1 when a verification or reproduction fails,
2 for usage errors (bad arguments, unreadable input, out-of-range n).
"""
from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path

from . import io
from .analysis import half_generation_count, section_profile
from .construct import (
    construct,
    construct_even,
    strong_hypercycle3,
    unchecked_hypercycle3,
)
from .core import CycleOrder
from .ei import edge_intersection_hypergraph, generation_certificate
from .errors import EICycleError, InternalConsistencyError
from .search import SearchConfig, min_realization
from .verify import render_certificate, verify_cycle_realization

log = logging.getLogger("eicycle")


class UsageError(Exception):
    pass


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _load(path: str) -> io.HypergraphFile:
    try:
        return io.read(path)
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None


def _cycle(f: io.HypergraphFile, mode: str) -> CycleOrder:
    if mode == "canonical":
        return CycleOrder.canonical(f.hypergraph.n)
    return f.cycle_or_canonical()


def _braces(vs) -> str:
    return "{" + ",".join(map(str, vs)) + "}"


def cmd_construct(args) -> int:
    n, variant = args.n, args.variant
    if variant == "auto":
        if args.unchecked:
            raise UsageError("--unchecked needs an explicit --variant")
        out = construct(n)
    elif variant == "hypercycle3":
        out = unchecked_hypercycle3(n) if args.unchecked else strong_hypercycle3(n)
    else:
        out = construct_even(n, variant, unchecked=args.unchecked)
    notes = [f"recipe: {out.recipe}"]
    if not out.verified:
        notes.append("unverified output")
    cycle = None if out.cycle.is_canonical else out.cycle
    if args.format == "json":
        text = io.to_json(out.hypergraph, out.cycle, out.recipe)
    else:
        text = io.to_text(out.hypergraph, cycle, notes)
    _emit(text, args.out)
    return 0


def cmd_ei(args) -> int:
    f = _load(args.input)
    ei = edge_intersection_hypergraph(f.hypergraph)
    text = io.to_json(ei) if args.format == "json" else io.to_text(ei)
    _emit(text, args.out)
    return 0


def cmd_verify(args) -> int:
    f = _load(args.input)
    report = verify_cycle_realization(f.hypergraph, _cycle(f, args.cycle))
    print(report.summary())
    return 0 if report.is_cycle_realization else 1


def cmd_certify(args) -> int:
    f = _load(args.input)
    cycle = _cycle(f, args.cycle)
    if not verify_cycle_realization(f.hypergraph, cycle).is_cycle_realization:
        print("not a realization of the cycle; no certificate", file=sys.stderr)
        return 1
    sys.stdout.write(render_certificate(f.hypergraph, cycle))
    return 0


def cmd_kprofile(args) -> int:
    f = _load(args.input)
    cycle = _cycle(f, args.cycle)
    total = 0
    for i, e in enumerate(f.hypergraph.edges, start=1):
        if len(e) >= cycle.n:
            print(f"e{i} = {_braces(e)}  sections -  k_e -")
            continue
        prof = "+".join(map(str, sorted(section_profile(e, cycle), reverse=True)))
        k = half_generation_count(e, cycle)
        total += k
        print(f"e{i} = {_braces(e)}  sections {prof}  k_e = {k}")
    print(f"sum k_e = {total}")
    return 0


def cmd_search(args) -> int:
    cfg = SearchConfig(
        n=args.n,
        max_edges=args.max_edges,
        uniform_k=args.uniform,
        symmetry_reduction=not args.no_symmetry,
        node_budget=args.budget,
        hard_limit=args.hard_limit,
    )
    res = min_realization(cfg)
    print(f"minimum = {res.minimum if res.minimum is not None else 'none'}")
    print(f"witnesses = {len(res.witnesses)}")
    print(f"nodes_explored = {res.nodes_explored}")
    print(f"exhausted = {str(res.exhausted).lower()}")
    shown = res.witnesses if args.all_witnesses else res.witnesses[:1]
    for i, w in enumerate(shown, start=1):
        print(f"# witness {i}")
        sys.stdout.write(io.to_text(w))
    if args.out:
        outdir = Path(args.out)
        outdir.mkdir(parents=True, exist_ok=True)
        for i, w in enumerate(res.witnesses, start=1):
            (outdir / f"witness_{i:03d}.txt").write_text(io.to_text(w), encoding="utf-8")
    return 0 if res.minimum is not None else 1


def reproduce_failures() -> list[tuple[str, str, bool]]:
    """The three known failures of the even construction outside its range.

    Returns (label, offending intersection, reproduced?) triples; each
    offending intersection is a chord of the cycle.
    """
    cases = [
        ("lemma2 at n=24", 24, "lemma2", (2, 13), (2, 7)),
        ("lemma1 at n=16", 16, "lemma1", (1, 2, 3), (1, 2)),
        ("lemma2 at n=16", 16, "lemma2", (1, 2, 3), (1, 3)),
    ]
    rows = []
    for label, n, variant, bad, pair in cases:
        h = construct_even(n, variant, unchecked=True).hypergraph
        pairs = generation_certificate(h).get(bad, [])
        ok = pair in pairs and not verify_cycle_realization(h, CycleOrder.canonical(n)).is_cycle_realization
        a, b = pair
        rows.append((label, f"e{a} ∩ e{b} = {_braces(bad)}", ok))
    return rows


def cmd_remarks(args) -> int:
    rows = reproduce_failures()
    for label, text, ok in rows:
        print(f"{label}: chord {text}  {'reproduced' if ok else 'NOT reproduced'}")
    return 0 if all(ok for *_, ok in rows) else 1


def cmd_relabel(args) -> int:
    f = _load(args.input)
    cycle = f.cycle_or_canonical()
    h = io.relabel_canonical(f.hypergraph, cycle)
    text = io.to_json(h) if args.format == "json" else io.to_text(h)
    _emit(text, args.out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="eicycle", description="Hypergraphs whose edge intersection hypergraph is a cycle.")
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("construct", help="build a realization of C_n")
    c.add_argument("--n", type=int, required=True)
    c.add_argument("--variant", choices=["auto", "lemma1", "lemma2", "hypercycle3"], default="auto")
    c.add_argument("--unchecked", action="store_true", help="skip range guards; output is not verified")
    c.add_argument("--format", choices=["text", "json"], default="text")
    c.add_argument("--out")
    c.set_defaults(func=cmd_construct)

    e = sub.add_parser("ei", help="edge intersection hypergraph of a file")
    e.add_argument("--in", dest="input", required=True)
    e.add_argument("--format", choices=["text", "json"], default="text")
    e.add_argument("--out")
    e.set_defaults(func=cmd_ei)

    for name, func, helptext in (
        ("verify", cmd_verify, "check EI(H) against a cycle"),
        ("certify", cmd_certify, "print which hyperedge pair generates each cycle edge"),
        ("kprofile", cmd_kprofile, "section profile and k_e per hyperedge"),
    ):
        s = sub.add_parser(name, help=helptext)
        s.add_argument("--in", dest="input", required=True)
        s.add_argument("--cycle", choices=["canonical", "from-file"], default="from-file",
                       help="from-file falls back to canonical when the file has no cycle line")
        s.set_defaults(func=func)

    s = sub.add_parser("search-min", help="exhaustive minimum realization for small n")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--max-edges", type=int)
    s.add_argument("--uniform", type=int)
    s.add_argument("--no-symmetry", action="store_true")
    s.add_argument("--budget", type=int, help="node budget; required in practice for n >= 8")
    s.add_argument("--hard-limit", type=int, help="raise the largest n the search accepts")
    s.add_argument("--all-witnesses", action="store_true")
    s.add_argument("--out", help="directory receiving one file per witness")
    s.set_defaults(func=cmd_search)

    r = sub.add_parser("remarks", help="reproduce the known failures of the even construction")
    r.set_defaults(func=cmd_remarks)

    r = sub.add_parser("relabel-canonical", help="rename vertices so the file's cycle becomes 1..n")
    r.add_argument("--in", dest="input", required=True)
    r.add_argument("--format", choices=["text", "json"], default="text")
    r.add_argument("--out")
    r.set_defaults(func=cmd_relabel)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING, format="%(levelname)s %(message)s")
    try:
        return args.func(args)
    except InternalConsistencyError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (UsageError, EICycleError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
