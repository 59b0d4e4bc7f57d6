"""Text and JSON file formats for hypergraphs with an optional cycle order.

Text::

    n m
    # comment lines may appear anywhere
    <m lines of ascending vertex ids>
    cycle: v1 v2 ... vn        (optional, last)

JSON: ``{"n": ..., "edges": [[...], ...], "cycle": [...]}``; ``cycle`` is
optional and any ``recipe`` field is carried through untouched.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path

from .core import CycleOrder, Hypergraph
from .errors import EICycleError, ParseError


@dataclass(frozen=True)
class HypergraphFile:
    hypergraph: Hypergraph
    cycle: CycleOrder | None = None
    recipe: str | None = None

    def cycle_or_canonical(self) -> CycleOrder:
        return self.cycle if self.cycle is not None else CycleOrder.canonical(self.hypergraph.n)


def to_text(h: Hypergraph, cycle: CycleOrder | None = None, comments=()) -> str:
    lines = [f"{h.n} {len(h)}"]
    lines.extend(f"# {c}" for c in comments)
    lines.extend(" ".join(map(str, e)) for e in h.edges)
    if cycle is not None:
        lines.append("cycle: " + " ".join(map(str, cycle.sequence)))
    return "\n".join(lines) + "\n"


def to_json(h: Hypergraph, cycle: CycleOrder | None = None, recipe: str | None = None) -> str:
    obj: dict = {"n": h.n, "edges": [list(e) for e in h.edges]}
    if cycle is not None:
        obj["cycle"] = list(cycle.sequence)
    if recipe is not None:
        obj["recipe"] = recipe
    return json.dumps(obj) + "\n"


def _ints(tokens: list[str], lineno: int) -> list[int]:
    try:
        return [int(t) for t in tokens]
    except ValueError:
        raise ParseError(f"expected integers, got {' '.join(tokens)!r}", lineno) from None


def _check_edge(vs: list[int], n: int, lineno: int, seen: set) -> tuple[int, ...]:
    if not vs:
        raise ParseError("empty hyperedge", lineno)
    if len(set(vs)) != len(vs):
        raise ParseError("duplicate vertex in hyperedge", lineno)
    bad = [v for v in vs if not 1 <= v <= n]
    if bad:
        raise ParseError(f"vertex {bad[0]} outside 1..{n}", lineno)
    e = tuple(sorted(vs))
    if e in seen:
        raise ParseError(f"duplicate hyperedge {' '.join(map(str, e))}", lineno)
    seen.add(e)
    return e


def _make_cycle(seq: list[int], n: int, lineno: int | None) -> CycleOrder:
    if len(seq) != n:
        raise ParseError(f"cycle lists {len(seq)} vertices, expected {n}", lineno)
    try:
        return CycleOrder(tuple(seq))
    except EICycleError as exc:
        raise ParseError(str(exc), lineno) from None


def parse_text(text: str) -> HypergraphFile:
    header = None
    edges: list[tuple[int, ...]] = []
    seen: set = set()
    cycle = None
    recipe = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            body = line[1:].strip()
            if body.startswith("recipe:"):
                recipe = body.split(":", 1)[1].strip()
            continue
        if header is None:
            parts = line.split()
            if len(parts) != 2:
                raise ParseError("header must be 'n m'", lineno)
            n, m = _ints(parts, lineno)
            if n < 1 or m < 0:
                raise ParseError("header needs n >= 1 and m >= 0", lineno)
            header = (n, m)
            continue
        n, m = header
        if cycle is not None:
            raise ParseError("nothing may follow the cycle line", lineno)
        if line.startswith("cycle:"):
            cycle = _make_cycle(_ints(line[6:].split(), lineno), n, lineno)
            continue
        if len(edges) == m:
            raise ParseError(f"more than the declared {m} hyperedges", lineno)
        edges.append(_check_edge(_ints(line.split(), lineno), n, lineno, seen))
    if header is None:
        raise ParseError("missing 'n m' header", 1)
    if len(edges) != header[1]:
        last = len(text.splitlines())
        raise ParseError(f"declared {header[1]} hyperedges, found {len(edges)}", last)
    return HypergraphFile(Hypergraph(header[0], tuple(edges)), cycle, recipe)


def parse_json(text: str) -> HypergraphFile:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, exc.lineno) from None
    if not isinstance(obj, dict) or "n" not in obj or "edges" not in obj:
        raise ParseError("JSON hypergraph needs fields 'n' and 'edges'")
    n = obj["n"]
    if not isinstance(n, int) or n < 1:
        raise ParseError("'n' must be a positive integer")
    seen: set = set()
    edges = []
    for i, e in enumerate(obj["edges"]):
        if not isinstance(e, list) or not all(isinstance(v, int) for v in e):
            raise ParseError(f"edge {i + 1} is not an integer array")
        try:
            edges.append(_check_edge(e, n, None, seen))
        except ParseError as exc:
            raise ParseError(f"edge {i + 1}: {exc}") from None
    cycle = _make_cycle(obj["cycle"], n, None) if obj.get("cycle") is not None else None
    return HypergraphFile(Hypergraph(n, tuple(edges)), cycle, obj.get("recipe"))


def parse(text: str) -> HypergraphFile:
    """Dispatch on content: JSON objects start with '{'."""
    return parse_json(text) if text.lstrip().startswith("{") else parse_text(text)


def read(path: str | Path) -> HypergraphFile:
    return parse(Path(path).read_text(encoding="utf-8"))


def relabel_canonical(h: Hypergraph, cycle: CycleOrder) -> Hypergraph:
    """Rename vertices so ``cycle`` becomes 1, 2, ..., n; hyperedge order is kept."""
    mapping = {v: i + 1 for i, v in enumerate(cycle.sequence)}
    return h.relabel(mapping)
