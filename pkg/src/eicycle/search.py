"""Exhaustive search for the fewest hyperedges realizing C_n.

Iterative deepening on the edge count m; at each m a depth-first search picks
candidate hyperedges in increasing lexicographic order.  Candidates and cycle
edges are bit masks.

Pruning rules, each independently switchable:

* intersections: two chosen hyperedges may share at most a cycle edge (this
  includes the case of one contained in the other, where the smaller one is
  the shared set).
* bound: every cycle edge must end up inside at least two chosen hyperedges,
  and a hyperedge adds at most its k_e to that tally, so the remaining picks
  must be able to pay off the total deficit; each deficient cycle edge must
  also still be coverable by some remaining candidate.
* symmetry: the first pick is restricted to dihedral orbit minima, and the
  witnesses found are closed under the dihedral group afterwards, so results
  are the same with or without it.
"""
from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass, field

from .core import Hyperedge, Hypergraph, edge_mask
from .errors import InvalidParameter, OutOfRange

log = logging.getLogger(__name__)

DEFAULT_HARD_LIMIT = 8
UNIFORM_HARD_LIMIT = 12


@dataclass(frozen=True)
class SearchConfig:
    n: int
    max_edges: int | None = None
    uniform_k: int | None = None
    max_edge_size: int | None = None
    symmetry_reduction: bool = False
    node_budget: int | None = None
    prune_intersections: bool = True
    prune_bound: bool = True
    hard_limit: int | None = None

    def __post_init__(self) -> None:
        if self.n < 3:
            raise OutOfRange(f"need n >= 3, got {self.n}")
        if self.n > self.limit:
            raise OutOfRange(f"n = {self.n} exceeds the search limit {self.limit}")
        if self.max_edges is not None and self.max_edges < 1:
            raise InvalidParameter("max_edges must be at least 1")

    @property
    def limit(self) -> int:
        if self.hard_limit is not None:
            return self.hard_limit
        return DEFAULT_HARD_LIMIT if self.uniform_k is None else UNIFORM_HARD_LIMIT

    @property
    def edge_bound(self) -> int:
        return self.max_edges if self.max_edges is not None else 2 * self.n


@dataclass
class SearchResult:
    minimum: int | None
    witnesses: list[Hypergraph] = field(default_factory=list)
    nodes_explored: int = 0
    exhausted: bool = True


def candidate_edges(cfg: SearchConfig) -> list[Hyperedge]:
    n = cfg.n
    if cfg.uniform_k is not None:
        sizes = [cfg.uniform_k]
    else:
        top = n if cfg.max_edge_size is None else min(n, cfg.max_edge_size)
        sizes = list(range(2, top + 1))
    out = [c for s in sizes if s >= 2 for c in itertools.combinations(range(1, n + 1), s)]
    if not out:
        raise InvalidParameter("no candidate hyperedges under these constraints")
    return sorted(out)


def dihedral_maps(n: int) -> list[dict[int, int]]:
    maps = []
    for r in range(n):
        maps.append({v: (v - 1 + r) % n + 1 for v in range(1, n + 1)})
        maps.append({v: (r - (v - 1)) % n + 1 for v in range(1, n + 1)})
    return maps


def _apply(g: dict[int, int], edges) -> tuple[Hyperedge, ...]:
    return tuple(sorted(tuple(sorted(g[v] for v in e)) for e in edges))


class _BudgetExceeded(Exception):
    pass


class _Searcher:
    def __init__(self, cfg: SearchConfig):
        self.cfg = cfg
        n = cfg.n
        self.cands = candidate_edges(cfg)
        self.masks = [edge_mask(c) for c in self.cands]
        self.cycle = [(1 << i) | (1 << (i % n + 1)) for i in range(1, n + 1)]
        self.cycle_index = {m: t for t, m in enumerate(self.cycle)}
        N = len(self.cands)
        self.contains = [[t for t, cm in enumerate(self.cycle) if cm & m == cm] for m in self.masks]
        self.holders = [0] * n
        for i, ts in enumerate(self.contains):
            for t in ts:
                self.holders[t] |= 1 << i
        self.suffix_max_k = [0] * (N + 1)
        for i in range(N - 1, -1, -1):
            self.suffix_max_k[i] = max(self.suffix_max_k[i + 1], len(self.contains[i]))
        self.compat = []
        for i in range(N):
            ok = 0
            for j in range(N):
                inter = self.masks[i] & self.masks[j]
                if i != j and (inter.bit_count() < 2 or inter in self.cycle_index):
                    ok |= 1 << j
            self.compat.append(ok)
        self.all_cands = (1 << N) - 1
        if cfg.symmetry_reduction:
            maps = dihedral_maps(n)
            self.first_ok = {
                i for i, c in enumerate(self.cands) if c == min(_apply(g, [c])[0] for g in maps)
            }
        else:
            self.first_ok = set(range(N))
        self.nodes = 0

    def _tick(self) -> None:
        self.nodes += 1
        if self.cfg.node_budget is not None and self.nodes > self.cfg.node_budget:
            raise _BudgetExceeded

    def _exact_ok(self, chosen: list[int]) -> bool:
        seen = set()
        for a, b in itertools.combinations(chosen, 2):
            inter = self.masks[a] & self.masks[b]
            if inter.bit_count() >= 2:
                if inter not in self.cycle_index:
                    return False
                seen.add(inter)
        return len(seen) == len(self.cycle)

    def search_level(self, m: int, found: list[tuple[int, ...]]) -> None:
        cfg = self.cfg
        N = len(self.cands)
        n = cfg.n
        count = [0] * n
        chosen: list[int] = []

        def dfs(start: int, allowed: int) -> None:
            self._tick()
            r = m - len(chosen)
            if r == 0:
                if cfg.prune_intersections:
                    if all(c >= 2 for c in count):
                        found.append(tuple(chosen))
                elif self._exact_ok(chosen):
                    found.append(tuple(chosen))
                return
            if cfg.prune_bound:
                deficit = 0
                later = allowed & ~((1 << start) - 1)
                for t in range(n):
                    if count[t] < 2:
                        deficit += 2 - count[t]
                        if not self.holders[t] & later:
                            return
                if deficit > r * self.suffix_max_k[start]:
                    return
            for i in range(start, N - r + 1):
                if not (allowed >> i) & 1:
                    continue
                if not chosen and i not in self.first_ok:
                    continue
                chosen.append(i)
                for t in self.contains[i]:
                    count[t] += 1
                nxt = allowed & self.compat[i] if cfg.prune_intersections else allowed
                dfs(i + 1, nxt)
                for t in self.contains[i]:
                    count[t] -= 1
                chosen.pop()

        dfs(0, self.all_cands)

    def witnesses(self, found: list[tuple[int, ...]]) -> list[Hypergraph]:
        sets = {tuple(self.cands[i] for i in w) for w in found}
        if self.cfg.symmetry_reduction:
            maps = dihedral_maps(self.cfg.n)
            sets = {_apply(g, w) for w in sets for g in maps}
        return [Hypergraph(self.cfg.n, w) for w in sorted(sets)]


def min_realization(cfg: SearchConfig) -> SearchResult:
    s = _Searcher(cfg)
    for m in range(1, cfg.edge_bound + 1):
        found: list[tuple[int, ...]] = []
        try:
            s.search_level(m, found)
        except _BudgetExceeded:
            log.info("node budget exhausted at m=%d after %d nodes", m, s.nodes)
            return SearchResult(m if found else None, s.witnesses(found), s.nodes, False)
        log.debug("m=%d: %d witnesses, %d nodes so far", m, len(found), s.nodes)
        if found:
            return SearchResult(m, s.witnesses(found), s.nodes, True)
    return SearchResult(None, [], s.nodes, True)


def brute_force_minimum(n: int, max_edges: int, max_size: int | None = None) -> tuple[int | None, list[tuple[Hyperedge, ...]]]:
    """Pruning-free reference: try every subset of candidates, smallest first.

    Uses plain frozensets and its own intersection loop so it shares nothing
    with the searcher or the EI module.
    """
    top = n if max_size is None else max_size
    cands = [frozenset(c) for s in range(2, top + 1) for c in itertools.combinations(range(1, n + 1), s)]
    target = {frozenset({i, i % n + 1}) for i in range(1, n + 1)}
    for m in range(1, max_edges + 1):
        hits = []
        for combo in itertools.combinations(cands, m):
            ei = set()
            for i in range(m):
                for j in range(i + 1, m):
                    x = combo[i] & combo[j]
                    if len(x) >= 2:
                        ei.add(x)
            if ei == target:
                hits.append(tuple(sorted(tuple(sorted(e)) for e in combo)))
        if hits:
            return m, sorted(hits)
    return None, []
