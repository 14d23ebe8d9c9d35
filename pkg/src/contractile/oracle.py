"""Brute-force ground truth for the detectors, and constructive generators.

Subset-based kinds test every vertex subset (vectorised with numpy) against a
necessary degree/edge-count profile and hand the few survivors to the exact
structural checkers.  On graphs with more than ``FULL_ENUMERATION_LIMIT``
vertices the subsets are anchored on the triangles a structure must contain,
which shrinks the search without changing the answer.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from itertools import combinations
from typing import Callable

import numpy as np

from .errors import BudgetExceeded, GraphUsageError
from .graph import Graph, bits, complement, to_mask, triangles
from .holes import find_odd_hole_bruteforce, iter_chordless_cycles
from .structures import (
    RUNG_KEYS,
    AntiholeWitness,
    LGK4Witness,
    PrismWitness,
    PyramidWitness,
    check_lgk4_structure,
    check_prism,
    check_pyramid,
    with_midpoints,
)

KINDS = (
    "prism-any",
    "prism-odd",
    "prism-even",
    "prism-mixed",
    "pyramid",
    "lg-subdiv-k4",
    "lg-proper-subdiv-k4",
    "lg-bipartite-subdiv-k4",
    "odd-hole",
    "antihole-5",
)

FULL_ENUMERATION_LIMIT = 16
DEFAULT_SUBSET_BUDGET = 1 << 27
_CHUNK = 1 << 20


@dataclass
class OracleBudget:
    max_subsets: int = DEFAULT_SUBSET_BUDGET
    max_nodes: int | None = None
    used: int = 0

    @classmethod
    def default(cls) -> OracleBudget:
        env = os.environ.get("CONTRACTILE_ORACLE_BUDGET")
        return cls(int(env)) if env else cls()

    def charge(self, k: int) -> None:
        self.used += k
        if self.used > self.max_subsets:
            raise BudgetExceeded("oracle subset enumeration", self.max_subsets)


# (allowed induced degrees, required number of degree-3 vertices or None, edges - vertices, min size)
_PROFILES = {
    "prism": ((2, 3), 6, 3, 6),
    "pyramid": ((2, 3), 4, 2, 6),
    "lg": ((2, 3, 4), None, 6, 6),
}


def _profile_filter(adj: np.ndarray, masks: np.ndarray, profile) -> np.ndarray:
    allowed, need3, excess, min_size = profile
    size = np.bitwise_count(masks).astype(np.int32)
    ok = size >= min_size
    sumdeg = np.zeros(len(masks), dtype=np.int32)
    cnt3 = np.zeros(len(masks), dtype=np.int32)
    one = np.uint64(1)
    for v, row in enumerate(adj):
        ins = ((masks >> np.uint64(v)) & one).astype(bool)
        d = np.bitwise_count(masks & row).astype(np.int32)
        d = np.where(ins, d, 0)
        good = np.zeros(len(masks), dtype=bool)
        for a in allowed:
            good |= d == a
        ok &= good | ~ins
        sumdeg += d
        cnt3 += d == 3
    ok &= sumdeg == 2 * (size + excess)
    if need3 is not None:
        ok &= cnt3 == need3
    return masks[ok]


def _expand(free: list[int], lo: int, hi: int, anchor: int) -> np.ndarray:
    """Masks ``anchor | subset`` for subset indices ``lo..hi-1`` over ``free`` vertices."""
    idx = np.arange(lo, hi, dtype=np.uint64)
    out = np.full(hi - lo, np.uint64(anchor), dtype=np.uint64)
    one = np.uint64(1)
    for i, v in enumerate(free):
        out |= ((idx >> np.uint64(i)) & one) << np.uint64(v)
    return out


def _sorted_candidates(cands: np.ndarray) -> list[int]:
    vals = [int(c) for c in cands]
    return sorted(vals, key=lambda m: (m.bit_count(), tuple(bits(m))))


def _search(g: Graph, shape: str, anchors: list[tuple[int, int]], accept: Callable, budget: OracleBudget):
    """Scan ``anchor | subset(free)`` for each ``(anchor, free_mask)``; first accepted witness wins."""
    adj = np.array(g.adj, dtype=np.uint64)
    profile = _PROFILES[shape]
    for anchor, free_mask in anchors:
        free = list(bits(free_mask))
        total = 1 << len(free)
        budget.charge(total)
        survivors = []
        for lo in range(0, total, _CHUNK):
            masks = _expand(free, lo, min(total, lo + _CHUNK), anchor)
            survivors.extend(_sorted_candidates(_profile_filter(adj, masks, profile)))
        for m in sorted(survivors, key=lambda m: (m.bit_count(), tuple(bits(m)))):
            w = accept(m)
            if w is not None:
                return w
    return None


def _anchors(g: Graph, shape: str) -> list[tuple[int, int]]:
    full = g.vertex_mask
    if g.order <= FULL_ENUMERATION_LIMIT:
        return [(0, full)]
    adj = g.adj
    tris = triangles(g)
    out = []
    if shape == "prism":
        for t1, t2 in combinations(tris, 2):
            m1, m2 = to_mask(t1), to_mask(t2)
            anchor = m1 | m2
            if anchor.bit_count() != 6:
                continue
            free = 0
            for v in bits(full & ~anchor):
                # a path vertex sees at most one corner of each triangle
                if (adj[v] & m1).bit_count() <= 1 and (adj[v] & m2).bit_count() <= 1:
                    free |= 1 << v
            out.append((anchor, free))
    elif shape == "pyramid":
        for t in tris:
            tm = to_mask(t)
            for a in bits(full & ~tm):
                if (adj[a] & tm).bit_count() > 1:
                    continue
                anchor = tm | 1 << a
                free = 0
                for v in bits(full & ~anchor):
                    if (adj[v] & tm).bit_count() <= 1:
                        free |= 1 << v
                out.append((anchor, free))
    else:
        for t in tris:
            tm = to_mask(t)
            free = 0
            for v in bits(full & ~tm):
                if (adj[v] & tm).bit_count() <= 2:
                    free |= 1 << v
            out.append((tm, free))
    return out


def oracle_find(g: Graph, kind: str, budget: OracleBudget | None = None):
    """Exact search for an induced structure of ``kind``; returns a witness or ``None``."""
    if kind not in KINDS:
        raise GraphUsageError(f"unknown oracle kind {kind!r}; expected one of {KINDS}")
    if g.order > 64:
        raise GraphUsageError("oracle works on graphs with at most 64 vertices")
    budget = budget or OracleBudget.default()
    if kind == "odd-hole":
        return find_odd_hole_bruteforce(g, budget.max_nodes)
    if kind == "antihole-5":
        cyc = next(iter_chordless_cycles(complement(g), 5, g.order, budget.max_nodes), None)
        return None if cyc is None else AntiholeWitness(cyc)
    if not triangles(g):
        return None
    if kind.startswith("prism"):
        want = kind.split("-")[1]

        def accept(m):
            w = check_prism(g, m)
            return w if w is not None and (want == "any" or w.parity == want) else None

        return _search(g, "prism", _anchors(g, "prism"), accept, budget)
    if kind == "pyramid":
        return _search(g, "pyramid", _anchors(g, "pyramid"), lambda m: check_pyramid(g, m), budget)

    def accept_lg(m):
        w = check_lgk4_structure(g, m)
        if w is None:
            return None
        if kind == "lg-proper-subdiv-k4" and not w.proper:
            return None
        if kind == "lg-bipartite-subdiv-k4" and not (w.proper and w.bipartite):
            return None
        return w

    return _search(g, "lg", _anchors(g, "lg"), accept_lg, budget)


def oracle_has(g: Graph, kind: str, budget: OracleBudget | None = None) -> bool:
    return oracle_find(g, kind, budget) is not None


def is_prism(g: Graph) -> PrismWitness | None:
    return check_prism(g, g.vertex_mask)


def is_pyramid(g: Graph) -> PyramidWitness | None:
    return check_pyramid(g, g.vertex_mask)


# --------------------------------------------------------------------------
# Generators
# --------------------------------------------------------------------------


def line_graph(n: int, edges: list[tuple[object, object]]) -> Graph:
    """Line graph; vertex ``i`` is ``edges[i]``."""
    del n
    return Graph.from_edges(
        len(edges),
        [(i, j) for i, j in combinations(range(len(edges)), 2) if set(edges[i]) & set(edges[j])],
    )


def build_lg_subdivided_k4(rung_lengths) -> tuple[Graph, LGK4Witness]:
    """Line graph of the subdivision of K4 whose rung ``xy`` has ``rung_lengths[xy]`` edges.

    A rung of length ``r`` means K4's edge ``xy`` became a path of ``r + 1``
    edges in the subdivided graph; ``0`` leaves the edge alone.
    """
    if not isinstance(rung_lengths, dict):
        rung_lengths = dict(zip(RUNG_KEYS, rung_lengths))
    if set(rung_lengths) != set(RUNG_KEYS) or any(r < 0 for r in rung_lengths.values()):
        raise GraphUsageError("need six non-negative rung lengths keyed ab, ac, ad, bc, bd, cd")
    r_edges: list[tuple[object, object]] = []
    rung_ids: dict[str, list[int]] = {}
    for xy in RUNG_KEYS:
        chain = [xy[0]] + [(xy, i) for i in range(rung_lengths[xy])] + [xy[1]]
        ids = []
        for u, v in zip(chain, chain[1:]):
            ids.append(len(r_edges))
            r_edges.append((u, v))
        rung_ids[xy] = ids
    g = line_graph(len(r_edges), r_edges)
    corners = {}
    rungs = {}
    for xy, ids in rung_ids.items():
        corners[xy] = ids[0]
        corners[xy[::-1]] = ids[-1]
        rungs[xy] = tuple(ids)
    return g, with_midpoints(LGK4Witness(corners, rungs))


def _max_clique(adj: tuple[int, ...], cand: int, size: int, best: list[int]) -> None:
    if not cand:
        best[0] = max(best[0], size)
        return
    while cand:
        if size + cand.bit_count() <= best[0]:
            return
        v = cand.bit_length() - 1
        cand &= ~(1 << v)
        _max_clique(adj, cand & adj[v], size + 1, best)


def oracle_clique_number(g: Graph) -> int:
    best = [0]
    _max_clique(g.adj, g.vertex_mask, 0, best)
    return best[0]


def _colourable(g: Graph, k: int, budget: int) -> bool:
    n = g.order
    colour = [-1] * n
    order = sorted(range(n), key=lambda v: -g.degree(v))
    nodes = 0

    def rec(i: int, used: int) -> bool:
        nonlocal nodes
        nodes += 1
        if nodes > budget:
            raise BudgetExceeded("chromatic number search", budget)
        if i == n:
            return True
        v = order[i]
        banned = {colour[u] for u in bits(g.adj[v]) if colour[u] >= 0}
        for c in range(min(used + 1, k)):
            if c not in banned:
                colour[v] = c
                if rec(i + 1, max(used, c + 1)):
                    return True
                colour[v] = -1
        return False

    return rec(0, 0)


def oracle_chromatic_number(g: Graph, budget: int = 10_000_000) -> int:
    if g.order == 0:
        return 0
    k = max(1, oracle_clique_number(g))
    while not _colourable(g, k, budget):
        k += 1
    return k


__all__ = [
    "KINDS",
    "OracleBudget",
    "build_lg_subdivided_k4",
    "is_prism",
    "is_pyramid",
    "line_graph",
    "oracle_chromatic_number",
    "oracle_clique_number",
    "oracle_find",
    "oracle_has",
]
