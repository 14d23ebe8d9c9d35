"""Parity-aware detectors: even prisms, line graphs of subdivided K4, odd prisms.

All three are only guaranteed on restricted inputs (no odd hole, or no
pyramid for the K4 detector).  ``checked=True`` verifies the restriction
first and raises :class:`PreconditionError` with a certificate;
``checked=None`` checks automatically on graphs below
``AUTO_CHECK_LIMIT`` vertices and warns above it.

Frames are enumerated with constraint propagation rather than as raw vertex
tuples: triangles come from :func:`triangles`, corner slots must respect the
four-triangle adjacency pattern and midpoints are drawn from vertices that
pass the same non-adjacency filters the paths use.  ``literal=True`` drops
the symmetry and midpoint pruning (for cross-checking at tiny sizes).
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from itertools import combinations, permutations
from typing import Iterator

from .errors import InvariantViolation, PreconditionError
from .graph import Graph, Path, bfs_parents, bits, is_chordless_path, path_from_parents, to_mask, triangles
from .holes import find_odd_hole_bruteforce
from .structures import (
    CORNER_KEYS,
    LABELS,
    RUNG_KEYS,
    LGK4Witness,
    PrismWitness,
    check_lgk4_structure,
    check_prism,
)

AUTO_CHECK_LIMIT = 16


@dataclass(frozen=True)
class Frame9:
    a: tuple[int, int, int]
    b: tuple[int, int, int]
    m: tuple[int, int, int]


@dataclass(frozen=True)
class Frame18:
    corners: dict[str, int]  # keyed by CORNER_KEYS
    midpoints: dict[str, int]  # keyed by RUNG_KEYS


# --------------------------------------------------------------------------
# Preconditions
# --------------------------------------------------------------------------


def _resolve_checked(g: Graph, checked: bool | None, what: str) -> bool:
    if checked is not None:
        return checked
    if g.order < AUTO_CHECK_LIMIT:
        return True
    warnings.warn(f"{what}: precondition not verified on a graph with {g.order} vertices", stacklevel=3)
    return False


def require_no_odd_hole(g: Graph, budget: int | None = None) -> None:
    hole = find_odd_hole_bruteforce(g, budget)
    if hole is not None:
        raise PreconditionError("input contains an odd hole", hole)


def require_no_pyramid(g: Graph) -> None:
    from .oracle import oracle_find

    pyr = oracle_find(g, "pyramid")
    if pyr is not None:
        raise PreconditionError("input contains a pyramid", pyr)


# --------------------------------------------------------------------------
# Even prism
# --------------------------------------------------------------------------


def _non_adjacent_to(g: Graph, vs) -> int:
    out = g.vertex_mask
    for v in vs:
        out &= ~g.adj[v] & ~(1 << v)
    return out


def _even_prism_candidates(g: Graph, a, b, literal: bool):
    """Per index ``i``: list of ``(m_i, a_i..m_i..b_i)`` in ascending ``m_i``."""
    per_index = []
    for i in range(3):
        j, k = (i + 1) % 3, (i + 2) % 3
        f = _non_adjacent_to(g, (a[j], a[k], b[j], b[k]))
        r_tree = bfs_parents(g, a[i], f)
        mids = g.vertex_mask if literal else f
        cands = []
        seen_paths = set()
        for m in bits(mids):
            r = path_from_parents(r_tree, m)
            if r is None:
                continue
            s = path_from_parents(bfs_parents(g, m, f, stop=b[i]), b[i]) if m != b[i] else (m,)
            if s is None:
                continue
            if literal:
                cands.append((m, r, s))
                continue
            whole = r + s[1:]
            if len(set(whole)) != len(whole) or (len(whole) - 1) % 2 or not is_chordless_path(g, whole):
                continue
            if whole in seen_paths:
                continue
            seen_paths.add(whole)
            cands.append((m, r, s))
        if not cands:
            return None
        per_index.append(cands)
    return per_index


def even_prism_frames(g: Graph, literal: bool = False) -> Iterator[tuple[Frame9, tuple[Path, ...]]]:
    """Yield each examined frame with its six paths ``R1, R2, R3, S1, S2, S3``."""
    tris = triangles(g)
    if literal:
        ordered = [p for t in tris for p in permutations(t)]
        pairs = [(x, y) for x in ordered for y in ordered if not set(x) & set(y)]
    else:
        pairs = []
        for t1, t2 in combinations(tris, 2):
            m1, m2 = to_mask(t1), to_mask(t2)
            if m1 & m2 or any(g.adj[v] & m2 for v in t1):
                continue  # even paths have length >= 2
            pairs.extend((t1, p) for p in permutations(t2))
    for a, b in pairs:
        per = _even_prism_candidates(g, a, b, literal)
        if per is None:
            continue
        for c1 in per[0]:
            for c2 in per[1]:
                if not literal and _touch(g, c1, c2):
                    continue
                for c3 in per[2]:
                    if not literal and (_touch(g, c1, c3) or _touch(g, c2, c3)):
                        continue
                    frame = Frame9(a, b, (c1[0], c2[0], c3[0]))
                    yield frame, (c1[1], c2[1], c3[1], c1[2], c2[2], c3[2])


def _touch(g: Graph, c1, c2) -> bool:
    """Interiors of the two candidate a-b paths meet or are adjacent."""
    p1 = c1[1] + c1[2][1:]
    p2 = c2[1] + c2[2][1:]
    i1, i2 = to_mask(p1[1:-1]), to_mask(p2[1:-1])
    if i1 & to_mask(p2) or i2 & to_mask(p1):
        return True
    return any(g.adj[v] & i2 for v in bits(i1))


def detect_even_prism(g: Graph, checked: bool | None = None, literal: bool = False) -> PrismWitness | None:
    """Even prism in a graph without odd holes, or ``None``."""
    if _resolve_checked(g, checked, "detect_even_prism"):
        require_no_odd_hole(g)
    for _frame, paths in even_prism_frames(g, literal):
        union = to_mask(v for p in paths for v in p)
        w = check_prism(g, union)
        if w is not None and w.parity == "even":
            return w
    return None


# --------------------------------------------------------------------------
# Line graph of a proper subdivision of K4
# --------------------------------------------------------------------------


def _membership(assign: dict[str, int], s: str) -> tuple[set[str], set[str]]:
    """(certain, possible) basic triangles containing the corner in slot ``s``."""
    x, y = s
    partner = assign.get(y + x)
    if partner is None:
        return {x}, {x, y}
    return ({x, y}, {x, y}) if partner == assign[s] else ({x}, {x})


def _corner_ok(g: Graph, assign: dict[str, int], s1: str, s2: str) -> bool:
    """Adjacency between two corners: same basic triangle, rung partners, or none."""
    if s2 == s1[::-1]:
        return True  # equal, adjacent or apart
    u1, u2 = assign[s1], assign[s2]
    if u1 == u2:
        return False
    sure1, maybe1 = _membership(assign, s1)
    sure2, maybe2 = _membership(assign, s2)
    if sure1 & sure2:
        return g.has_edge(u1, u2)
    if maybe1 & maybe2:
        return True  # decided once the partner slot is filled
    return not g.has_edge(u1, u2)


def lgk4_corner_assignments(g: Graph, literal: bool = False) -> Iterator[dict[str, int]]:
    """Corner slots consistent with four basic triangles joined by rungs.

    Unless ``literal``, K4's label symmetry is factored out: ``T_a`` is the
    smallest of the four triangles and ``v_ab < v_ac < v_ad``.
    """
    tris = triangles(g)
    slots_of = {x: [x + y for y in LABELS if y != x] for x in LABELS}

    def extend(level: int, assign: dict[str, int], used: list[tuple[int, int, int]]):
        if level == 4:
            yield dict(assign)
            return
        x = LABELS[level]
        for t in tris:
            if t in used:
                continue
            if not literal and level > 0 and t < used[0]:
                continue
            orders = [t] if (not literal and level == 0) else permutations(t)
            for order in orders:
                for s, u in zip(slots_of[x], order):
                    assign[s] = u
                keys = list(assign)
                if all(_corner_ok(g, assign, s1, s2) for s1, s2 in combinations(keys, 2)):
                    yield from extend(level + 1, assign, used + [t])
                for s in slots_of[x]:
                    del assign[s]

    yield from extend(0, {}, [])


def _rung_candidates(g: Graph, corners: dict[str, int], xy: str, literal: bool):
    """Per rung: ``(m, S_xy, S_yx)`` choices, deduplicated by the vertex set they add."""
    x, y = xy
    u, v = corners[xy], corners[y + x]
    corner_set = set(corners.values())
    allow = {}
    for key in (xy, y + x):
        src = corners[key]
        allow[key] = _non_adjacent_to(g, corner_set - {src}) & ~to_mask(corner_set)
    if not literal:
        if u == v:
            return [(u, (u,), (u,))]
        if g.has_edge(u, v):
            return [(u, (u,), (v, u))]
        mids = _non_adjacent_to(g, corner_set - {u, v}) & ~to_mask(corner_set)
    else:
        mids = g.vertex_mask
    t_u = bfs_parents(g, u, allow[xy])
    t_v = bfs_parents(g, v, allow[y + x])
    out = []
    seen = set()
    for m in bits(mids):
        s1 = path_from_parents(t_u, m)
        s2 = path_from_parents(t_v, m)
        if s1 is None or s2 is None:
            continue
        if not literal:
            whole = s1 + tuple(reversed(s2))[1:]
            if abs(len(s1) - len(s2)) > 1 or len(set(whole)) != len(whole) or not is_chordless_path(g, whole):
                continue
        key = to_mask(s1) | to_mask(s2)
        if key in seen:
            continue
        seen.add(key)
        out.append((m, s1, s2))
    return out


def lgk4_frames(g: Graph, literal: bool = False) -> Iterator[tuple[Frame18, dict[str, Path]]]:
    """Yield frames with their twelve paths ``S_xy`` keyed by ordered label pair."""
    for corners in lgk4_corner_assignments(g, literal):
        per = []
        for xy in RUNG_KEYS:
            cands = _rung_candidates(g, corners, xy, literal)
            if not cands:
                break
            per.append(cands)
        else:
            yield from _combine_rungs(g, corners, per, literal)


def _combine_rungs(g: Graph, corners, per, literal: bool):
    corner_mask = to_mask(corners.values())

    def rec(i: int, chosen: list, interior: int):
        if i == 6:
            mids = {xy: c[0] for xy, c in zip(RUNG_KEYS, chosen)}
            paths = {}
            for xy, c in zip(RUNG_KEYS, chosen):
                paths[xy] = c[1]
                paths[xy[::-1]] = c[2]
            yield Frame18(dict(corners), mids), paths
            return
        for c in per[i]:
            inner = (to_mask(c[1]) | to_mask(c[2])) & ~corner_mask
            if not literal:
                if inner & interior:
                    continue
                if any(g.adj[w] & interior for w in bits(inner)):
                    continue
            chosen.append(c)
            yield from rec(i + 1, chosen, interior | inner)
            chosen.pop()

    yield from rec(0, [], 0)


def detect_lg_proper_subdivision_k4(
    g: Graph, checked: bool | None = None, literal: bool = False
) -> LGK4Witness | None:
    """Line graph of a proper subdivision of K4 in a pyramid-free graph, or ``None``."""
    if _resolve_checked(g, checked, "detect_lg_proper_subdivision_k4"):
        require_no_pyramid(g)
    if len(triangles(g)) < 4:
        return None
    seen: set[int] = set()
    for _frame, paths in lgk4_frames(g, literal):
        union = to_mask(v for p in paths.values() for v in p)
        if union in seen:
            continue
        seen.add(union)
        w = check_lgk4_structure(g, union)
        if w is not None and w.proper:
            return w
    return None


def detect_lg_bipartite_subdivision_k4(
    g: Graph, checked: bool | None = None, literal: bool = False
) -> LGK4Witness | None:
    """Line graph of a bipartite subdivision of K4 in a graph without odd holes."""
    if _resolve_checked(g, checked, "detect_lg_bipartite_subdivision_k4"):
        require_no_odd_hole(g)
    w = detect_lg_proper_subdivision_k4(g, checked=False, literal=literal)
    if w is not None and not w.bipartite:
        raise InvariantViolation("found a non-bipartite subdivision; the input must contain an odd hole")
    return w


# --------------------------------------------------------------------------
# Odd prism
# --------------------------------------------------------------------------


@dataclass(frozen=True)
class OddPrismResult:
    witness: PrismWitness | None
    phase: int | None = None  # 1 = rung deletion in a K4 structure, 2 = triangle pairs
    lgk4: LGK4Witness | None = None
    deleted_rung: str | None = None

    def __bool__(self) -> bool:
        return self.witness is not None


def odd_prism_from_lgk4(g: Graph, f: LGK4Witness) -> tuple[str, PrismWitness] | None:
    """Try deleting each rung of ``f`` in turn; first deletion leaving an odd prism wins."""
    full = to_mask(f.vertices())
    for xy in RUNG_KEYS:
        w = check_prism(g, full & ~to_mask(f.rungs[xy]))
        if w is not None and w.parity == "odd":
            return xy, w
    return None


def odd_prism_phase2(g: Graph, literal: bool = False) -> PrismWitness | None:
    tris = triangles(g)
    if literal:
        ordered = [p for t in tris for p in permutations(t)]
        pairs = [(x, y) for x in ordered for y in ordered if not set(x) & set(y)]
    else:
        pairs = [(t1, p) for t1, t2 in combinations(tris, 2) if not set(t1) & set(t2) for p in permutations(t2)]
    for a, b in pairs:
        paths = []
        for i in range(3):
            j, k = (i + 1) % 3, (i + 2) % 3
            f = _non_adjacent_to(g, (a[j], a[k], b[j], b[k]))
            p = path_from_parents(bfs_parents(g, a[i], f, stop=b[i]), b[i])
            if p is None:
                break
            paths.append(p)
        else:
            w = check_prism(g, to_mask(v for p in paths for v in p))
            if w is not None and w.parity == "odd":
                return w
    return None


def detect_odd_prism_full(g: Graph, checked: bool | None = None, literal: bool = False) -> OddPrismResult:
    """Odd prism detection that also reports which phase produced the answer."""
    if _resolve_checked(g, checked, "detect_odd_prism"):
        require_no_odd_hole(g)
    f = detect_lg_proper_subdivision_k4(g, checked=False, literal=literal)
    if f is not None:
        hit = odd_prism_from_lgk4(g, f)
        if hit is None:
            raise InvariantViolation("no rung deletion gives an odd prism; the input must contain an odd hole")
        return OddPrismResult(hit[1], 1, f, hit[0])
    w = odd_prism_phase2(g, literal)
    return OddPrismResult(w, 2 if w is not None else None)


def detect_odd_prism(g: Graph, checked: bool | None = None, literal: bool = False) -> PrismWitness | None:
    """Odd prism in a graph without odd holes, or ``None``."""
    return detect_odd_prism_full(g, checked, literal).witness


__all__ = [
    "AUTO_CHECK_LIMIT",
    "CORNER_KEYS",
    "Frame18",
    "Frame9",
    "OddPrismResult",
    "check_lgk4_structure",
    "detect_even_prism",
    "detect_lg_bipartite_subdivision_k4",
    "detect_lg_proper_subdivision_k4",
    "detect_odd_prism",
    "detect_odd_prism_full",
    "even_prism_frames",
    "lgk4_corner_assignments",
    "lgk4_frames",
    "odd_prism_from_lgk4",
    "odd_prism_phase2",
    "require_no_odd_hole",
    "require_no_pyramid",
]
