"""Pyramid-or-prism detection.

Two detectors with identical decisions: a quadruple-based one that returns a
witness, and a faster triangle-plus-components one that only decides.  The
constructive three-exits lemma lives here as well.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations

from .errors import GraphUsageError, InvariantViolation
from .graph import (
    Graph,
    Path,
    bits,
    bfs_parents,
    component_masks,
    is_chordless_path,
    is_connected,
    path_from_parents,
    shortest_path_constrained,
    to_mask,
    triangles,
)
from .structures import PrismWitness, PyramidWitness, check_prism, check_pyramid


def detect_pyramid_or_prism_v1(g: Graph) -> PyramidWitness | PrismWitness | None:
    """Quadruple search; returns the witness of the first successful quadruple."""
    adj = g.adj
    tris = triangles(g)
    if not tris:
        return None
    full = g.vertex_mask
    for a in range(g.order):
        for t in tris:
            tmask = to_mask(t)
            if a in t or (adj[a] & tmask).bit_count() > 1:
                continue
            base = full & ~tmask & ~(1 << a)
            paths = []
            for i in range(3):
                others = adj[t[(i + 1) % 3]] | adj[t[(i + 2) % 3]]
                p = shortest_path_constrained(g, a, t[i], base & ~others)
                if p is None:
                    break
                paths.append(p)
            else:
                union = to_mask(v for p in paths for v in p)
                w = check_pyramid(g, union) or check_prism(g, union)
                if w is not None:
                    return w
    return None


@dataclass(frozen=True)
class PyramidPrismDecision:
    found: bool
    triangle: tuple[int, int, int] | None = None
    stage: str | None = None  # "step1", "step3" or "step4"
    witness: PyramidWitness | PrismWitness | None = None

    def __bool__(self) -> bool:
        return self.found


def pyramid_or_prism_decision(g: Graph, literal: bool = False) -> PyramidPrismDecision:
    """Triangle loop with labelled components; decision plus where it fired.

    Steps 1 and 3 alone miss pyramids whose apex ``a`` sees one triangle
    vertex ``b_i`` while both other paths are longer than two: ``a`` is then
    the only vertex of ``X_i`` on the pyramid and it splits the rest into
    components that never carry all three labels.  Step 4 covers exactly that
    case: some ``a`` in ``X_i`` reaches ``X_j`` and ``X_k``, each either
    directly or through a component of ``X`` it touches.  ``literal=True``
    skips step 4.
    """
    adj = g.adj
    full = g.vertex_mask
    for t in triangles(g):
        b1, b2, b3 = t
        n1, n2, n3 = adj[b1], adj[b2], adj[b3]
        tmask = to_mask(t)
        xs = (
            n1 & ~n2 & ~n3 & ~tmask,
            n2 & ~n1 & ~n3 & ~tmask,
            n3 & ~n1 & ~n2 & ~tmask,
        )
        x_rest = full & ~(n1 | n2 | n3) & ~tmask
        for i in range(3):
            xj, xk = xs[(i + 1) % 3], xs[(i + 2) % 3]
            for v in bits(xs[i]):
                if adj[v] & xj and adj[v] & xk:
                    return PyramidPrismDecision(True, t, "step1")
        reach = tuple(_neighbourhood(adj, x) for x in xs)
        comps = component_masks(g, x_rest)
        for comp in comps:
            if all(comp & r for r in reach):
                return PyramidPrismDecision(True, t, "step3")
        if literal:
            continue
        # per label, the union of X_i and every component carrying label i
        via = list(xs)
        for comp in comps:
            for i in range(3):
                if comp & reach[i]:
                    via[i] |= comp
        for i in range(3):
            j, k = (i + 1) % 3, (i + 2) % 3
            for v in bits(xs[i]):
                if adj[v] & via[j] and adj[v] & via[k]:
                    return PyramidPrismDecision(True, t, "step4")
    return PyramidPrismDecision(False)


def _neighbourhood(adj, mask: int) -> int:
    out = 0
    for v in bits(mask):
        out |= adj[v]
    return out


def detect_pyramid_or_prism_v2(g: Graph, want_witness: bool = True, literal: bool = False) -> PyramidPrismDecision:
    """Fast decision; a positive answer gets its witness from the quadruple search."""
    d = pyramid_or_prism_decision(g, literal)
    if not d.found or not want_witness:
        return d
    w = detect_pyramid_or_prism_v1(g)
    if w is None:
        raise InvariantViolation("fast detector positive but quadruple search found nothing")
    return PyramidPrismDecision(True, d.triangle, d.stage, w)


# --------------------------------------------------------------------------
# Three exits
# --------------------------------------------------------------------------


@dataclass(frozen=True)
class ThreeExitsOutcome:
    """One of the three shapes.

    * ``path``: ``paths == (F,)``; ``contacts`` are (end in one set, vertex in
      the middle set, other end), ``order`` names the sets in that order.
    * ``tripod``: ``paths[i]`` runs from ``center`` to ``contacts[i]`` in ``V_{i+1}``.
    * ``triangle-tripod``: ``paths[i]`` runs from ``triangle[i]`` to ``contacts[i]``.
    """

    variant: str
    paths: tuple[Path, ...]
    contacts: tuple[int, int, int]
    center: int | None = None
    triangle: tuple[int, int, int] | None = None
    order: tuple[int, int, int] = (1, 2, 3)


def _multi_bfs(g: Graph, sources: int, allowed: int, goal) -> Path | None:
    """Shortest path from any source (ascending) to the first vertex satisfying ``goal``."""
    parent = {}
    queue = []
    for s in bits(sources & allowed):
        parent[s] = -1
        queue.append(s)
    seen = to_mask(queue)
    head = 0
    while head < len(queue):
        u = queue[head]
        head += 1
        if goal(u):
            return path_from_parents(parent, u)
        for w in bits(g.adj[u] & allowed & ~seen):
            parent[w] = u
            queue.append(w)
        seen |= g.adj[u] & allowed
    return None


def _segment(p: Path, x: int, y: int) -> Path:
    i, j = p.index(x), p.index(y)
    return p[i : j + 1] if i <= j else tuple(reversed(p[j : i + 1]))


def three_exits(h: Graph, v1, v2, v3) -> ThreeExitsOutcome:
    """Constructive three-exits lemma on a connected graph ``h``."""
    sets = [to_mask(v1), to_mask(v2), to_mask(v3)]
    if not all(sets):
        raise GraphUsageError("V1, V2, V3 must be non-empty")
    if not is_connected(h):
        raise GraphUsageError("three_exits needs a connected graph")
    full = h.vertex_mask
    s1, s2, s3 = sets
    p = _multi_bfs(h, s1, full, lambda u: s3 >> u & 1)
    assert p is not None
    pmask = to_mask(p)
    if pmask & s2:
        return _checked(h, sets, ThreeExitsOutcome("path", (p,), (p[0], next(bits(pmask & s2)), p[-1]), order=(1, 2, 3)))
    # Q: from V2 to a vertex with a neighbour on P, avoiding P
    q = _multi_bfs(h, s2, full & ~pmask, lambda u: bool(h.adj[u] & pmask))
    assert q is not None
    q = tuple(reversed(q))  # q[0] = v (touches P), q[-1] = v2
    v, v2_ = q[0], q[-1]
    qmask = to_mask(q)
    on_p = [u for u in p if h.has_edge(v, u)]
    w, x = on_p[0], on_p[-1]  # closest to v1 and to v3 along P
    if qmask & s1 and qmask & s3:
        return _checked(h, sets, _minimal_window(q, sets))
    if qmask & s1:
        f = _segment(p, p[-1], x) + q
        return _checked(h, sets, _as_path(f, sets))
    if qmask & s3:
        f = _segment(p, p[0], w) + q
        return _checked(h, sets, _as_path(f, sets))
    if w == x:
        if x in (p[0], p[-1]):
            f = (p if x == p[-1] else tuple(reversed(p))) + q
            return _checked(h, sets, _as_path(f, sets))
        legs = (_segment(p, x, p[0]), (x,) + q, _segment(p, x, p[-1]))
        return _checked(h, sets, ThreeExitsOutcome("tripod", legs, (p[0], v2_, p[-1]), center=x))
    if not h.has_edge(w, x):
        if v == v2_:
            f = _segment(p, p[0], w) + (v,) + _segment(p, x, p[-1])
            return _checked(h, sets, _as_path(f, sets))
        legs = ((v,) + _segment(p, w, p[0]), q, (v,) + _segment(p, x, p[-1]))
        return _checked(h, sets, ThreeExitsOutcome("tripod", legs, (p[0], v2_, p[-1]), center=v))
    legs = (_segment(p, w, p[0]), q, _segment(p, x, p[-1]))
    return _checked(h, sets, ThreeExitsOutcome("triangle-tripod", legs, (p[0], v2_, p[-1]), triangle=(w, v, x)))


def _as_path(f: Path, sets) -> ThreeExitsOutcome:
    for order in permutations(range(3)):
        i, j, k = order
        if not (sets[i] >> f[0] & 1 and sets[k] >> f[-1] & 1):
            continue
        inner = f[1:-1]
        if any((sets[i] | sets[k]) >> u & 1 for u in inner):
            continue
        mid = next((u for u in f if sets[j] >> u & 1), None)
        if mid is not None:
            return ThreeExitsOutcome("path", (f,), (f[0], mid, f[-1]), order=(i + 1, j + 1, k + 1))
    raise InvariantViolation(f"path outcome {f} does not fit the three sets")


def _minimal_window(q: Path, sets) -> ThreeExitsOutcome:
    best = None
    for lo in range(len(q)):
        for hi in range(lo, len(q)):
            win = to_mask(q[lo : hi + 1])
            if all(win & s for s in sets):
                if best is None or hi - lo < best[1] - best[0]:
                    best = (lo, hi)
                break
    assert best is not None
    return _as_path(q[best[0] : best[1] + 1], sets)


def _checked(h: Graph, sets, out: ThreeExitsOutcome) -> ThreeExitsOutcome:
    if not verify_three_exits(h, sets, out):
        raise InvariantViolation(f"three-exits construction produced an invalid {out.variant}")
    return out


def verify_three_exits(h: Graph, sets, out: ThreeExitsOutcome) -> bool:
    """Re-check an outcome against the lemma's defining conditions."""
    sets = [s if isinstance(s, int) else to_mask(s) for s in sets]
    union = sets[0] | sets[1] | sets[2]
    if not all(is_chordless_path(h, p) for p in out.paths):
        return False
    if out.variant == "path":
        (f,) = out.paths
        i, j, k = (o - 1 for o in out.order)
        return (
            sets[i] >> f[0] & 1
            and sets[k] >> f[-1] & 1
            and any(sets[j] >> u & 1 for u in f)
            and not any((sets[i] | sets[k]) >> u & 1 for u in f[1:-1])
        )
    fs = out.paths
    if len(fs) != 3:
        return False
    for i, f in enumerate(fs):
        if f[-1] != out.contacts[i] or not sets[i] >> f[-1] & 1:
            return False
    body = to_mask(u for f in fs for u in f) & ~to_mask(out.contacts)
    if body & union:
        return False
    if out.variant == "tripod":
        c = out.center
        if any(f[0] != c or len(f) < 2 for f in fs):
            return False
        rest = [to_mask(f[1:]) for f in fs]
        for a in range(3):
            for b in range(a + 1, 3):
                if rest[a] & rest[b] or any(h.adj[u] & rest[b] for u in fs[a][1:]):
                    return False
        return True
    if out.variant == "triangle-tripod":
        t = out.triangle
        if any(fs[i][0] != t[i] for i in range(3)):
            return False
        if not (h.has_edge(t[0], t[1]) and h.has_edge(t[0], t[2]) and h.has_edge(t[1], t[2])):
            return False
        masks = [to_mask(f) for f in fs]
        for a in range(3):
            for b in range(a + 1, 3):
                if masks[a] & masks[b]:
                    return False
                for u in fs[a]:
                    for y in bits(h.adj[u] & masks[b]):
                        if {u, y} != {t[a], t[b]}:
                            return False
        return True
    return False


__all__ = [
    "PyramidPrismDecision",
    "ThreeExitsOutcome",
    "bfs_parents",
    "detect_pyramid_or_prism_v1",
    "detect_pyramid_or_prism_v2",
    "pyramid_or_prism_decision",
    "three_exits",
    "verify_three_exits",
]
