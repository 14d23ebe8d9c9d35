"""Certified induced structures and the structural checkers that decide them.

Every witness knows the exact edge set it claims to induce, so
``witness.validate(g)`` re-checks it against the host graph from scratch.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from itertools import combinations

from .graph import Graph, Path, Triangle, bits, induced_edges, is_chordless_path, is_connected, to_mask

LABELS = "abcd"
RUNG_KEYS = ("ab", "ac", "ad", "bc", "bd", "cd")
CORNER_KEYS = tuple(x + y for x in LABELS for y in LABELS if x != y)


def _path_edges(path: Path) -> set[frozenset[int]]:
    return {frozenset(e) for e in zip(path, path[1:])}


def _triangle_edges(t) -> set[frozenset[int]]:
    return {frozenset(e) for e in combinations(t, 2)}


def parity_of(lengths) -> str:
    if all(x % 2 for x in lengths):
        return "odd"
    if not any(x % 2 for x in lengths):
        return "even"
    return "mixed"


# --------------------------------------------------------------------------
# Witness types
# --------------------------------------------------------------------------


@dataclass(frozen=True)
class HoleWitness:
    cycle: tuple[int, ...]

    kind = "hole"

    @property
    def length(self) -> int:
        return len(self.cycle)

    @property
    def parity(self) -> str:
        return "odd" if len(self.cycle) % 2 else "even"

    def vertices(self) -> list[int]:
        return sorted(self.cycle)

    def expected_edges(self) -> set[frozenset[int]]:
        c = self.cycle
        return {frozenset((c[i], c[(i + 1) % len(c)])) for i in range(len(c))}

    def validate(self, g: Graph) -> bool:
        c = self.cycle
        return len(c) >= 4 and len(set(c)) == len(c) and induced_edges(g, c) == self.expected_edges()

    def to_dict(self) -> dict:
        return {"kind": self.kind, "cycle": list(self.cycle), "length": self.length, "parity": self.parity}


@dataclass(frozen=True)
class AntiholeWitness(HoleWitness):
    """``cycle`` is a hole of the complement; in ``g`` consecutive vertices are non-adjacent."""

    kind = "antihole"

    def expected_edges(self) -> set[frozenset[int]]:
        c = self.cycle
        k = len(c)
        return {frozenset((c[i], c[j])) for i, j in combinations(range(k), 2) if (j - i) % k not in (1, k - 1)}

    def validate(self, g: Graph) -> bool:
        c = self.cycle
        return len(c) >= 5 and len(set(c)) == len(c) and induced_edges(g, c) == self.expected_edges()


@dataclass(frozen=True)
class PrismWitness:
    """Triangles ``triangle_a``/``triangle_b``; ``paths[i]`` runs from ``triangle_a[i]`` to ``triangle_b[i]``."""

    triangle_a: tuple[int, int, int]
    triangle_b: tuple[int, int, int]
    paths: tuple[Path, Path, Path]

    kind = "prism"

    @property
    def lengths(self) -> tuple[int, int, int]:
        return tuple(len(p) - 1 for p in self.paths)

    @property
    def parity(self) -> str:
        return parity_of(self.lengths)

    def vertices(self) -> list[int]:
        return sorted({v for p in self.paths for v in p})

    def expected_edges(self) -> set[frozenset[int]]:
        out = _triangle_edges(self.triangle_a) | _triangle_edges(self.triangle_b)
        for p in self.paths:
            out |= _path_edges(p)
        return out

    def validate(self, g: Graph) -> bool:
        a, b, ps = self.triangle_a, self.triangle_b, self.paths
        if len(set(a) | set(b)) != 6:
            return False
        if any(p[0] != a[i] or p[-1] != b[i] or len(p) < 2 for i, p in enumerate(ps)):
            return False
        if sum(len(p) for p in ps) != len({v for p in ps for v in p}):
            return False
        if not all(is_chordless_path(g, p) for p in ps):
            return False
        return induced_edges(g, self.vertices()) == self.expected_edges()

    def to_dict(self) -> dict:
        return {
            "kind": self.kind,
            "triangles": [list(self.triangle_a), list(self.triangle_b)],
            "paths": [list(p) for p in self.paths],
            "lengths": list(self.lengths),
            "parity": self.parity,
        }


@dataclass(frozen=True)
class PyramidWitness:
    apex: int
    triangle: tuple[int, int, int]
    paths: tuple[Path, Path, Path]  # paths[i] from apex to triangle[i]

    kind = "pyramid"

    @property
    def lengths(self) -> tuple[int, int, int]:
        return tuple(len(p) - 1 for p in self.paths)

    def vertices(self) -> list[int]:
        return sorted({v for p in self.paths for v in p})

    def expected_edges(self) -> set[frozenset[int]]:
        out = _triangle_edges(self.triangle)
        for p in self.paths:
            out |= _path_edges(p)
        return out

    def validate(self, g: Graph) -> bool:
        a, t, ps = self.apex, self.triangle, self.paths
        if a in t or len(set(t)) != 3:
            return False
        if any(p[0] != a or p[-1] != t[i] or len(p) < 2 for i, p in enumerate(ps)):
            return False
        if sum(1 for p in ps if len(p) == 2) > 1:
            return False
        if sum(len(p) - 1 for p in ps) + 1 != len({v for p in ps for v in p}):
            return False
        if not all(is_chordless_path(g, p) for p in ps):
            return False
        return induced_edges(g, self.vertices()) == self.expected_edges()

    def to_dict(self) -> dict:
        return {
            "kind": self.kind,
            "apex": self.apex,
            "triangle": list(self.triangle),
            "paths": [list(p) for p in self.paths],
            "lengths": list(self.lengths),
        }


@dataclass(frozen=True)
class LGK4Witness:
    """Line graph of a subdivision of K4.

    ``corners["xy"]`` is the corner of basic triangle ``T_x`` where rung ``xy``
    starts; ``rungs["xy"]`` (``x < y``) runs from ``corners["xy"]`` to
    ``corners["yx"]``.  A rung of length 0 has ``corners["xy"] == corners["yx"]``.
    """

    corners: dict[str, int]
    rungs: dict[str, Path]
    midpoints: dict[str, int] = field(default_factory=dict)

    kind = "lg-k4-subdivision"

    @property
    def rung_lengths(self) -> dict[str, int]:
        return {k: len(p) - 1 for k, p in self.rungs.items()}

    @property
    def proper(self) -> bool:
        return any(len(p) > 1 for p in self.rungs.values())

    @property
    def bipartite(self) -> bool:
        return subdivision_is_bipartite(self.rung_lengths)

    def basic_triangles(self) -> dict[str, tuple[int, int, int]]:
        return {x: tuple(self.corners[x + y] for y in LABELS if y != x) for x in LABELS}

    def vertices(self) -> list[int]:
        return sorted({v for p in self.rungs.values() for v in p} | set(self.corners.values()))

    def expected_edges(self) -> set[frozenset[int]]:
        out: set[frozenset[int]] = set()
        for t in self.basic_triangles().values():
            out |= _triangle_edges(t)
        for p in self.rungs.values():
            out |= _path_edges(p)
        return out

    def validate(self, g: Graph) -> bool:
        c, r = self.corners, self.rungs
        for xy in RUNG_KEYS:
            p = r[xy]
            if p[0] != c[xy] or p[-1] != c[xy[::-1]] or not is_chordless_path(g, p):
                return False
        if sum(len(p) for p in r.values()) != len({v for p in r.values() for v in p}):
            return False
        for t in self.basic_triangles().values():
            if len(set(t)) != 3:
                return False
        for xy, m in self.midpoints.items():
            p = r[xy]
            if m not in p:
                return False
            alpha = p.index(m)
            if abs(alpha - (len(p) - 1 - alpha)) > 1:
                return False
        return induced_edges(g, self.vertices()) == self.expected_edges()

    def to_dict(self) -> dict:
        return {
            "kind": self.kind,
            "corners": dict(self.corners),
            "rungs": {k: list(v) for k, v in self.rungs.items()},
            "midpoints": dict(self.midpoints),
            "rung_lengths": self.rung_lengths,
            "proper": self.proper,
            "bipartite": self.bipartite,
        }


def witness_from_dict(d: dict) -> Witness:
    """Inverse of the ``to_dict`` methods; derived fields are ignored."""
    kind = d["kind"]
    if kind in ("hole", "antihole"):
        cls = HoleWitness if kind == "hole" else AntiholeWitness
        return cls(tuple(d["cycle"]))
    if kind == "prism":
        a, b = (tuple(t) for t in d["triangles"])
        return PrismWitness(a, b, tuple(tuple(p) for p in d["paths"]))
    if kind == "pyramid":
        return PyramidWitness(d["apex"], tuple(d["triangle"]), tuple(tuple(p) for p in d["paths"]))
    if kind == LGK4Witness.kind:
        return LGK4Witness(
            {k: int(v) for k, v in d["corners"].items()},
            {k: tuple(v) for k, v in d["rungs"].items()},
            {k: int(v) for k, v in d.get("midpoints", {}).items()},
        )
    raise ValueError(f"unknown witness kind {kind!r}")


def with_midpoints(w: LGK4Witness) -> LGK4Witness:
    """Canonical key order plus the midpoint ``(len - 1) // 2`` of every rung."""
    corners = {k: w.corners[k] for k in CORNER_KEYS}
    rungs = {k: w.rungs[k] for k in RUNG_KEYS}
    mids = {xy: p[(len(p) - 1) // 2] for xy, p in rungs.items()}
    return LGK4Witness(corners, rungs, mids)


def subdivision_is_bipartite(rung_lengths: dict[str, int]) -> bool:
    """2-colour the subdivision R of K4 whose edge ``xy`` becomes a path of ``rung+1`` edges."""
    adj: dict[object, list[object]] = {x: [] for x in LABELS}
    for xy in RUNG_KEYS:
        chain = [xy[0]] + [(xy, i) for i in range(rung_lengths[xy])] + [xy[1]]
        for u, v in zip(chain, chain[1:]):
            adj.setdefault(u, []).append(v)
            adj.setdefault(v, []).append(u)
    colour = {"a": 0}
    queue = deque(["a"])
    while queue:
        u = queue.popleft()
        for v in adj[u]:
            if v not in colour:
                colour[v] = 1 - colour[u]
                queue.append(v)
            elif colour[v] == colour[u]:
                return False
    return True


# --------------------------------------------------------------------------
# Structural checkers: decide whether G[s] is exactly a given structure
# --------------------------------------------------------------------------


def _induced_degrees(g: Graph, mask: int) -> dict[int, int]:
    return {v: (g.adj[v] & mask).bit_count() for v in bits(mask)}


def _trace(g: Graph, mask: int, start: int, first: int, stop_mask: int, limit: int) -> list[int] | None:
    """Follow degree-2 vertices from ``start`` through ``first`` until a vertex of ``stop_mask``."""
    path = [start]
    prev, cur = start, first
    while not stop_mask >> cur & 1:
        path.append(cur)
        if len(path) > limit:
            return None
        nxt = g.adj[cur] & mask & ~(1 << prev)
        if nxt.bit_count() != 1:
            return None
        prev, cur = cur, nxt.bit_length() - 1
    path.append(cur)
    return path


def check_prism(g: Graph, s) -> PrismWitness | None:
    """Return the decomposition if ``G[s]`` is exactly a prism, else ``None``."""
    mask = s if isinstance(s, int) else to_mask(s)
    n = mask.bit_count()
    if n < 6:
        return None
    deg = _induced_degrees(g, mask)
    if sum(deg.values()) != 2 * (n + 3):
        return None
    deg3 = [v for v, d in deg.items() if d == 3]
    if len(deg3) != 6 or any(d not in (2, 3) for d in deg.values()):
        return None
    first = deg3[0]
    for pair in combinations(deg3[1:], 2):
        ta = (first, *pair)
        if not (g.has_edge(ta[0], ta[1]) and g.has_edge(ta[0], ta[2]) and g.has_edge(ta[1], ta[2])):
            continue
        tb = tuple(v for v in deg3 if v not in ta)
        if not (g.has_edge(tb[0], tb[1]) and g.has_edge(tb[0], tb[2]) and g.has_edge(tb[1], tb[2])):
            continue
        amask, bmask = to_mask(ta), to_mask(tb)
        paths = []
        for a in ta:
            out = g.adj[a] & mask & ~amask
            p = _trace(g, mask, a, out.bit_length() - 1, amask | bmask, n)
            if p is None or not bmask >> p[-1] & 1:
                break
            paths.append(tuple(p))
        else:
            ends = [p[-1] for p in paths]
            if len(set(ends)) == 3 and sum(len(p) for p in paths) == n:
                w = PrismWitness(ta, tuple(ends), tuple(paths))
                if induced_edges(g, list(bits(mask))) == w.expected_edges():
                    return w
    return None


def check_pyramid(g: Graph, s) -> PyramidWitness | None:
    """Return the decomposition if ``G[s]`` is exactly a pyramid, else ``None``."""
    mask = s if isinstance(s, int) else to_mask(s)
    n = mask.bit_count()
    if n < 6:
        return None
    deg = _induced_degrees(g, mask)
    if sum(deg.values()) != 2 * (n + 2):
        return None
    deg3 = [v for v, d in deg.items() if d == 3]
    if len(deg3) != 4 or any(d not in (2, 3) for d in deg.values()):
        return None
    for apex in deg3:
        tri = tuple(v for v in deg3 if v != apex)
        if not (g.has_edge(tri[0], tri[1]) and g.has_edge(tri[0], tri[2]) and g.has_edge(tri[1], tri[2])):
            continue
        tmask = to_mask(tri)
        if (g.adj[apex] & tmask).bit_count() > 1:
            continue
        by_end = {}
        for nb in bits(g.adj[apex] & mask):
            p = _trace(g, mask, apex, nb, tmask | (1 << apex), n)
            if p is None or not tmask >> p[-1] & 1:
                break
            by_end[p[-1]] = tuple(p)
        else:
            if len(by_end) == 3 and sum(len(p) - 1 for p in by_end.values()) + 1 == n:
                w = PyramidWitness(apex, tri, tuple(by_end[b] for b in tri))
                if induced_edges(g, list(bits(mask))) == w.expected_edges():
                    return w
    return None


def is_prism(g: Graph) -> PrismWitness | None:
    return check_prism(g, g.vertex_mask)


def is_pyramid(g: Graph) -> PyramidWitness | None:
    return check_pyramid(g, g.vertex_mask)


def _triangles_in(g: Graph, mask: int) -> list[Triangle]:
    out = []
    for a in bits(mask):
        hi = g.adj[a] & mask & ~((1 << (a + 1)) - 1)
        for b in bits(hi):
            for c in bits(hi & g.adj[b] & ~((1 << (b + 1)) - 1)):
                out.append((a, b, c))
    return out


def check_lgk4_structure(g: Graph, s) -> LGK4Witness | None:
    """Decide whether ``G[s]`` is the line graph of a subdivision of K4 and rebuild it."""
    mask = s if isinstance(s, int) else to_mask(s)
    n = mask.bit_count()
    if n < 6:
        return None
    deg = _induced_degrees(g, mask)
    if sum(deg.values()) != 2 * (n + 6) or any(d not in (2, 3, 4) for d in deg.values()):
        return None
    if not is_connected(g, mask):
        return None
    tris = _triangles_in(g, mask)
    edges = induced_edges(g, list(bits(mask)))
    for combo in combinations(tris, 4):
        w = _assign_lgk4(g, mask, n, combo)
        if w is not None and w.expected_edges() == edges and set(w.vertices()) == set(bits(mask)):
            return with_midpoints(w)
    return None


def _assign_lgk4(g: Graph, mask: int, n: int, combo) -> LGK4Witness | None:
    tri_masks = [to_mask(t) for t in combo]
    corners_mask = 0
    for tm in tri_masks:
        corners_mask |= tm
    slot: dict[str, int] = {}
    shared = 0
    for i, j in combinations(range(4), 2):
        common = tri_masks[i] & tri_masks[j]
        if common.bit_count() > 1:
            return None
        if common:
            v = common.bit_length() - 1
            if shared >> v & 1:
                return None  # vertex in three basic triangles
            shared |= common
            slot[LABELS[i] + LABELS[j]] = slot[LABELS[j] + LABELS[i]] = v
    owner = {}
    for i, t in enumerate(combo):
        for v in t:
            if not shared >> v & 1:
                owner[v] = i
    rungs: dict[str, Path] = {}
    for xy, v in slot.items():
        if xy[0] < xy[1]:
            rungs[xy] = (v,)
    for u, i in owner.items():
        if u in slot.values():
            continue
        out = g.adj[u] & mask & ~tri_masks[i]
        if out.bit_count() != 1:
            return None
        p = _trace(g, mask, u, out.bit_length() - 1, corners_mask, n)
        if p is None or p[-1] not in owner or owner[p[-1]] == i:
            return None
        j = owner[p[-1]]
        x, y = LABELS[i], LABELS[j]
        if x + y in slot or y + x in slot:
            return None
        slot[x + y], slot[y + x] = u, p[-1]
        rungs[x + y if x < y else y + x] = tuple(p) if x < y else tuple(reversed(p))
    if len(slot) != 12 or len(rungs) != 6:
        return None
    return LGK4Witness(slot, rungs)


def lg_is_proper_by_triangles(g: Graph, w: LGK4Witness) -> bool:
    """Proper iff some vertex of the witness lies in exactly one triangle of it."""
    mask = to_mask(w.vertices())
    count = {v: 0 for v in bits(mask)}
    for t in _triangles_in(g, mask):
        for v in t:
            count[v] += 1
    return any(c == 1 for c in count.values())


Witness = HoleWitness | AntiholeWitness | PrismWitness | PyramidWitness | LGK4Witness
