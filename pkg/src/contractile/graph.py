"""Immutable simple graphs with bitset adjacency, plus the primitives shared by the detectors.

Vertices are the integers ``0..n-1``.  Row ``adj[v]`` is a Python ``int`` whose
bit ``u`` is set iff ``uv`` is an edge, so neighbourhood intersections over
tuples of vertices are single ``&`` operations.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator, Sequence
from dataclasses import dataclass
from itertools import combinations

from .errors import GraphParseError, GraphUsageError

MAX_ORDER = 512

Path = tuple[int, ...]
Triangle = tuple[int, int, int]


def bits(mask: int) -> Iterator[int]:
    """Yield the indices of the set bits of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def to_mask(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


class Graph:
    """A simple undirected graph on ``0..n-1``; never mutated after construction."""

    __slots__ = ("_n", "_adj", "_hash")

    def __init__(self, n: int, adj: Sequence[int]):
        if n < 0 or n > MAX_ORDER:
            raise GraphUsageError(f"order must be in [0, {MAX_ORDER}], got {n}")
        if len(adj) != n:
            raise GraphUsageError("adjacency row count does not match order")
        full = (1 << n) - 1
        rows = tuple(adj)
        for v, row in enumerate(rows):
            if row & ~full:
                raise GraphUsageError(f"row {v} references a vertex >= {n}")
            if row >> v & 1:
                raise GraphUsageError(f"self-loop at vertex {v}")
            for u in bits(row):
                if not rows[u] >> v & 1:
                    raise GraphUsageError(f"asymmetric adjacency between {v} and {u}")
        self._n = n
        self._adj = rows
        self._hash: int | None = None

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> Graph:
        adj = [0] * n
        for u, v in edges:
            if u == v:
                raise GraphUsageError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise GraphUsageError(f"edge {u}-{v} out of range for order {n}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, adj)

    @classmethod
    def empty(cls, n: int) -> Graph:
        return cls(n, [0] * n)

    @property
    def order(self) -> int:
        return self._n

    @property
    def adj(self) -> tuple[int, ...]:
        return self._adj

    def __len__(self) -> int:
        return self._n

    def vertices(self) -> range:
        return range(self._n)

    @property
    def vertex_mask(self) -> int:
        return (1 << self._n) - 1

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self._adj[u] >> v & 1)

    def neighbors(self, v: int) -> list[int]:
        return list(bits(self._adj[v]))

    def degree(self, v: int) -> int:
        return self._adj[v].bit_count()

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self._n) for v in bits(self._adj[u] >> (u + 1) << (u + 1))]

    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self._adj) // 2

    def is_clique(self) -> bool:
        full = self.vertex_mask
        return all(row | (1 << v) == full for v, row in enumerate(self._adj))

    def add_vertex(self, neighbours: Iterable[int]) -> Graph:
        """Return a copy with one extra vertex ``n`` adjacent to ``neighbours``."""
        n = self._n
        nb = to_mask(neighbours)
        adj = [row | ((nb >> v & 1) << n) for v, row in enumerate(self._adj)]
        adj.append(nb)
        return Graph(n + 1, adj)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Graph) and self._n == other._n and self._adj == other._adj

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self._n, self._adj))
        return self._hash

    def __repr__(self) -> str:
        return f"Graph(n={self._n}, m={self.edge_count()})"


# --------------------------------------------------------------------------
# Parsing / encoding
# --------------------------------------------------------------------------

_G6_HEADER = ">>graph6<<"


def _g6_size(data: bytes) -> tuple[int, int]:
    if not data:
        raise GraphParseError("empty graph6 string", 0)
    for i, ch in enumerate(data):
        if not 63 <= ch <= 126:
            raise GraphParseError(f"invalid graph6 byte {ch!r}", i)
    if data[0] != 126:
        return data[0] - 63, 1
    if len(data) >= 2 and data[1] == 126:
        if len(data) < 8:
            raise GraphParseError("truncated 8-byte graph6 size header", len(data))
        n = 0
        for ch in data[2:8]:
            n = (n << 6) | (ch - 63)
        return n, 8
    if len(data) < 4:
        raise GraphParseError("truncated 4-byte graph6 size header", len(data))
    n = 0
    for ch in data[1:4]:
        n = (n << 6) | (ch - 63)
    return n, 4


def parse_graph6(text: str) -> Graph:
    """Decode one graph6 line (an optional ``>>graph6<<`` header is accepted)."""
    s = text.strip()
    if s.startswith(_G6_HEADER):
        s = s[len(_G6_HEADER):]
    data = s.encode("ascii", errors="replace")
    n, start = _g6_size(data)
    if n > MAX_ORDER:
        raise GraphParseError(f"order {n} exceeds supported maximum {MAX_ORDER}", 0)
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    payload = data[start:]
    if len(payload) < need:
        raise GraphParseError(
            f"truncated payload: expected {need} bytes, got {len(payload)}", start + len(payload)
        )
    if len(payload) > need:
        raise GraphParseError("trailing bytes after graph6 payload", start + need)
    adj = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            byte = payload[k // 6] - 63
            if byte >> (5 - k % 6) & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            k += 1
    return Graph(n, adj)


def encode_graph6(g: Graph) -> str:
    n = g.order
    if n < 63:
        out = [n + 63]
    elif n < 258048:
        out = [126, (n >> 12 & 63) + 63, (n >> 6 & 63) + 63, (n & 63) + 63]
    else:  # pragma: no cover - MAX_ORDER keeps us far below this
        raise GraphUsageError("order too large for graph6")
    acc = 0
    k = 0
    for j in range(1, n):
        for i in range(j):
            acc = (acc << 1) | g.has_edge(i, j)
            k += 1
            if k == 6:
                out.append(acc + 63)
                acc = k = 0
    if k:
        out.append((acc << (6 - k)) + 63)
    return bytes(out).decode("ascii")


def parse_edge_list(text: str) -> Graph:
    """Parse ``"n m"`` followed by ``m`` lines ``"u v"``; duplicate edges collapse."""
    lines = [ln.split("#", 1)[0].strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln]
    if not lines:
        raise GraphParseError("empty edge list", 0)
    header = lines[0].split()
    try:
        n, m = (int(x) for x in header)
    except ValueError:
        raise GraphParseError(f"bad header line {lines[0]!r}; expected 'n m'", 0) from None
    if n < 0 or m < 0:
        raise GraphParseError("negative order or edge count", 0)
    if n > MAX_ORDER:
        raise GraphParseError(f"order {n} exceeds supported maximum {MAX_ORDER}", 0)
    if len(lines) - 1 != m:
        raise GraphParseError(f"header announces {m} edges but {len(lines) - 1} follow")
    edges = []
    for lineno, ln in enumerate(lines[1:], start=2):
        parts = ln.split()
        try:
            u, v = (int(x) for x in parts)
        except ValueError:
            raise GraphParseError(f"line {lineno}: expected 'u v', got {ln!r}") from None
        if u == v:
            raise GraphParseError(f"line {lineno}: loop at vertex {u}")
        if not (0 <= u < n and 0 <= v < n):
            raise GraphParseError(f"line {lineno}: vertex out of range [0, {n})")
        edges.append((u, v))
    return Graph.from_edges(n, edges)


def format_edge_list(g: Graph) -> str:
    es = g.edges()
    return "\n".join([f"{g.order} {len(es)}"] + [f"{u} {v}" for u, v in es]) + "\n"


def parse_graph(text: str) -> Graph:
    """Auto-detect the format: a first line of two integers means edge list."""
    first = next((ln.strip() for ln in text.splitlines() if ln.strip()), "")
    parts = first.split()
    if len(parts) == 2 and all(p.lstrip("-").isdigit() for p in parts):
        return parse_edge_list(text)
    return parse_graph6(first)


# --------------------------------------------------------------------------
# Primitive operations
# --------------------------------------------------------------------------


def complement(g: Graph) -> Graph:
    full = g.vertex_mask
    return Graph(g.order, [full & ~row & ~(1 << v) for v, row in enumerate(g.adj)])


@dataclass(frozen=True)
class InducedSubgraph:
    graph: Graph
    to_host: tuple[int, ...]  # new id -> host id
    from_host: dict[int, int]  # host id -> new id

    def lift(self, vertices: Iterable[int]) -> list[int]:
        return [self.to_host[v] for v in vertices]


def induced_subgraph(g: Graph, s: Iterable[int]) -> InducedSubgraph:
    """Relabel ``s`` (ascending) to ``0..|s|-1`` and keep the edges inside it."""
    verts = tuple(sorted(set(s)))
    index = {v: i for i, v in enumerate(verts)}
    adj = []
    for v in verts:
        row = 0
        for u in bits(g.adj[v]):
            j = index.get(u)
            if j is not None:
                row |= 1 << j
        adj.append(row)
    return InducedSubgraph(Graph(len(verts), adj), verts, index)


def induced_edges(g: Graph, s: Iterable[int]) -> set[frozenset[int]]:
    mask = to_mask(s)
    return {frozenset((u, v)) for u in bits(mask) for v in bits(g.adj[u] & mask) if u < v}


def connected_components(g: Graph, s: Iterable[int] | int) -> list[list[int]]:
    """Partition ``s`` into the vertex sets of the components of ``G[s]``.

    ``s`` may be an iterable of vertices or a bitmask.  Components are listed
    by smallest vertex, each sorted.
    """
    remaining = s if isinstance(s, int) else to_mask(s)
    comps = []
    adj = g.adj
    while remaining:
        seed = remaining & -remaining
        comp = seed
        frontier = seed
        while frontier:
            nxt = 0
            for v in bits(frontier):
                nxt |= adj[v]
            frontier = nxt & remaining & ~comp
            comp |= frontier
        remaining &= ~comp
        comps.append(list(bits(comp)))
    return comps


def component_masks(g: Graph, s: int) -> list[int]:
    remaining = s
    out = []
    adj = g.adj
    while remaining:
        comp = frontier = remaining & -remaining
        while frontier:
            nxt = 0
            for v in bits(frontier):
                nxt |= adj[v]
            frontier = nxt & remaining & ~comp
            comp |= frontier
        remaining &= ~comp
        out.append(comp)
    return out


def is_connected(g: Graph, s: Iterable[int] | int | None = None) -> bool:
    mask = g.vertex_mask if s is None else (s if isinstance(s, int) else to_mask(s))
    return len(component_masks(g, mask)) <= 1


def bfs_parents(g: Graph, src: int, allowed_interior: int, stop: int | None = None) -> dict[int, int]:
    """Breadth-first search from ``src`` expanding only through ``allowed_interior``.

    Any vertex may be *discovered* (it can be a path end) but only ``src`` and
    allowed vertices are expanded.  Neighbours are scanned in ascending order
    and the first discoverer becomes the parent, which makes every returned
    path deterministic.  Returns ``{vertex: parent}`` with ``src -> -1``.
    """
    adj = g.adj
    parent = {src: -1}
    seen = 1 << src
    queue = [src]
    head = 0
    while head < len(queue):
        u = queue[head]
        head += 1
        if u != src and not allowed_interior >> u & 1:
            continue
        for w in bits(adj[u] & ~seen):
            parent[w] = u
            queue.append(w)
            if w == stop:
                return parent
        seen |= adj[u]
    return parent


def path_from_parents(parent: dict[int, int], dst: int) -> Path | None:
    if dst not in parent:
        return None
    out = [dst]
    while parent[out[-1]] != -1:
        out.append(parent[out[-1]])
    out.reverse()
    return tuple(out)


def shortest_path_constrained(g: Graph, src: int, dst: int, allowed_interior: Iterable[int] | int) -> Path | None:
    """Shortest ``src``-``dst`` path whose interior lies in ``allowed_interior``."""
    if src == dst:
        return (src,)
    allowed = allowed_interior if isinstance(allowed_interior, int) else to_mask(allowed_interior)
    return path_from_parents(bfs_parents(g, src, allowed, stop=dst), dst)


def is_chordless_path(g: Graph, path: Sequence[int]) -> bool:
    """True iff ``path`` has distinct vertices, consecutive ones adjacent, no chords."""
    if len(set(path)) != len(path):
        return False
    pos = {v: i for i, v in enumerate(path)}
    mask = to_mask(path)
    for i, v in enumerate(path):
        for u in bits(g.adj[v] & mask):
            if abs(pos[u] - i) != 1:
                return False
        if i and not g.has_edge(path[i - 1], v):
            return False
    return True


def triangles(g: Graph) -> list[Triangle]:
    """All triangles ``(a, b, c)`` with ``a < b < c``, in lexicographic order."""
    out = []
    adj = g.adj
    for a in range(g.order):
        higher_a = adj[a] >> (a + 1) << (a + 1)
        for b in bits(higher_a):
            for c in bits(higher_a & adj[b] >> (b + 1) << (b + 1)):
                out.append((a, b, c))
    return out


def contract(g: Graph, x: int, y: int) -> tuple[Graph, int]:
    """Contract the non-adjacent pair ``x, y``.

    Surviving vertices keep their relative order (renumbered ``0..n-3``) and
    the merged vertex gets id ``n-2``.
    """
    if x == y:
        raise GraphUsageError("cannot contract a vertex with itself")
    if g.has_edge(x, y):
        raise GraphUsageError(f"cannot contract adjacent vertices {x} and {y}")
    keep = [v for v in range(g.order) if v != x and v != y]
    sub = induced_subgraph(g, keep)
    merged_nb = (g.adj[x] | g.adj[y]) & ~(1 << x) & ~(1 << y)
    return sub.graph.add_vertex(sub.from_host[v] for v in bits(merged_nb)), len(keep)


def contraction_map(n: int, x: int, y: int) -> list[int]:
    """Old-vertex -> new-vertex map matching :func:`contract`."""
    out = []
    k = 0
    for v in range(n):
        if v in (x, y):
            out.append(n - 2)
        else:
            out.append(k)
            k += 1
    return out


# --------------------------------------------------------------------------
# Named graphs used throughout the tests and the CLI
# --------------------------------------------------------------------------


def cycle_graph(k: int) -> Graph:
    return Graph.from_edges(k, [(i, (i + 1) % k) for i in range(k)])


def path_graph(k: int) -> Graph:
    return Graph.from_edges(k, [(i, i + 1) for i in range(k - 1)])


def complete_graph(k: int) -> Graph:
    return Graph.from_edges(k, combinations(range(k), 2))


def prism6() -> Graph:
    """Two triangles joined by a perfect matching (the smallest odd prism)."""
    return Graph.from_edges(6, [(0, 1), (0, 2), (1, 2), (3, 4), (3, 5), (4, 5), (0, 3), (1, 4), (2, 5)])


def pyramid6() -> Graph:
    """Apex 0, triangle {1, 2, 3}, paths 0-1, 0-4-2, 0-5-3."""
    return Graph.from_edges(6, [(1, 2), (1, 3), (2, 3), (0, 1), (0, 4), (4, 2), (0, 5), (5, 3)])


def even_prism9() -> Graph:
    """Triangles {0,1,2} and {6,7,8} joined by the paths 0-3-6, 1-4-7, 2-5-8."""
    return Graph.from_edges(
        9,
        [(0, 1), (0, 2), (1, 2), (6, 7), (6, 8), (7, 8), (0, 3), (3, 6), (1, 4), (4, 7), (2, 5), (5, 8)],
    )


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph.from_edges(10, outer + spokes + inner)


def octahedron() -> Graph:
    """K_{2,2,2}, which is the line graph of K4."""
    return complement(Graph.from_edges(6, [(0, 1), (2, 3), (4, 5)]))


def disjoint_union(*graphs: Graph) -> Graph:
    adj: list[int] = []
    offset = 0
    for h in graphs:
        adj.extend(row << offset for row in h.adj)
        offset += h.order
    return Graph(offset, adj)
