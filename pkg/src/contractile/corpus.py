"""Seeded graph generators for the acceptance suites and tests."""

from __future__ import annotations

import random
from itertools import combinations
from typing import Iterator

from .graph import Graph, bits
from .holes import find_odd_hole_bruteforce
from .oracle import build_lg_subdivided_k4, line_graph, oracle_has


def gnp(rng: random.Random, n: int, p: float) -> Graph:
    return Graph.from_edges(n, [e for e in combinations(range(n), 2) if rng.random() < p])


def all_labeled_graphs(n: int) -> Iterator[Graph]:
    pairs = list(combinations(range(n), 2))
    for code in range(1 << len(pairs)):
        yield Graph.from_edges(n, [pairs[i] for i in bits(code)])


def atlas(max_order: int = 7) -> list[Graph]:
    """All non-isomorphic graphs with 1..``max_order`` vertices (at most 7)."""
    import networkx as nx

    out = []
    for h in nx.graph_atlas_g():
        if 0 < h.number_of_nodes() <= max_order:
            out.append(Graph.from_edges(h.number_of_nodes(), h.edges()))
    return out


def build_prism(lengths: tuple[int, int, int]) -> Graph:
    """Triangles ``{0,1,2}`` and ``{3,4,5}``; path ``i`` from ``i`` to ``3 + i`` has ``lengths[i]`` edges."""
    edges = [(0, 1), (0, 2), (1, 2), (3, 4), (3, 5), (4, 5)]
    n = 6
    for i, k in enumerate(lengths):
        if k < 1:
            raise ValueError("prism paths need at least one edge")
        chain = [i] + list(range(n, n + k - 1)) + [3 + i]
        n += k - 1
        edges.extend(zip(chain, chain[1:]))
    return Graph.from_edges(n, edges)


def build_pyramid(lengths: tuple[int, int, int]) -> Graph:
    """Apex 0, triangle ``{1,2,3}``; at most one path may have length 1."""
    edges = [(1, 2), (1, 3), (2, 3)]
    n = 4
    for i, k in enumerate(lengths):
        chain = [0] + list(range(n, n + k - 1)) + [1 + i]
        n += k - 1
        edges.extend(zip(chain, chain[1:]))
    return Graph.from_edges(n, edges)


def add_noise(rng: random.Random, g: Graph, k: int, p: float = 0.3) -> Graph:
    for _ in range(k):
        g = g.add_vertex([v for v in range(g.order) if rng.random() < p])
    return g


def shuffle_labels(rng: random.Random, g: Graph) -> Graph:
    perm = list(range(g.order))
    rng.shuffle(perm)
    return Graph.from_edges(g.order, [(perm[u], perm[v]) for u, v in g.edges()])


def random_bipartite_line_graph(rng: random.Random, max_edges: int = 12) -> Graph:
    left, right = rng.randint(2, 5), rng.randint(2, 5)
    edges = [(i, left + j) for i in range(left) for j in range(right)]
    rng.shuffle(edges)
    return line_graph(0, edges[: rng.randint(5, max_edges)])


def _random_source(rng: random.Random, max_order: int) -> Graph:
    kind = rng.randrange(5)
    if kind == 0:
        return gnp(rng, rng.randint(6, max_order), rng.choice((0.2, 0.35, 0.5)))
    if kind == 1:
        return random_bipartite_line_graph(rng, max_order)
    if kind == 2:
        lengths = tuple(rng.randint(1, 3) for _ in range(3))
        base = build_prism(lengths)
        return add_noise(rng, base, rng.randint(0, max(0, max_order - base.order)))
    if kind == 3:
        lengths = tuple(rng.choice((2, 2, 4)) for _ in range(3))
        base = build_prism(lengths)
        if base.order > max_order:
            base = build_prism((2, 2, 2))
        return add_noise(rng, base, rng.randint(0, max(0, max_order - base.order)), 0.25)
    rungs = [rng.choice((0, 0, 1, 2)) for _ in range(6)]
    base, _ = build_lg_subdivided_k4(rungs)
    if base.order > max_order:
        base, _ = build_lg_subdivided_k4([1, 0, 0, 0, 0, 0])
    return add_noise(rng, base, rng.randint(0, max(0, max_order - base.order)), 0.25)


def odd_hole_free_corpus(rng: random.Random, count: int, max_order: int = 12) -> list[Graph]:
    """Mixed sources (random, line graphs of bipartite graphs, noisy prisms and K4 line graphs)."""
    out = []
    while len(out) < count:
        g = shuffle_labels(rng, _random_source(rng, max_order))
        if g.order <= max_order and find_odd_hole_bruteforce(g) is None:
            out.append(g)
    return out


def pyramid_free_corpus(rng: random.Random, count: int, max_order: int = 11) -> list[Graph]:
    out = []
    while len(out) < count:
        g = shuffle_labels(rng, _random_source(rng, max_order))
        if g.order <= max_order and not oracle_has(g, "pyramid"):
            out.append(g)
    return out


def rung_length_vectors(max_total: int) -> Iterator[tuple[int, ...]]:
    """Every six-tuple of non-negative rung lengths with sum at most ``max_total``."""

    def rec(prefix: tuple[int, ...], left: int):
        if len(prefix) == 6:
            yield prefix
            return
        for r in range(left + 1):
            yield from rec(prefix + (r,), left - r)

    yield from rec((), max_total)
