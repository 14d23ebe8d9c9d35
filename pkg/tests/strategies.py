"""Hypothesis strategies shared by the test modules."""

from __future__ import annotations

from itertools import combinations

from hypothesis import strategies as st

from contractile.graph import Graph


@st.composite
def graphs(draw, min_order: int = 0, max_order: int = 10) -> Graph:
    n = draw(st.integers(min_order, max_order))
    pairs = list(combinations(range(n), 2))
    mask = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph.from_edges(n, [e for e, keep in zip(pairs, mask) if keep])


@st.composite
def graphs_with_pair(draw, min_order: int = 2, max_order: int = 8):
    """A graph with a distinct non-adjacent pair ``x < y``."""
    g = draw(graphs(min_order, max_order))
    pairs = [(x, y) for x, y in combinations(range(g.order), 2) if not g.has_edge(x, y)]
    if not pairs:
        g = g.add_vertex([])
        pairs = [(0, g.order - 1)]
    return g, draw(st.sampled_from(pairs))
