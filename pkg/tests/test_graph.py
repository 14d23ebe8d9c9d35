from __future__ import annotations

import random

import networkx as nx
import numpy as np
import pytest
from hypothesis import given

from contractile.corpus import all_labeled_graphs, gnp
from contractile.errors import GraphParseError, GraphUsageError
from contractile.graph import (
    Graph,
    complement,
    complete_graph,
    connected_components,
    contract,
    contraction_map,
    cycle_graph,
    encode_graph6,
    induced_subgraph,
    is_chordless_path,
    parse_edge_list,
    parse_graph,
    parse_graph6,
    path_graph,
    prism6,
    shortest_path_constrained,
    triangles,
)
from contractile.structures import is_prism

from .strategies import graphs


def _nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.order))
    h.add_edges_from(g.edges())
    return h


def test_graph6_single_vertex():
    g = parse_graph6("@")
    assert g.order == 1 and g.edge_count() == 0


def test_graph6_c5_round_trip():
    g = parse_graph6("DUW")
    assert nx.is_isomorphic(_nx(g), nx.cycle_graph(5))
    assert encode_graph6(g) == "DUW"


def test_graph6_d_query_brace_matches_networkx():
    g = parse_graph6("D?{")
    ref = nx.from_graph6_bytes(b"D?{")
    assert sorted(g.edges()) == sorted(tuple(sorted(e)) for e in ref.edges())
    assert sorted(g.edges()) == [(0, 4), (1, 4), (2, 4), (3, 4)]


def test_graph6_against_networkx_decoder():
    rng = random.Random(11)
    for _ in range(20):
        g = gnp(rng, rng.randint(1, 40), 0.3)
        ref = nx.from_graph6_bytes(encode_graph6(g).encode())
        assert sorted(g.edges()) == sorted(tuple(sorted(e)) for e in ref.edges())
        assert encode_graph6(g) == nx.to_graph6_bytes(_nx(g), header=False).decode().strip()


def test_graph6_round_trip_large():
    rng = random.Random(5)
    for n in (0, 1, 30, 62, 63, 100):
        g = gnp(rng, n, 0.4)
        assert parse_graph6(encode_graph6(g)) == g


@pytest.mark.parametrize("text", ["", "D", "D?", "~~"])
def test_graph6_malformed(text):
    with pytest.raises(GraphParseError):
        parse_graph6(text)


def test_graph6_error_names_offset():
    with pytest.raises(GraphParseError, match="offset"):
        parse_graph6("J?")


def test_edge_list_examples():
    k3 = parse_edge_list("3 3\n0 1\n1 2\n0 2")
    assert k3 == complete_graph(3)
    two = parse_edge_list("2 0")
    assert two.order == 2 and two.edge_count() == 0
    p = parse_edge_list("6 9\n0 1\n0 2\n1 2\n3 4\n3 5\n4 5\n0 3\n1 4\n2 5")
    assert p == prism6()
    assert is_prism(p).lengths == (1, 1, 1)


def test_edge_list_duplicates_collapse():
    g = parse_edge_list("3 3\n0 1\n1 0\n1 2")
    assert g.edge_count() == 2


@pytest.mark.parametrize("text,match", [("2 1\n0 0", "loop"), ("2 1\n0 5", "range")])
def test_edge_list_errors(text, match):
    with pytest.raises(GraphParseError, match=match):
        parse_edge_list(text)


def test_parse_graph_autodetects():
    assert parse_graph("3 2\n0 1\n1 2") == path_graph(3)
    assert parse_graph("DUW\n") == parse_graph6("DUW")


def test_graph_rejects_bad_rows():
    with pytest.raises(GraphUsageError):
        Graph(2, [0b10, 0])
    with pytest.raises(GraphUsageError):
        Graph(1, [1])


def test_complement_examples():
    assert complement(complete_graph(4)).edge_count() == 0
    c5 = complement(cycle_graph(5))
    assert c5.edge_count() == 5 and nx.is_isomorphic(_nx(c5), nx.cycle_graph(5))
    assert is_prism(complement(cycle_graph(6))) is not None


def test_complement_involution_exhaustive():
    for n in range(7):
        for g in all_labeled_graphs(n) if n < 6 else list(all_labeled_graphs(n))[::97]:
            assert complement(complement(g)) == g


@given(graphs(max_order=20))
def test_complement_involution(g):
    assert complement(complement(g)) == g
    assert g.edge_count() + complement(g).edge_count() == g.order * (g.order - 1) // 2


def test_induced_subgraph_examples():
    sub = induced_subgraph(cycle_graph(6), {0, 1, 2})
    assert sub.graph == path_graph(3)
    p = prism6()
    assert induced_subgraph(p, range(6)).graph == p
    s = induced_subgraph(p, {0, 1, 2, 3})
    assert sorted(s.lift(e) for e in map(list, s.graph.edges())) == [[0, 1], [0, 2], [0, 3], [1, 2]]


def test_connected_components_examples():
    assert connected_components(prism6(), set()) == []
    assert connected_components(prism6(), {3, 4, 5}) == [[3, 4, 5]]
    assert connected_components(cycle_graph(6), {0, 2, 4}) == [[0], [2], [4]]


def test_shortest_path_examples():
    c6 = cycle_graph(6)
    assert shortest_path_constrained(c6, 2, 2, set()) == (2,)
    assert shortest_path_constrained(c6, 0, 3, {1, 2, 4, 5}) == (0, 1, 2, 3)
    assert shortest_path_constrained(c6, 0, 3, {1}) is None


@given(graphs(min_order=2, max_order=12))
def test_shortest_paths_are_chordless_and_respect_interior(g):
    rng = random.Random(g.order * 7919 + g.edge_count())
    allowed = {v for v in range(g.order) if rng.random() < 0.6}
    p = shortest_path_constrained(g, 0, g.order - 1, allowed)
    if p is not None:
        assert is_chordless_path(g, p)
        assert set(p[1:-1]) <= allowed


def test_triangles_examples():
    assert triangles(cycle_graph(6)) == []
    assert len(triangles(complete_graph(4))) == 4
    assert triangles(prism6()) == [(0, 1, 2), (3, 4, 5)]


@given(graphs(max_order=12))
def test_triangle_count_matches_trace(g):
    a = np.zeros((g.order, g.order), dtype=np.int64)
    for u, v in g.edges():
        a[u, v] = a[v, u] = 1
    assert len(triangles(g)) == int(np.trace(a @ a @ a)) // 6


def test_contract_examples():
    h, m = contract(cycle_graph(6), 0, 2)
    assert h.order == 5 and m == 4
    ids = contraction_map(6, 0, 2)
    assert sorted(h.neighbors(m)) == sorted(ids[v] for v in (1, 3, 5))
    assert h.has_edge(ids[3], ids[4]) and h.has_edge(ids[4], ids[5])
    assert h.edge_count() == 5
    single, _ = contract(Graph.empty(2), 0, 1)
    assert single.order == 1
    k2, _ = contract(path_graph(3), 0, 2)
    assert k2 == complete_graph(2)


def test_contract_rejects_adjacent_pair():
    with pytest.raises(GraphUsageError):
        contract(path_graph(3), 0, 1)
