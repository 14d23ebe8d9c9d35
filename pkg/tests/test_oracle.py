from __future__ import annotations

import random

import networkx as nx
import pytest
from hypothesis import given

from contractile.corpus import atlas, build_prism, gnp, rung_length_vectors
from contractile.errors import BudgetExceeded, GraphUsageError
from contractile.graph import complete_graph, cycle_graph, even_prism9, octahedron, prism6
from contractile.holes import enumerate_chordless_cycles
from contractile.oracle import (
    KINDS,
    OracleBudget,
    build_lg_subdivided_k4,
    oracle_chromatic_number,
    oracle_clique_number,
    oracle_find,
    oracle_has,
)
from contractile.structures import RUNG_KEYS, check_lgk4_structure

from .strategies import graphs


def test_prism_parities():
    assert oracle_find(prism6(), "prism-odd").lengths == (1, 1, 1)
    assert oracle_find(even_prism9(), "prism-odd") is None
    assert oracle_find(even_prism9(), "prism-even").lengths == (2, 2, 2)
    mixed = build_prism((1, 2, 2))
    assert oracle_has(mixed, "prism-mixed") and not oracle_has(mixed, "prism-odd")


def test_octahedron_is_not_proper():
    assert oracle_find(octahedron(), "lg-proper-subdiv-k4") is None
    w = oracle_find(octahedron(), "lg-subdiv-k4")
    assert w is not None and not w.proper


def test_prism_any_is_union_of_parities():
    rng = random.Random(4)
    for _ in range(150):
        g = gnp(rng, rng.randint(6, 10), 0.35)
        parts = [oracle_has(g, k) for k in ("prism-odd", "prism-even", "prism-mixed")]
        assert oracle_has(g, "prism-any") == any(parts)
        w = oracle_find(g, "prism-any")
        if w is not None:
            assert w.validate(g)


def test_anchored_search_matches_full_enumeration():
    rng = random.Random(8)
    for _ in range(25):
        g = build_prism((rng.randint(1, 3), rng.randint(1, 3), rng.randint(1, 4)))
        while g.order < 17:
            g = g.add_vertex([v for v in range(g.order) if rng.random() < 0.08])
        assert oracle_has(g, "prism-any")


def test_subdivided_rung_between_triangles_is_found_when_anchored():
    g = build_prism((2, 3, 3))
    while g.order < 18:
        g = g.add_vertex([])
    assert oracle_find(g, "prism-even") is None
    assert oracle_find(g, "prism-mixed").lengths == (2, 3, 3)


def test_odd_hole_kind_matches_enumeration():
    for g in atlas(7):
        odd = any(c.length % 2 for c in enumerate_chordless_cycles(g, 5, g.order))
        assert oracle_has(g, "odd-hole") == odd


def test_build_examples():
    g, w = build_lg_subdivided_k4([0] * 6)
    assert g == octahedron() or nx.is_isomorphic(nx.Graph(g.edges()), nx.Graph(octahedron().edges()))
    assert not w.proper
    g7, w7 = build_lg_subdivided_k4({"ab": 1, "ac": 0, "ad": 0, "bc": 0, "bd": 0, "cd": 0})
    assert g7.order == 7 and w7.proper and w7.validate(g7)
    g12, w12 = build_lg_subdivided_k4([1] * 6)
    assert g12.order == 12 and w12.bipartite


def test_build_round_trip():
    for r in rung_length_vectors(4):
        g, w = build_lg_subdivided_k4(r)
        back = check_lgk4_structure(g, g.vertex_mask)
        assert back is not None
        assert sorted(back.rung_lengths.values()) == sorted(r)
        assert w.validate(g)


def test_build_rejects_bad_vectors():
    with pytest.raises(GraphUsageError):
        build_lg_subdivided_k4([0, 0, 0])
    with pytest.raises(GraphUsageError):
        build_lg_subdivided_k4(dict.fromkeys(RUNG_KEYS, -1))


def test_numbers():
    assert (oracle_clique_number(cycle_graph(6)), oracle_chromatic_number(cycle_graph(6))) == (2, 2)
    assert (oracle_clique_number(complete_graph(5)), oracle_chromatic_number(complete_graph(5))) == (5, 5)
    assert (oracle_clique_number(prism6()), oracle_chromatic_number(prism6())) == (3, 3)
    assert oracle_chromatic_number(cycle_graph(7)) == 3


@given(graphs(max_order=9))
def test_numbers_match_networkx(g):
    h = nx.Graph()
    h.add_nodes_from(range(g.order))
    h.add_edges_from(g.edges())
    omega = max((len(c) for c in nx.find_cliques(h)), default=0)
    assert oracle_clique_number(g) == omega
    chi = oracle_chromatic_number(g)
    assert omega <= chi <= max(dict(h.degree()).values(), default=-1) + 1


def test_unknown_kind_and_budget():
    with pytest.raises(GraphUsageError):
        oracle_find(prism6(), "hexagon")
    assert "antihole-5" in KINDS
    with pytest.raises(BudgetExceeded):
        oracle_find(even_prism9(), "prism-any", OracleBudget(max_subsets=10))
