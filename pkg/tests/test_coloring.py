from __future__ import annotations

import random

import pytest
from hypothesis import assume, given

from contractile.coloring import (
    color_class_a,
    is_even_pair_definitional,
    is_even_pair_via_berge,
    iter_chordless_paths,
)
from contractile.corpus import atlas
from contractile.errors import GraphUsageError, PreconditionError
from contractile.graph import Graph, complete_graph, contract, cycle_graph, path_graph
from contractile.holes import is_berge_desk
from contractile.oracle import oracle_chromatic_number, oracle_clique_number
from contractile.recognize import recognize_class_a

from .strategies import graphs_with_pair


def test_even_pair_examples():
    c6 = cycle_graph(6)
    assert not is_even_pair_definitional(c6, 0, 3)
    assert is_even_pair_definitional(c6, 0, 2)
    assert not is_even_pair_definitional(cycle_graph(5), 0, 2)
    assert is_even_pair_via_berge(c6, 0, 2)
    assert not is_even_pair_via_berge(c6, 0, 3)


def test_even_pair_rejects_adjacent():
    with pytest.raises(GraphUsageError):
        is_even_pair_definitional(cycle_graph(6), 0, 1)


def test_berge_tester_checked_mode():
    with pytest.raises(PreconditionError):
        is_even_pair_via_berge(cycle_graph(5), 0, 2, checked=True)


def test_chordless_paths_in_c6():
    assert sorted(len(p) - 1 for p in iter_chordless_paths(cycle_graph(6), 0, 3)) == [3, 3]


@given(graphs_with_pair(max_order=8))
def test_testers_agree_on_berge_graphs(gp):
    g, (x, y) = gp
    assume(is_berge_desk(g)[0])
    assert is_even_pair_definitional(g, x, y) == is_even_pair_via_berge(g, x, y)


def test_coloring_examples():
    k5 = color_class_a(complete_graph(5))
    assert k5.palette == 5 and k5.trace == []
    c6 = color_class_a(cycle_graph(6))
    assert c6.palette == 2 and len(c6.trace) == 4 and c6.is_proper(cycle_graph(6))
    assert color_class_a(path_graph(4)).palette == 2


def test_coloring_rejects_non_members():
    with pytest.raises(PreconditionError):
        color_class_a(cycle_graph(5))


def test_literal_scan_can_overshoot():
    g = Graph.from_edges(6, [(0, 1), (0, 4), (1, 5), (2, 3), (2, 4), (3, 5)])
    assert recognize_class_a(g).member
    literal = color_class_a(g, literal=True)
    assert literal.is_proper(g) and literal.palette == 3
    h, odd_steps = g, 0
    for step in literal.trace:
        odd_steps += not is_even_pair_definitional(h, step.x, step.y)
        h, _ = contract(h, step.x, step.y)
    assert odd_steps > 0
    assert color_class_a(g).palette == oracle_chromatic_number(g) == 2


def test_trace_records_even_pairs_and_optimal_palette():
    rng = random.Random(13)
    members = [g for g in atlas(7) if g.order >= 4 and recognize_class_a(g).member]
    for g in rng.sample(members, 80):
        col = color_class_a(g, checked=False)
        assert col.is_proper(g)
        assert col.palette == oracle_clique_number(g) == oracle_chromatic_number(g)
        h = g
        for step in col.trace:
            assert is_even_pair_definitional(h, step.x, step.y)
            h, _ = contract(h, step.x, step.y)
        assert h.is_clique()


def test_coloring_to_dict():
    d = color_class_a(cycle_graph(6)).to_dict()
    assert d["palette"] == 2 and len(d["colors"]) == 6 and len(d["trace"]) == 4
