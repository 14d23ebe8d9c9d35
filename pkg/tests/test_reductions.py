from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from contractile.errors import GraphParseError, GraphUsageError
from contractile.graph import Graph, cycle_graph, triangles
from contractile.oracle import oracle_has
from contractile.reductions import (
    REDUCTIONS,
    CnfFormula,
    GadgetAudit,
    PiInstance,
    build_g_double_prime,
    build_g_prime,
    build_pi_instance,
    expected_edge_count,
    extract_assignment,
    formula_family,
    hole_from_assignment,
    parse_dimacs,
    solve_pi_bruteforce,
    tiny_pi_instances,
)


def test_dimacs_round_trip():
    f = CnfFormula.from_ints(3, [[1, -2, 3], [-1, -1, 2]])
    assert parse_dimacs(f.to_dimacs()) == f
    text = "c comment\np cnf 2 1\n1 -2\n 2 0\n"
    assert parse_dimacs(text).to_ints() == [[1, -2, 2]]


@pytest.mark.parametrize(
    "text",
    [
        "1 2 3 0\n",
        "p cnf 2 1\n1 2 0\n",
        "p cnf 2 1\n1 2 3 0\n",
        "p cnf 2 2\n1 2 -1 0\n",
        "p cnf 2 1\n1 2 x 0\n",
        "p cnf 2 1\n1 2 -1\n",
        "",
    ],
)
def test_dimacs_errors(text):
    with pytest.raises(GraphParseError):
        parse_dimacs(text)


def test_formula_validation():
    with pytest.raises(GraphUsageError):
        CnfFormula(0, ())
    with pytest.raises(GraphUsageError):
        CnfFormula.from_ints(1, [[1, 2, 1]])


def test_gadget_sizes_and_edge_count():
    audits: list[GadgetAudit] = []
    inst = build_pi_instance(CnfFormula.from_ints(3, [[1, 2, 3]]), audits)
    assert inst.graph.order == 8 * 3 + 5 + 2
    assert inst.graph.edge_count() == expected_edge_count(3, 1) == 51
    assert [(a.kind, a.vertices, a.edges) for a in audits] == [("variable", 8, 10)] * 3 + [("clause", 5, 6)]
    assert not triangles(inst.graph)
    assert inst.graph.degree(inst.a) == inst.graph.degree(inst.b) == 2


def test_pi_instance_validation():
    with pytest.raises(GraphUsageError):
        PiInstance(cycle_graph(6), 0, 1)
    with pytest.raises(GraphUsageError):
        PiInstance(cycle_graph(3), 0, 1)
    with pytest.raises(GraphUsageError):
        PiInstance(Graph.from_edges(5, [(0, 1), (0, 2), (0, 3), (1, 4), (2, 4)]), 0, 4)


@pytest.mark.parametrize("f", list(formula_family((2,), 1)), ids=lambda f: str(f.to_ints()))
def test_holes_encode_satisfying_assignments(f):
    inst = build_pi_instance(f)
    hole = solve_pi_bruteforce(inst)
    assert (hole is not None) == (f.brute_force_sat() is not None)
    if hole is not None:
        assert f.evaluate(extract_assignment(inst, hole))


@settings(max_examples=30, deadline=None)
@given(st.lists(st.lists(st.sampled_from([1, -1, 2, -2, 3, -3]), min_size=3, max_size=3), min_size=1, max_size=3))
def test_assignment_builds_a_hole(clauses):
    f = CnfFormula.from_ints(3, clauses)
    inst = build_pi_instance(f)
    xi = f.brute_force_sat()
    if xi is None:
        assert solve_pi_bruteforce(inst) is None
    else:
        hole = hole_from_assignment(inst, xi)
        assert hole.validate(inst.graph)
        assert {inst.a, inst.b} <= set(hole.cycle)
        assert extract_assignment(inst, hole) == tuple(xi)


def test_unsatisfiable_formula_has_no_hole():
    clauses = [[s1, s2, s2] for s1 in (1, -1) for s2 in (2, -2)]
    f = CnfFormula.from_ints(2, clauses)
    assert f.brute_force_sat() is None
    assert solve_pi_bruteforce(build_pi_instance(f)) is None


def test_construction_sizes():
    inst = tiny_pi_instances()[2][1]
    g1, _ = build_g_prime(inst)
    assert g1.order == inst.graph.order + 8
    g2, names = build_g_double_prime(inst)
    assert g2.order == inst.graph.order + 10 and len(triangles(g2)) == 4
    assert {"vab", "vba", "a'", "b''"} <= set(names)
    counts = {t: len(fn(inst).graphs) for t, (fn, _) in REDUCTIONS.items()}
    assert counts == {"prism": 1, "odd-prism": 8, "even-prism": 8, "lgpsk4": 1, "lgbsk4": 4}


def test_tiny_instances_have_expected_answers():
    answers = {name: solve_pi_bruteforce(inst) is not None for name, inst in tiny_pi_instances()}
    assert answers["C6"] and answers["C8"] and answers["theta"]
    assert not answers["P5"] and not answers["2C4"]


@pytest.mark.parametrize("name,inst", tiny_pi_instances()[:6], ids=lambda x: x if isinstance(x, str) else "")
@pytest.mark.parametrize("target", sorted(REDUCTIONS))
def test_reductions_preserve_the_answer(name, inst, target):
    fn, kind = REDUCTIONS[target]
    answer = solve_pi_bruteforce(inst) is not None
    assert any(oracle_has(rg.graph, kind) for rg in fn(inst).graphs) == answer
