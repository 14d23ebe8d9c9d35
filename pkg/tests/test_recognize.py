from __future__ import annotations

import random

from hypothesis import given

from contractile.corpus import atlas, build_prism, build_pyramid, gnp, random_bipartite_line_graph
from contractile.graph import Graph, cycle_graph, even_prism9, petersen, prism6, pyramid6
from contractile.recognize import (
    CLASS_A,
    CLASS_A_PRIME,
    definitional_member,
    recognize,
    recognize_class_a,
    recognize_class_a_prime,
)

from .strategies import graphs


def test_c5_is_rejected_at_the_first_stage():
    r = recognize_class_a(cycle_graph(5))
    assert not r.member and r.stage == 1 and r.certificate_kind == "long-antihole"
    assert r.certificate.validate(cycle_graph(5))


def test_c6_is_a_member():
    assert recognize_class_a(cycle_graph(6)).member
    assert recognize_class_a_prime(cycle_graph(6)).member


def test_prism6_is_also_an_antihole():
    # prism6 is the complement of C6, so the antihole stage fires before the prism stage
    for r in (recognize_class_a(prism6()), recognize_class_a_prime(prism6())):
        assert not r.member and r.stage == 1 and r.certificate.length == 6


def test_prism_certificates_at_later_stages():
    g = build_prism((1, 1, 3))
    r = recognize_class_a(g)
    assert not r.member and r.stage == 2 and r.certificate_kind == "prism"
    rp = recognize_class_a_prime(g)
    assert not rp.member and rp.stage == 3 and rp.certificate_kind == "odd-prism"
    assert rp.certificate.validate(g)


def test_small_pyramid_hits_the_antihole_stage():
    # every hole of pyramid6 through the short path is a C5, which is its own complement
    r = recognize_class_a(pyramid6())
    assert not r.member and r.stage == 1 and r.certificate.length == 5


def test_long_pyramid_is_reported_as_pyramid():
    g = build_pyramid((3, 3, 3))
    r = recognize_class_a(g)
    assert not r.member and r.stage == 2 and r.certificate_kind == "pyramid"
    assert r.certificate.validate(g)


def test_even_prism_separates_the_classes():
    g = even_prism9()
    assert recognize_class_a_prime(g).member
    r = recognize_class_a(g)
    assert not r.member and r.certificate_kind == "prism"


def test_petersen_is_caught_by_its_five_cycles():
    r = recognize_class_a(petersen())
    assert not r.member and r.stage == 1 and r.certificate.length == 5
    assert r.certificate.validate(petersen())


def test_bipartite_graphs_are_in_a_prime():
    rng = random.Random(19)
    for _ in range(40):
        n = rng.randint(2, 12)
        left = rng.randint(1, n - 1)
        g = Graph.from_edges(n, [(u, v) for u in range(left) for v in range(left, n) if rng.random() < 0.4])
        assert recognize_class_a_prime(g).member
        assert definitional_member(g, CLASS_A_PRIME)


def test_line_graphs_of_bipartite_graphs():
    rng = random.Random(27)
    for _ in range(30):
        g = random_bipartite_line_graph(rng, 10)
        assert recognize_class_a_prime(g).member == definitional_member(g, CLASS_A_PRIME)


def test_catalogue_matches_definitions():
    for g in atlas(7):
        a, ap = recognize_class_a(g), recognize_class_a_prime(g)
        assert a.member == definitional_member(g, CLASS_A)
        assert ap.member == definitional_member(g, CLASS_A_PRIME)
        assert not a.member or ap.member


@given(graphs(max_order=10))
def test_random_matches_definitions(g):
    a = recognize_class_a(g)
    assert a.member == definitional_member(g, CLASS_A)
    assert a.member or a.certificate.validate(g)


def test_report_round_trips_to_dict():
    r = recognize(gnp(random.Random(1), 8, 0.5), "A")
    d = r.to_dict()
    assert d["class"] == CLASS_A and set(d["timings"]) >= {"long-antihole"}
    assert recognize(cycle_graph(6), "a-prime").class_name == CLASS_A_PRIME
