from __future__ import annotations

from contractile.corpus import build_prism, build_pyramid
from contractile.graph import Graph, complete_graph, octahedron, prism6, pyramid6
from contractile.oracle import build_lg_subdivided_k4
from contractile.structures import (
    HoleWitness,
    PrismWitness,
    check_lgk4_structure,
    is_prism,
    is_pyramid,
    parity_of,
    subdivision_is_bipartite,
    witness_from_dict,
)


def test_parity_labels():
    assert parity_of((1, 1, 3)) == "odd"
    assert parity_of((2, 4, 2)) == "even"
    assert parity_of((1, 2, 2)) == "mixed"


def test_is_prism_and_pyramid():
    w = is_prism(prism6())
    assert w.lengths == (1, 1, 1)
    assert is_prism(complete_graph(6)) is None
    assert is_pyramid(pyramid6()) is not None
    assert is_pyramid(prism6()) is None
    assert is_prism(build_prism((2, 3, 1))).lengths == (2, 3, 1)


def test_pyramid_needs_apex_far_from_triangle():
    # apex adjacent to two triangle vertices is not a pyramid
    g = Graph.from_edges(6, [(1, 2), (1, 3), (2, 3), (0, 1), (0, 2), (0, 5), (5, 3), (4, 0)])
    assert is_pyramid(g) is None


def test_prism_validate_rejects_chord():
    g = prism6()
    w = PrismWitness((0, 1, 2), (3, 4, 5), ((0, 3), (1, 4), (2, 5)))
    assert w.validate(g)
    assert not w.validate(Graph.from_edges(6, list(g.edges()) + [(0, 4)]))


def test_lgk4_checker_examples():
    w = check_lgk4_structure(octahedron(), octahedron().vertex_mask)
    assert w is not None and not w.proper and set(w.rung_lengths.values()) == {0}
    assert check_lgk4_structure(prism6(), prism6().vertex_mask) is None
    g7, _ = build_lg_subdivided_k4([1, 0, 0, 0, 0, 0])
    w7 = check_lgk4_structure(g7, g7.vertex_mask)
    assert w7.proper and sorted(w7.rung_lengths.values()) == [0, 0, 0, 0, 0, 1]


def test_midpoints_are_balanced():
    g, w = build_lg_subdivided_k4([3, 2, 1, 0, 4, 1])
    for xy, path in w.rungs.items():
        i = path.index(w.midpoints[xy])
        assert abs(i - (len(path) - 1 - i)) <= 1


def test_bipartite_subdivision():
    assert subdivision_is_bipartite(dict.fromkeys(("ab", "ac", "ad", "bc", "bd", "cd"), 1))
    assert not subdivision_is_bipartite(dict.fromkeys(("ab", "ac", "ad", "bc", "bd", "cd"), 0))


def test_witness_dict_round_trip():
    for g, w in [
        (prism6(), is_prism(prism6())),
        (pyramid6(), is_pyramid(pyramid6())),
        (build_pyramid((2, 3, 2)), is_pyramid(build_pyramid((2, 3, 2)))),
        build_lg_subdivided_k4([1, 0, 2, 0, 0, 1]),
    ]:
        back = witness_from_dict(w.to_dict())
        assert back == w and back.validate(g)
    h = HoleWitness((0, 1, 2, 3, 4))
    assert witness_from_dict(h.to_dict()) == h
