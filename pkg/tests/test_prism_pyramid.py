from __future__ import annotations

import random

import pytest
from hypothesis import given

from contractile.corpus import add_noise, atlas, build_prism, build_pyramid, gnp, shuffle_labels
from contractile.errors import GraphUsageError
from contractile.graph import Graph, complete_graph, cycle_graph, is_connected, path_graph, prism6, pyramid6
from contractile.oracle import oracle_has
from contractile.prism_pyramid import (
    detect_pyramid_or_prism_v1,
    detect_pyramid_or_prism_v2,
    pyramid_or_prism_decision,
    three_exits,
    verify_three_exits,
)
from contractile.structures import PrismWitness, PyramidWitness

from .strategies import graphs


def _truth(g: Graph) -> bool:
    return oracle_has(g, "prism-any") or oracle_has(g, "pyramid")


def test_v1_examples():
    assert detect_pyramid_or_prism_v1(complete_graph(4)) is None
    w = detect_pyramid_or_prism_v1(prism6())
    assert isinstance(w, PrismWitness) and w.lengths == (1, 1, 1) and w.parity == "odd"
    p = detect_pyramid_or_prism_v1(pyramid6())
    assert isinstance(p, PyramidWitness) and p.validate(pyramid6())
    assert oracle_has(pyramid6(), "pyramid") and not oracle_has(pyramid6(), "prism-any")


def test_v2_step1_on_prism6():
    d = pyramid_or_prism_decision(prism6())
    assert d.found and d.triangle == (0, 1, 2) and d.stage == "step1"


def test_v2_negative_without_triangles():
    assert not detect_pyramid_or_prism_v2(cycle_graph(6))


def test_v2_step3_on_seven_vertex_pyramid():
    g = build_pyramid((2, 2, 2))
    assert g.order == 7 and oracle_has(g, "pyramid")
    d = pyramid_or_prism_decision(g)
    assert d.found and d.stage == "step3"


@pytest.mark.parametrize("lengths", [(1, 2, 3), (1, 3, 2), (1, 2, 4), (1, 3, 3), (1, 3, 4), (1, 4, 4)])
def test_apex_next_to_triangle_needs_step4(lengths):
    g = build_pyramid(lengths)
    assert oracle_has(g, "pyramid")
    assert not pyramid_or_prism_decision(g, literal=True).found
    d = pyramid_or_prism_decision(g)
    assert d.found and d.stage == "step4"
    assert detect_pyramid_or_prism_v1(g) is not None


def test_v2_returns_validated_witness():
    d = detect_pyramid_or_prism_v2(build_prism((1, 2, 3)))
    assert d.found and d.witness.validate(build_prism((1, 2, 3)))


def test_agreement_on_catalogue():
    for g in atlas(7):
        t = _truth(g)
        assert (detect_pyramid_or_prism_v1(g) is not None) == t
        assert pyramid_or_prism_decision(g).found == t


@given(graphs(max_order=11))
def test_agreement_random(g):
    t = _truth(g)
    w = detect_pyramid_or_prism_v1(g)
    assert (w is not None) == t == detect_pyramid_or_prism_v2(g, want_witness=False).found
    if w is not None:
        assert w.validate(g)


def test_agreement_on_noisy_pyramids():
    rng = random.Random(17)
    for _ in range(150):
        lengths = (1, rng.randint(2, 4), rng.randint(2, 4))
        g = shuffle_labels(rng, add_noise(rng, build_pyramid(lengths), rng.randint(0, 3), 0.2))
        assert pyramid_or_prism_decision(g).found == _truth(g)


def test_isolated_vertex_does_not_change_decision():
    rng = random.Random(23)
    for _ in range(100):
        g = gnp(rng, rng.randint(5, 10), 0.35)
        assert pyramid_or_prism_decision(g).found == pyramid_or_prism_decision(g.add_vertex([])).found


def test_three_exits_path():
    out = three_exits(path_graph(5), {0}, {2}, {4})
    assert out.variant == "path" and out.paths == ((0, 1, 2, 3, 4),)


def test_three_exits_tripod():
    star = Graph.from_edges(4, [(0, 1), (0, 2), (0, 3)])
    out = three_exits(star, {1}, {2}, {3})
    assert out.variant == "tripod" and out.center == 0
    assert all(len(p) == 2 for p in out.paths)


def test_three_exits_triangle_tripod():
    # prism6 without the edges of triangle {3, 4, 5}: the exits are joined through {0, 1, 2}
    h = Graph.from_edges(6, [(0, 1), (0, 2), (1, 2), (0, 3), (1, 4), (2, 5)])
    out = three_exits(h, {3}, {4}, {5})
    assert out.variant == "triangle-tripod" and out.triangle == (0, 1, 2)
    assert out.paths == ((0, 3), (1, 4), (2, 5))
    assert verify_three_exits(h, ({3}, {4}, {5}), out)


def test_three_exits_triangle_of_exits():
    out = three_exits(prism6(), {3}, {4}, {5})
    assert out.variant == "triangle-tripod" and out.triangle == (3, 4, 5)


def test_three_exits_rejects_disconnected():
    with pytest.raises(GraphUsageError):
        three_exits(Graph.empty(3), {0}, {1}, {2})


def test_three_exits_random_connected():
    rng = random.Random(31)
    done = 0
    while done < 500:
        g = gnp(rng, rng.randint(3, 12), rng.choice((0.2, 0.35, 0.5)))
        if not is_connected(g):
            continue
        sets = [{v for v in range(g.order) if rng.random() < 0.3} or {rng.randrange(g.order)} for _ in range(3)]
        out = three_exits(g, *sets)
        assert verify_three_exits(g, sets, out)
        done += 1
