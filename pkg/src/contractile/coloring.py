"""Colouring graphs of class A by repeated contraction of non-adjacent pairs."""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import BudgetExceeded, GraphUsageError, InvariantViolation, PreconditionError
from .graph import Graph, bits, contract, contraction_map
from .holes import default_budget, is_berge_desk
from .recognize import recognize_class_a


@dataclass(frozen=True)
class ContractionStep:
    """Current-graph ids ``x < y`` that were merged, and the original vertices behind each."""

    x: int
    y: int
    merged: tuple[tuple[int, ...], tuple[int, ...]]


@dataclass
class Coloring:
    colors: list[int]
    palette: int
    trace: list[ContractionStep] = field(default_factory=list)

    def is_proper(self, g: Graph) -> bool:
        return all(self.colors[u] != self.colors[v] for u, v in g.edges())

    def to_dict(self) -> dict:
        return {
            "colors": list(self.colors),
            "palette": self.palette,
            "trace": [{"pair": [s.x, s.y], "merged": [list(s.merged[0]), list(s.merged[1])]} for s in self.trace],
        }


def _require_non_adjacent(g: Graph, x: int, y: int) -> None:
    if x == y or g.has_edge(x, y):
        raise GraphUsageError(f"vertices {x} and {y} must be distinct and non-adjacent")


def iter_chordless_paths(g: Graph, x: int, y: int, budget: int | None = None):
    """Every chordless ``x``-``y`` path, by backtracking."""
    budget = default_budget() if budget is None else budget
    adj = g.adj
    nodes = 0
    stack = [((x,), 1 << x, 0)]
    while stack:
        nodes += 1
        if nodes > budget:
            raise BudgetExceeded("chordless path enumeration", budget)
        path, pmask, forbidden = stack.pop()
        last = path[-1]
        for w in bits(adj[last] & ~pmask & ~forbidden):
            if w == y:
                yield path + (y,)
            else:
                stack.append((path + (w,), pmask | 1 << w, forbidden | adj[last]))


def is_even_pair_definitional(g: Graph, x: int, y: int, budget: int | None = None) -> bool:
    """Every chordless path between ``x`` and ``y`` has an even number of edges."""
    _require_non_adjacent(g, x, y)
    return all((len(p) - 1) % 2 == 0 for p in iter_chordless_paths(g, x, y, budget))


def is_even_pair_via_berge(g: Graph, x: int, y: int, checked: bool = False) -> bool:
    """For Berge ``g``: the pair is even iff adding a vertex seeing only ``x, y`` keeps it Berge."""
    _require_non_adjacent(g, x, y)
    if checked:
        ok, cert = is_berge_desk(g)
        if not ok:
            raise PreconditionError("graph is not Berge", cert)
    return is_berge_desk(g.add_vertex((x, y)))[0]


def color_class_a(g: Graph, checked: bool = True, literal: bool = False) -> Coloring:
    """Contract even pairs whose contraction stays in A until a clique remains.

    Pairs are scanned in ascending order.  A pair qualifies when it is an even
    pair and its contraction is in A; such a pair exists on every non-clique
    member of A.  ``literal=True`` drops the even-pair requirement, which can
    merge an odd pair (the antipodal pair of C6 gives a bowtie, still in A)
    and then overshoot the chromatic number.
    """
    if checked:
        rep = recognize_class_a(g)
        if not rep.member:
            raise PreconditionError(f"graph is not in class A ({rep.certificate_kind})", rep.certificate)
    h = g
    classes: list[tuple[int, ...]] = [(v,) for v in range(g.order)]
    trace: list[ContractionStep] = []
    while not h.is_clique():
        for x in range(h.order):
            for y in bits(~h.adj[x] & h.vertex_mask & ~((1 << (x + 1)) - 1)):
                # h is in A, hence Berge, so the one-vertex test is exact
                if not literal and not is_even_pair_via_berge(h, x, y):
                    continue
                h2, merged = contract(h, x, y)
                if recognize_class_a(h2).member:
                    break
            else:
                continue
            break
        else:
            raise InvariantViolation("no contraction keeps the graph in class A")
        trace.append(ContractionStep(x, y, (classes[x], classes[y])))
        new_id = contraction_map(h.order, x, y)
        nxt: list[tuple[int, ...]] = [()] * h2.order
        for v, cls in enumerate(classes):
            nxt[new_id[v]] = tuple(sorted(nxt[new_id[v]] + cls))
        classes, h = nxt, h2
        assert merged == h.order - 1
    colors = [0] * g.order
    for c, cls in enumerate(classes):
        for v in cls:
            colors[v] = c
    out = Coloring(colors, h.order, trace)
    if not out.is_proper(g):
        raise InvariantViolation("pulled-back colouring is not proper")
    return out
