"""3-SAT to "hole through a and b", and from there to the five detection problems.

Vertex layout of ``G_f``: the eight vertices of each variable gadget in
index order (``a_i, b_i, t_i, f_i, a'_i, b'_i, t'_i, f'_i``), then the five
of each clause gadget (``c_j, d_j, v_j^1..v_j^3``), then ``a`` and ``b``.
Names use 1-based indices, e.g. ``"t'2"`` or ``"v3^1"``.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from itertools import combinations, combinations_with_replacement, product

from .errors import BudgetExceeded, GraphParseError, GraphUsageError, InvariantViolation
from .graph import Graph, bits, triangles
from .holes import default_budget
from .structures import CORNER_KEYS, HoleWitness

Literal = tuple[int, bool]  # (0-based variable, positive?)


@dataclass(frozen=True)
class CnfFormula:
    n_vars: int
    clauses: tuple[tuple[Literal, Literal, Literal], ...]

    def __post_init__(self):
        if self.n_vars < 1:
            raise GraphUsageError("a formula needs at least one variable")
        for c in self.clauses:
            if len(c) != 3:
                raise GraphUsageError(f"clause {c} does not have exactly three literals")
            for var, _ in c:
                if not 0 <= var < self.n_vars:
                    raise GraphUsageError(f"variable {var + 1} out of range")

    @classmethod
    def from_ints(cls, n_vars: int, clauses) -> CnfFormula:
        """Clauses in DIMACS style: ``[1, -2, 3]`` is x1 or not-x2 or x3."""
        return cls(n_vars, tuple(tuple((abs(x) - 1, x > 0) for x in c) for c in clauses))

    def to_ints(self) -> list[list[int]]:
        return [[(v + 1) if pos else -(v + 1) for v, pos in c] for c in self.clauses]

    def evaluate(self, xi) -> bool:
        return all(any(bool(xi[v]) == pos for v, pos in c) for c in self.clauses)

    def brute_force_sat(self) -> tuple[bool, ...] | None:
        for xi in product((False, True), repeat=self.n_vars):
            if self.evaluate(xi):
                return xi
        return None

    def to_dimacs(self) -> str:
        lines = [f"p cnf {self.n_vars} {len(self.clauses)}"]
        lines += [" ".join(map(str, c)) + " 0" for c in self.to_ints()]
        return "\n".join(lines) + "\n"


def parse_dimacs(text: str) -> CnfFormula:
    n_vars = n_clauses = None
    clauses: list[list[int]] = []
    current: list[int] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("c") or line.startswith("%"):
            continue
        if line.startswith("p"):
            parts = line.split()
            if len(parts) != 4 or parts[1] != "cnf":
                raise GraphParseError(f"line {lineno}: bad problem line {line!r}")
            n_vars, n_clauses = int(parts[2]), int(parts[3])
            continue
        if n_vars is None:
            raise GraphParseError(f"line {lineno}: clause before the 'p cnf' header")
        try:
            nums = [int(x) for x in line.split()]
        except ValueError:
            raise GraphParseError(f"line {lineno}: non-integer literal") from None
        for x in nums:
            if x == 0:
                if len(current) != 3:
                    raise GraphParseError(f"line {lineno}: clause has {len(current)} literals, expected 3")
                clauses.append(current)
                current = []
            elif abs(x) > n_vars:
                raise GraphParseError(f"line {lineno}: literal {x} exceeds {n_vars} variables")
            else:
                current.append(x)
    if n_vars is None:
        raise GraphParseError("missing 'p cnf' header")
    if current:
        raise GraphParseError("last clause is not terminated by 0")
    if n_clauses is not None and n_clauses != len(clauses):
        raise GraphParseError(f"header announces {n_clauses} clauses, found {len(clauses)}")
    return CnfFormula.from_ints(n_vars, clauses)


def formula_family(n_vars_range=(2, 3), max_clauses: int = 2):
    """All formulas with 1..``max_clauses`` clauses, each a multiset of three literals."""
    for n in n_vars_range:
        lits = [(v, pos) for v in range(n) for pos in (True, False)]
        clauses = list(combinations_with_replacement(lits, 3))
        for m in range(1, max_clauses + 1):
            for combo in combinations_with_replacement(clauses, m):
                yield CnfFormula(n, tuple(combo))


# --------------------------------------------------------------------------
# Problem instances
# --------------------------------------------------------------------------


@dataclass
class PiInstance:
    graph: Graph
    a: int
    b: int
    names: dict[str, int] = field(default_factory=dict)
    formula: CnfFormula | None = None

    def __post_init__(self):
        g, a, b = self.graph, self.a, self.b
        if a == b or g.has_edge(a, b):
            raise GraphUsageError("a and b must be distinct and non-adjacent")
        if g.degree(a) != 2 or g.degree(b) != 2:
            raise GraphUsageError("a and b must both have degree 2")
        if triangles(g):
            raise GraphUsageError("the instance graph must be triangle-free")

    @property
    def a_neighbours(self) -> tuple[int, int]:
        return tuple(sorted(self.graph.neighbors(self.a)))

    @property
    def b_neighbours(self) -> tuple[int, int]:
        return tuple(sorted(self.graph.neighbors(self.b)))

    def name_of(self) -> dict[int, str]:
        return {v: k for k, v in self.names.items()}


@dataclass
class GadgetAudit:
    kind: str
    index: int
    vertices: int
    edges: int


def _var_names(i: int) -> list[str]:
    k = i + 1
    return [f"a{k}", f"b{k}", f"t{k}", f"f{k}", f"a'{k}", f"b'{k}", f"t'{k}", f"f'{k}"]


def _clause_names(j: int) -> list[str]:
    k = j + 1
    return [f"c{k}", f"d{k}", f"v{k}^1", f"v{k}^2", f"v{k}^3"]


def build_pi_instance(f: CnfFormula, audits: list[GadgetAudit] | None = None) -> PiInstance:
    """The graph ``G_f``: a hole through ``a`` and ``b`` exists iff ``f`` is satisfiable."""
    n, m = f.n_vars, len(f.clauses)
    names: dict[str, int] = {}
    for i in range(n):
        for s in _var_names(i):
            names[s] = len(names)
    for j in range(m):
        for s in _clause_names(j):
            names[s] = len(names)
    names["a"] = len(names)
    names["b"] = len(names)
    edges: list[tuple[str, str]] = []
    audits = audits if audits is not None else []

    def gadget(kind: str, idx: int, new: list[tuple[str, str]], verts: list[str]):
        audits.append(GadgetAudit(kind, idx, len(verts), len(new)))
        edges.extend(new)

    for i in range(n):
        k = i + 1
        gadget(
            "variable",
            k,
            [
                (f"a{k}", f"t{k}"), (f"a{k}", f"f{k}"), (f"b{k}", f"t{k}"), (f"b{k}", f"f{k}"),
                (f"a'{k}", f"t'{k}"), (f"a'{k}", f"f'{k}"), (f"b'{k}", f"t'{k}"), (f"b'{k}", f"f'{k}"),
                (f"t{k}", f"f'{k}"), (f"t'{k}", f"f{k}"),
            ],
            _var_names(i),
        )
    for j, clause in enumerate(f.clauses):
        k = j + 1
        gadget("clause", k, [(f"{e}{k}", f"v{k}^{p}") for e in "cd" for p in (1, 2, 3)], _clause_names(j))
        for p, (var, pos) in enumerate(clause, 1):
            side = ("f", "f'") if pos else ("t", "t'")
            edges.extend((f"v{k}^{p}", f"{s}{var + 1}") for s in side)
    for i in range(1, n):
        edges += [(f"b{i}", f"a{i + 1}"), (f"b'{i}", f"a'{i + 1}")]
    edges.append((f"b'{n}", "c1"))
    for j in range(1, m):
        edges.append((f"d{j}", f"c{j + 1}"))
    edges += [("a", "a1"), ("a", "a'1"), ("b", f"d{m}"), ("b", f"b{n}")]
    g = Graph.from_edges(len(names), [(names[u], names[v]) for u, v in edges])

    if g.order != 8 * n + 5 * m + 2:
        raise InvariantViolation("vertex count differs from 8n + 5m + 2")
    for au in audits:
        expected = (8, 10) if au.kind == "variable" else (5, 6)
        if (au.vertices, au.edges) != expected:
            raise InvariantViolation(f"{au.kind} gadget {au.index} has {au.vertices} vertices / {au.edges} edges")
    return PiInstance(g, names["a"], names["b"], names, f)


def expected_edge_count(n: int, m: int) -> int:
    return 10 * n + 2 * (n - 1) + 6 * m + 6 * m + 1 + (m - 1) + 4


# --------------------------------------------------------------------------
# Solving and decoding
# --------------------------------------------------------------------------


def _reach(g: Graph, src: int, allowed: int) -> int:
    seen = 1 << src
    frontier = 1 << src
    while frontier:
        nxt = 0
        for u in bits(frontier):
            nxt |= g.adj[u]
        frontier = nxt & allowed & ~seen
        seen |= frontier
    return seen


def solve_pi_bruteforce(inst: PiInstance, budget: int | None = None) -> HoleWitness | None:
    """A hole containing both ``a`` and ``b``, found by chordless-path backtracking."""
    budget = default_budget() if budget is None else budget
    g, a, b = inst.graph, inst.a, inst.b
    x, y = inst.a_neighbours
    adj = g.adj
    full = g.vertex_mask & ~(1 << a)
    nodes = 0
    # (path from x, path mask, union of neighbourhoods of all but the last vertex)
    stack = [((x,), 1 << x, 0)]
    while stack:
        nodes += 1
        if nodes > budget:
            raise BudgetExceeded("hole search through a and b", budget)
        path, pmask, forbidden = stack.pop()
        last = path[-1]
        # every continuation avoids the path and the neighbours of all but its last vertex
        reach = _reach(g, last, full & ~pmask & ~forbidden)
        if not (reach >> y & 1 and (pmask | reach) >> b & 1):
            continue
        for w in sorted(bits(adj[last] & full & ~pmask & ~forbidden), reverse=True):
            if w == y:
                if pmask >> b & 1 and len(path) >= 2:
                    hole = HoleWitness((a,) + path + (y,))
                    if not hole.validate(g):
                        raise InvariantViolation("hole search produced a non-hole")
                    return hole
                continue
            if adj[w] >> y & 1 and not (pmask >> b & 1 or w == b):
                continue  # y would be forced next, before b is reached
            stack.append((path + (w,), pmask | 1 << w, forbidden | adj[last]))
    return None


def extract_assignment(inst: PiInstance, hole: HoleWitness) -> tuple[bool, ...]:
    """Read the truth assignment off a hole through ``a`` and ``b`` in ``G_f``."""
    f = inst.formula
    if f is None:
        raise GraphUsageError("instance was not built from a formula")
    if not hole.validate(inst.graph) or inst.a not in hole.cycle or inst.b not in hole.cycle:
        raise InvariantViolation("not a hole through a and b")
    z = set(hole.cycle)
    nm = inst.names
    xi = []
    for i in range(f.n_vars):
        k = i + 1
        core = {nm[f"a{k}"], nm[f"b{k}"], nm[f"a'{k}"], nm[f"b'{k}"]}
        t_side = {nm[f"t{k}"], nm[f"t'{k}"]}
        f_side = {nm[f"f{k}"], nm[f"f'{k}"]}
        inside = z & (core | t_side | f_side)
        if inside == core | t_side:
            xi.append(True)
        elif inside == core | f_side:
            xi.append(False)
        else:
            raise InvariantViolation(f"hole meets variable gadget {k} in an unexpected way")
    for j in range(len(f.clauses)):
        k = j + 1
        lits = {nm[f"v{k}^{p}"] for p in (1, 2, 3)}
        if not {nm[f"c{k}"], nm[f"d{k}"]} <= z or len(z & lits) != 1:
            raise InvariantViolation(f"hole meets clause gadget {k} in an unexpected way")
    out = tuple(xi)
    if not f.evaluate(out):
        raise InvariantViolation("extracted assignment does not satisfy the formula")
    return out


def hole_from_assignment(inst: PiInstance, xi) -> HoleWitness:
    """Forward direction: select the vertices a satisfying assignment dictates."""
    f = inst.formula
    if f is None or not f.evaluate(xi):
        raise GraphUsageError("need a satisfying assignment of the instance formula")
    nm = inst.names
    chosen = {nm["a"], nm["b"]}
    for i in range(f.n_vars):
        k = i + 1
        chosen |= {nm[f"a{k}"], nm[f"b{k}"], nm[f"a'{k}"], nm[f"b'{k}"]}
        chosen |= {nm[f"t{k}"], nm[f"t'{k}"]} if xi[i] else {nm[f"f{k}"], nm[f"f'{k}"]}
    for j, clause in enumerate(f.clauses):
        k = j + 1
        p = next(p for p, (v, pos) in enumerate(clause, 1) if bool(xi[v]) == pos)
        chosen |= {nm[f"c{k}"], nm[f"d{k}"], nm[f"v{k}^{p}"]}
    cycle = _order_cycle(inst.graph, chosen, nm["a"])
    hole = HoleWitness(cycle)
    if not hole.validate(inst.graph):
        raise InvariantViolation("selected vertices do not induce a hole")
    return hole


def _order_cycle(g: Graph, vs: set[int], start: int) -> tuple[int, ...]:
    mask = sum(1 << v for v in vs)
    order = [start]
    prev = -1
    while True:
        nxt = [w for w in bits(g.adj[order[-1]] & mask) if w != prev and w != order[-1]]
        if len(order) > 1 and start in nxt:
            break
        nxt = [w for w in nxt if w not in order]
        if not nxt:
            break
        prev = order[-1]
        order.append(nxt[0])
    return tuple(order)


# --------------------------------------------------------------------------
# The five reductions
# --------------------------------------------------------------------------


@dataclass
class ReductionGraph:
    label: str
    graph: Graph
    names: dict[str, int]


@dataclass
class ReductionOutput:
    target: str
    graphs: list[ReductionGraph]


class _Builder:
    """Keeps every vertex of ``g`` except ``drop`` (relabelled in order), then appends named ones."""

    def __init__(self, g: Graph, drop: set[int]):
        self.keep = [v for v in range(g.order) if v not in drop]
        self.new_id = {v: i for i, v in enumerate(self.keep)}
        self.names: dict[str, int] = {f"g{v}": i for i, v in enumerate(self.keep)}
        self.edges = [(self.new_id[u], self.new_id[v]) for u, v in g.edges() if u not in drop and v not in drop]
        self.order = len(self.keep)

    def add(self, name: str) -> int:
        self.names[name] = self.order
        self.order += 1
        return self.names[name]

    def edge(self, u: str, v: str) -> None:
        self.edges.append((self.names[u], self.names[v]))

    def graph(self) -> Graph:
        return Graph.from_edges(self.order, self.edges)


def _subdivide(g: Graph, names: dict[str, int], u: str, v: str, mid: str) -> tuple[Graph, dict[str, int]]:
    x, y = names[u], names[v]
    if not g.has_edge(x, y):
        raise InvariantViolation(f"{u}{v} is not an edge")
    w = g.order
    edges = [e for e in g.edges() if set(e) != {x, y}] + [(x, w), (w, y)]
    out = dict(names)
    out[mid] = w
    return Graph.from_edges(w + 1, edges), out


def build_g_prime(inst: PiInstance) -> tuple[Graph, dict[str, int]]:
    """Replace ``a`` and ``b`` by triangle-with-tails gadgets and join ``a1 b1``."""
    a1_, a2_ = inst.a_neighbours
    b1_, b2_ = inst.b_neighbours
    bl = _Builder(inst.graph, {inst.a, inst.b})
    for s in ("a", "b"):
        for k in range(1, 6):
            bl.add(f"{s}{k}")
    for s, (n1, n2) in (("a", (a1_, a2_)), ("b", (b1_, b2_))):
        for u, v in ((1, 2), (1, 3), (2, 3), (2, 4), (3, 5)):
            bl.edge(f"{s}{u}", f"{s}{v}")
        bl.names[f"{s}'"] = bl.new_id[n1]
        bl.names[f"{s}''"] = bl.new_id[n2]
        bl.edge(f"{s}4", f"{s}'")
        bl.edge(f"{s}5", f"{s}''")
    bl.edge("a1", "b1")
    g = bl.graph()
    tris = triangles(g)
    expected = sorted(tuple(sorted(bl.names[f"{s}{k}"] for k in (1, 2, 3))) for s in "ab")
    if tris != expected:
        raise InvariantViolation("G' must have exactly the two gadget triangles")
    return g, bl.names


def reduce_pi_to_prism(inst: PiInstance) -> ReductionOutput:
    g, names = build_g_prime(inst)
    if g.order != inst.graph.order + 8:
        raise InvariantViolation("|V(G')| must be |V(G)| + 8")
    return ReductionOutput("prism", [ReductionGraph("G'", g, names)])


def _g_ijk(inst: PiInstance) -> list[ReductionGraph]:
    base, names = build_g_prime(inst)
    out = []
    for i, j, k in product((0, 1), repeat=3):
        g, nm = base, names
        if i:
            g, nm = _subdivide(g, nm, "a2", "a4", "s24")
        if j:
            g, nm = _subdivide(g, nm, "a3", "a5", "s35")
        if k:
            g, nm = _subdivide(g, nm, "a1", "b1", "s11")
        if g.order != base.order + i + j + k:
            raise InvariantViolation("subdivision must add one vertex per subdivided edge")
        out.append(ReductionGraph(f"G_{i}{j}{k}", g, nm))
    return out


def reduce_pi_to_odd_prism(inst: PiInstance) -> ReductionOutput:
    return ReductionOutput("odd-prism", _g_ijk(inst))


def reduce_pi_to_even_prism(inst: PiInstance) -> ReductionOutput:
    return ReductionOutput("even-prism", _g_ijk(inst))


def build_g_double_prime(inst: PiInstance) -> tuple[Graph, dict[str, int]]:
    """Remove ``a, b``; add four triangles whose corners are wired as rungs."""
    a1_, a2_ = inst.a_neighbours
    b1_, b2_ = inst.b_neighbours
    bl = _Builder(inst.graph, {inst.a, inst.b})
    for key in CORNER_KEYS:
        bl.add(f"v{key}")
    for x in "abcd":
        for p, q in combinations([y for y in "abcd" if y != x], 2):
            bl.edge(f"v{x}{p}", f"v{x}{q}")
    bl.names["a'"], bl.names["a''"] = bl.new_id[a1_], bl.new_id[a2_]
    bl.names["b'"], bl.names["b''"] = bl.new_id[b1_], bl.new_id[b2_]
    for u, v in (("vab", "vba"), ("vdc", "vcd"), ("vbd", "vdb"), ("vbc", "vcb"),
                 ("vad", "a'"), ("vac", "a''"), ("vda", "b'"), ("vca", "b''")):
        bl.edge(u, v)
    g = bl.graph()
    if len(triangles(g)) != 4:
        raise InvariantViolation("G'' must have exactly four triangles")
    if g.order != inst.graph.order - 2 + 12:
        raise InvariantViolation("|V(G'')| must be |V(G)| + 10")
    return g, bl.names


def reduce_pi_to_lgpsk4(inst: PiInstance) -> ReductionOutput:
    g, names = build_g_double_prime(inst)
    return ReductionOutput("lgpsk4", [ReductionGraph("G''", g, names)])


def reduce_pi_to_lgbsk4(inst: PiInstance) -> ReductionOutput:
    base, names = build_g_double_prime(inst)
    out = []
    for i, j in product((0, 1), repeat=2):
        g, nm = base, names
        if i:
            g, nm = _subdivide(g, nm, "vad", "a'", "s_ad")
        if j:
            g, nm = _subdivide(g, nm, "vac", "a''", "s_ac")
        out.append(ReductionGraph(f"G''_{i}{j}", g, nm))
    return ReductionOutput("lgbsk4", out)


REDUCTIONS = {
    "prism": (reduce_pi_to_prism, "prism-any"),
    "odd-prism": (reduce_pi_to_odd_prism, "prism-odd"),
    "even-prism": (reduce_pi_to_even_prism, "prism-even"),
    "lgpsk4": (reduce_pi_to_lgpsk4, "lg-proper-subdiv-k4"),
    "lgbsk4": (reduce_pi_to_lgbsk4, "lg-bipartite-subdiv-k4"),
}


def tiny_pi_instances() -> list[tuple[str, PiInstance]]:
    """Hand-built triangle-free instances, yes and no, at most 10 vertices."""

    def inst(n, edges, a, b):
        return PiInstance(Graph.from_edges(n, edges), a, b)

    def cyc(k):
        return [(i, (i + 1) % k) for i in range(k)]

    return [
        ("C4", inst(4, cyc(4), 0, 2)),
        ("C5", inst(5, cyc(5), 0, 2)),
        ("C6", inst(6, cyc(6), 0, 3)),
        ("C6+chord14", inst(6, cyc(6) + [(1, 4)], 0, 3)),
        ("C7", inst(7, cyc(7), 0, 3)),
        ("C8", inst(8, cyc(8), 0, 4)),
        ("C8+chord15", inst(8, cyc(8) + [(1, 5)], 0, 3)),
        ("K23", inst(5, [(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)], 2, 3)),
        ("P5", inst(5, [(0, 1), (1, 2), (2, 3), (3, 4)], 1, 3)),
        ("two-C4-at-vertex", inst(7, cyc(4) + [(3, 4), (4, 5), (5, 6), (6, 3)], 1, 5)),
        ("2C4", inst(8, cyc(4) + [(4, 5), (5, 6), (6, 7), (7, 4)], 0, 4)),
        ("theta", inst(8, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0), (0, 6), (6, 7), (7, 3)], 1, 4)),
        ("cube-like", inst(8, [(0, 1), (1, 2), (2, 3), (3, 0), (4, 5), (5, 6), (6, 7), (7, 4), (0, 4), (2, 6)], 1, 5)),
    ]
