"""Holes and antiholes.

``find_long_hole`` is the polynomial test for holes of length at least 5.
The rest is brute force over chordless paths and stands in for a polynomial
Berge recognition routine at desk scale: swap ``is_berge_desk`` for a real
implementation without touching callers.
"""

from __future__ import annotations

import os
from collections.abc import Iterator

from .errors import BudgetExceeded
from .graph import Graph, bits, complement, shortest_path_constrained
from .structures import AntiholeWitness, HoleWitness

DEFAULT_BUDGET = 10_000_000


def default_budget() -> int:
    env = os.environ.get("CONTRACTILE_BUDGET")
    return int(env) if env else DEFAULT_BUDGET


def find_long_hole(g: Graph) -> HoleWitness | None:
    """Find a hole of length >= 5, or ``None`` if there is none.

    For each chordless path ``a-b-c`` (``a < c``, triples in lexicographic
    order) remove ``N(a) & N(c)`` and ``N(b) - {a, c}``; if ``a`` and ``c``
    stay connected, a shortest ``a``-``c`` path closed through ``b`` is a hole.
    """
    adj = g.adj
    full = g.vertex_mask
    for a in range(g.order):
        for b in bits(adj[a]):
            for c in bits(adj[b] & ~adj[a] & ~((1 << (a + 1)) - 1)):
                removed = (adj[a] & adj[c]) | (adj[b] & ~(1 << a) & ~(1 << c)) | (1 << b)
                allowed = full & ~removed & ~(1 << a) & ~(1 << c)
                p = shortest_path_constrained(g, a, c, allowed)
                if p is not None:
                    w = HoleWitness(p + (b,))
                    assert len(p) >= 4 and w.validate(g), "long-hole construction produced a non-hole"
                    return w
    return None


def find_long_antihole(g: Graph) -> AntiholeWitness | None:
    hole = find_long_hole(complement(g))
    return None if hole is None else AntiholeWitness(hole.cycle)


def iter_chordless_cycles(g: Graph, min_len: int, max_len: int, budget: int | None = None) -> Iterator[tuple[int, ...]]:
    """Yield every chordless cycle with ``min_len <= length <= max_len`` once.

    Cycles come out canonical: smallest vertex first, then the smaller of its
    two cycle neighbours.  Raises :class:`BudgetExceeded` rather than
    truncating silently.
    """
    budget = default_budget() if budget is None else budget
    adj = g.adj
    nodes = 0
    for s in range(g.order):
        higher = ~((1 << (s + 1)) - 1)
        for v1 in bits(adj[s] & higher):
            # stack entries: (path, mask of path vertices, union of N(v) over inner vertices)
            stack = [((s, v1), (1 << s) | (1 << v1), 0)]
            while stack:
                nodes += 1
                if nodes > budget:
                    raise BudgetExceeded("chordless cycle enumeration", budget)
                path, pmask, forbidden = stack.pop()
                last = path[-1]
                k = len(path)
                step = adj[last] & higher & ~pmask & ~forbidden
                for w in bits(step):
                    if adj[w] >> s & 1:
                        if min_len <= k + 1 <= max_len and k >= 3 and v1 < w:
                            yield path + (w,)
                    elif k + 1 < max_len:
                        stack.append((path + (w,), pmask | (1 << w), forbidden | adj[last]))


def enumerate_chordless_cycles(g: Graph, min_len: int, max_len: int, budget: int | None = None) -> list[HoleWitness]:
    cycles = sorted(iter_chordless_cycles(g, min_len, max_len, budget), key=lambda c: (len(c), c))
    return [HoleWitness(c) for c in cycles]


def find_odd_hole_bruteforce(g: Graph, budget: int | None = None) -> HoleWitness | None:
    """Shortest odd hole (lexicographically first among those), if any."""
    for length in range(5, g.order + 1, 2):
        best = min(iter_chordless_cycles(g, length, length, budget), default=None)
        if best is not None:
            return HoleWitness(best)
    return None


def find_odd_antihole_bruteforce(g: Graph, budget: int | None = None) -> AntiholeWitness | None:
    hole = find_odd_hole_bruteforce(complement(g), budget)
    return None if hole is None else AntiholeWitness(hole.cycle)


def is_berge_desk(g: Graph, budget: int | None = None) -> tuple[bool, HoleWitness | None]:
    """Berge test by exhaustive search; the certificate is an odd hole or odd antihole."""
    hole = find_odd_hole_bruteforce(g, budget)
    if hole is not None:
        return False, hole
    anti = find_odd_antihole_bruteforce(g, budget)
    if anti is not None:
        return False, anti
    return True, None
