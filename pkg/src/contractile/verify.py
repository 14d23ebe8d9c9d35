"""Acceptance suites.

Each suite returns a :class:`SuiteResult` with a pass flag, headline counts and
per-item rows (written as CSV by :func:`write_report`).  Randomised corpora
are drawn from ``random.Random(seed)`` so results are reproducible and do not
depend on ``jobs``.
"""

from __future__ import annotations

import csv
import json
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from pathlib import Path
from typing import Callable, Iterable

import numpy as np

from .coloring import color_class_a, is_even_pair_definitional
from .corpus import (
    add_noise,
    all_labeled_graphs,
    atlas,
    gnp,
    odd_hole_free_corpus,
    pyramid_free_corpus,
    rung_length_vectors,
)
from .graph import Graph, complement, contract, encode_graph6, even_prism9, petersen, prism6
from .holes import enumerate_chordless_cycles, find_long_antihole, find_long_hole
from .oracle import (
    build_lg_subdivided_k4,
    oracle_chromatic_number,
    oracle_clique_number,
    oracle_has,
)
from .parity import (
    detect_even_prism,
    detect_lg_bipartite_subdivision_k4,
    detect_lg_proper_subdivision_k4,
    detect_odd_prism,
    detect_odd_prism_full,
)
from .prism_pyramid import detect_pyramid_or_prism_v1, detect_pyramid_or_prism_v2
from .recognize import CLASS_A, CLASS_A_PRIME, definitional_member, recognize_class_a, recognize_class_a_prime
from .reductions import (
    REDUCTIONS,
    CnfFormula,
    GadgetAudit,
    build_pi_instance,
    expected_edge_count,
    extract_assignment,
    formula_family,
    solve_pi_bruteforce,
    tiny_pi_instances,
)
from .structures import subdivision_is_bipartite

DEFAULT_SEED = 20240601


@dataclass
class SuiteResult:
    criterion: int
    name: str
    passed: bool
    summary: str
    counts: dict[str, int | float] = field(default_factory=dict)
    elapsed: float = 0.0
    rows: list[dict] = field(default_factory=list)
    gating: bool = True

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        if not self.gating:
            status += " (informational)"
        return f"[{status}] criterion {self.criterion} {self.name}: {self.summary} ({self.elapsed:.1f}s)"

    def to_dict(self) -> dict:
        d = asdict(self)
        d.pop("rows")
        return d


def _pmap(fn: Callable, items: list, jobs: int) -> list:
    """Order-preserving map, optionally over worker processes."""
    if jobs <= 1 or len(items) < 64:
        return [fn(x) for x in items]
    with ProcessPoolExecutor(max_workers=jobs) as ex:
        return list(ex.map(fn, items, chunksize=max(1, len(items) // (8 * jobs))))


def _timed(fn):
    def wrapper(*args, **kwargs) -> SuiteResult:
        t0 = time.perf_counter()
        res = fn(*args, **kwargs)
        res.elapsed = time.perf_counter() - t0
        return res

    wrapper.__name__ = fn.__name__
    wrapper.__doc__ = fn.__doc__
    return wrapper


# --------------------------------------------------------------------------
# 1. pyramid or prism
# --------------------------------------------------------------------------


def _check_pyramid_prism(g: Graph) -> tuple[bool, bool, bool, bool]:
    w1 = detect_pyramid_or_prism_v1(g)
    d2 = detect_pyramid_or_prism_v2(g)
    truth = oracle_has(g, "prism-any") or oracle_has(g, "pyramid")
    valid = (w1 is None or w1.validate(g)) and (d2.witness is None or d2.witness.validate(g))
    return w1 is not None, d2.found, truth, valid


@_timed
def suite_pyramid_prism(seed: int = DEFAULT_SEED, jobs: int = 1, random_count: int = 2000) -> SuiteResult:
    rng = random.Random(seed)
    graphs = list(all_labeled_graphs(6))
    n_exhaustive = len(graphs)
    for _ in range(random_count):
        graphs.append(gnp(rng, rng.randint(8, 12), rng.choice((0.2, 0.35, 0.5))))
    out = _pmap(_check_pyramid_prism, graphs, jobs)
    rows, bad = [], 0
    for i, (g, (a1, a2, truth, valid)) in enumerate(zip(graphs, out)):
        ok = a1 == a2 == truth and valid
        bad += not ok
        if not ok or i >= n_exhaustive:
            rows.append({"graph6": encode_graph6(g), "n": g.order, "alg1": a1, "alg2": a2, "oracle": truth, "witness_valid": valid})
    positives = sum(t for *_, t, _ in out)
    return SuiteResult(
        1,
        "pyramid-or-prism oracle equivalence",
        bad == 0,
        f"{len(graphs)} graphs ({n_exhaustive} labelled n=6, {random_count} random), {positives} positive, {bad} disagreements",
        {"graphs": len(graphs), "positives": positives, "disagreements": bad},
        rows=rows,
    )


# --------------------------------------------------------------------------
# 2. long holes and antiholes
# --------------------------------------------------------------------------


def _check_long(g: Graph) -> tuple[bool, bool, bool, bool, bool]:
    h = find_long_hole(g)
    a = find_long_antihole(g)
    th = bool(enumerate_chordless_cycles(g, 5, g.order))
    ta = bool(enumerate_chordless_cycles(complement(g), 5, g.order))
    valid = (h is None or h.validate(g)) and (a is None or a.validate(g))
    return h is not None, th, a is not None, ta, valid


@_timed
def suite_long_holes(seed: int = DEFAULT_SEED, jobs: int = 1) -> SuiteResult:
    del seed
    graphs = atlas(7)
    out = _pmap(_check_long, graphs, jobs)
    rows, bad = [], 0
    for g, (h, th, a, ta, valid) in zip(graphs, out):
        ok = h == th and a == ta and valid
        bad += not ok
        rows.append({"graph6": encode_graph6(g), "n": g.order, "long_hole": h, "enum_hole": th, "long_antihole": a, "enum_antihole": ta, "ok": ok})
    return SuiteResult(
        2,
        "long hole / antihole vs chordless-cycle enumeration",
        bad == 0,
        f"{len(graphs)} non-isomorphic graphs n<=7, {sum(r['enum_hole'] for r in rows)} with long holes, {bad} disagreements",
        {"graphs": len(graphs), "disagreements": bad},
        rows=rows,
    )


# --------------------------------------------------------------------------
# 3 and 5. even and odd prisms on odd-hole-free graphs
# --------------------------------------------------------------------------


def _check_even(g: Graph) -> tuple[bool, bool, bool]:
    w = detect_even_prism(g, checked=False)
    return w is not None, oracle_has(g, "prism-even"), w is None or (w.validate(g) and w.parity == "even")


def _check_odd(g: Graph) -> tuple[bool, bool, bool]:
    w = detect_odd_prism(g, checked=False)
    return w is not None, oracle_has(g, "prism-odd"), w is None or (w.validate(g) and w.parity == "odd")


def _parity_rows(graphs, out, label):
    rows, bad = [], 0
    for g, (det, truth, valid) in zip(graphs, out):
        ok = det == truth and valid
        bad += not ok
        rows.append({"graph6": encode_graph6(g), "n": g.order, label: det, "oracle": truth, "witness_valid": valid})
    return rows, bad


@_timed
def suite_even_prism(seed: int = DEFAULT_SEED, jobs: int = 1, count: int = 500) -> SuiteResult:
    graphs = odd_hole_free_corpus(random.Random(seed), count)
    rows, bad = _parity_rows(graphs, _pmap(_check_even, graphs, jobs), "even_prism")
    fig_pos = detect_even_prism(even_prism9()) is not None
    prism6_neg = detect_even_prism(prism6()) is None
    pos = sum(r["oracle"] for r in rows)
    return SuiteResult(
        3,
        "even prism detector",
        bad == 0 and fig_pos and prism6_neg,
        f"{len(graphs)} odd-hole-free graphs, {pos} positive, {bad} disagreements; "
        f"nine-vertex even prism {'found' if fig_pos else 'MISSED'}, prism6 {'rejected' if prism6_neg else 'ACCEPTED'}",
        {"graphs": len(graphs), "positives": pos, "disagreements": bad},
        rows=rows,
    )


def _bipartite_vectors() -> list[tuple[int, ...]]:
    """Rung vectors whose subdivision is bipartite and proper, smallest first."""
    out = []
    for r in rung_length_vectors(6):
        d = dict(zip(("ab", "ac", "ad", "bc", "bd", "cd"), r))
        if any(r) and subdivision_is_bipartite(d):
            out.append(r)
    return out


@_timed
def suite_odd_prism(seed: int = DEFAULT_SEED, jobs: int = 1, count: int = 500, phase1_count: int = 8) -> SuiteResult:
    graphs = odd_hole_free_corpus(random.Random(seed), count)
    rows, bad = _parity_rows(graphs, _pmap(_check_odd, graphs, jobs), "odd_prism")
    phase1_ok = 0
    vectors = _bipartite_vectors()[:phase1_count]
    for r in vectors:
        g, _ = build_lg_subdivided_k4(r)
        res = detect_odd_prism_full(g, checked=False)
        good = res.phase == 1 and res.witness is not None and res.witness.validate(g) and res.witness.parity == "odd"
        phase1_ok += good
        rows.append({"graph6": encode_graph6(g), "n": g.order, "odd_prism": res.witness is not None, "oracle": True, "witness_valid": good, "phase": res.phase, "rungs": "-".join(map(str, r))})
    pos = sum(r["oracle"] for r in rows[: len(graphs)])
    return SuiteResult(
        5,
        "odd prism detector",
        bad == 0 and phase1_ok == len(vectors) >= 5,
        f"{len(graphs)} odd-hole-free graphs, {pos} positive, {bad} disagreements; phase 1 produced an odd prism on {phase1_ok}/{len(vectors)} bipartite K4 line graphs",
        {"graphs": len(graphs), "positives": pos, "disagreements": bad, "phase1_ok": phase1_ok, "phase1_total": len(vectors)},
        rows=rows,
    )


# --------------------------------------------------------------------------
# 4. line graphs of K4 subdivisions
# --------------------------------------------------------------------------


def _check_lg(g: Graph) -> tuple[bool, bool, bool | None, bool | None, bool]:
    """Proper variant on every graph; bipartite variant only where its odd-hole-free precondition holds."""
    wp = detect_lg_proper_subdivision_k4(g, checked=False)
    valid = wp is None or (wp.validate(g) and wp.proper)
    if oracle_has(g, "odd-hole"):
        return wp is not None, oracle_has(g, "lg-proper-subdiv-k4"), None, None, valid
    wb = detect_lg_bipartite_subdivision_k4(g, checked=False)
    valid &= wb is None or (wb.validate(g) and wb.proper and wb.bipartite)
    return wp is not None, oracle_has(g, "lg-proper-subdiv-k4"), wb is not None, oracle_has(g, "lg-bipartite-subdiv-k4"), valid


def lg_corpus(seed: int, random_count: int = 200, max_total: int = 6) -> list[tuple[str, Graph]]:
    """Every rung vector alone, once with one and once with two pyramid-free noise vertices, then random graphs."""
    rng = random.Random(seed)
    out: list[tuple[str, Graph]] = []
    for r in rung_length_vectors(max_total):
        base, _ = build_lg_subdivided_k4(r)
        tag = "-".join(map(str, r))
        out.append((f"rungs {tag}", base))
        for k in (1, 2):
            for _ in range(20):
                h = add_noise(rng, base, k, 0.25)
                if not oracle_has(h, "pyramid"):
                    out.append((f"rungs {tag} +{k}", h))
                    break
    out.extend(("random", g) for g in pyramid_free_corpus(rng, random_count))
    return out


@_timed
def suite_lgk4(seed: int = DEFAULT_SEED, jobs: int = 1, random_count: int = 200) -> SuiteResult:
    corpus = lg_corpus(seed, random_count)
    graphs = [g for _, g in corpus]
    out = _pmap(_check_lg, graphs, jobs)
    rows, bad = [], 0
    for (src, g), (p, tp, b, tb, valid) in zip(corpus, out):
        ok = p == tp and b == tb and valid
        bad += not ok
        rows.append({"source": src, "graph6": encode_graph6(g), "n": g.order, "proper": p, "oracle_proper": tp, "bipartite": b, "oracle_bipartite": tb, "ok": ok})
    constructed = sum(1 for s, _ in corpus if s != "random")
    return SuiteResult(
        4,
        "LG(K4 subdivision) detector",
        bad == 0,
        f"{constructed} constructed + {len(corpus) - constructed} random pyramid-free graphs, "
        f"{sum(r['oracle_proper'] for r in rows)} proper positives, {sum(bool(r['oracle_bipartite']) for r in rows)} bipartite positives "
        f"(bipartite variant on {sum(r['bipartite'] is not None for r in rows)} odd-hole-free graphs), {bad} disagreements",
        {"graphs": len(corpus), "constructed": constructed, "disagreements": bad},
        rows=rows,
    )


# --------------------------------------------------------------------------
# 6. class recognition
# --------------------------------------------------------------------------


def _check_classes(g: Graph) -> tuple[bool, bool, bool, bool, bool]:
    ra, rp = recognize_class_a(g), recognize_class_a_prime(g)
    valid = all(r.member or r.certificate.validate(g) for r in (ra, rp))
    return ra.member, definitional_member(g, CLASS_A), rp.member, definitional_member(g, CLASS_A_PRIME), valid


def _fixtures() -> list[tuple[str, bool, bool]]:
    from .graph import cycle_graph

    checks = [
        ("C5 not in A", cycle_graph(5), CLASS_A, False),
        ("C6 in A", cycle_graph(6), CLASS_A, True),
        ("prism6 not in A'", prism6(), CLASS_A_PRIME, False),
        ("even prism in A'", even_prism9(), CLASS_A_PRIME, True),
        ("even prism not in A", even_prism9(), CLASS_A, False),
        ("Petersen not in A", petersen(), CLASS_A, False),
    ]
    out = []
    for label, g, cls, want in checks:
        rep = recognize_class_a(g) if cls == CLASS_A else recognize_class_a_prime(g)
        out.append((label, rep.member == want, rep.member))
    return out


@_timed
def suite_recognition(seed: int = DEFAULT_SEED, jobs: int = 1, random_count: int = 1000) -> SuiteResult:
    rng = random.Random(seed)
    graphs = atlas(7)
    n_atlas = len(graphs)
    for _ in range(random_count):
        graphs.append(gnp(rng, rng.randint(5, 10), rng.choice((0.2, 0.35, 0.5, 0.65, 0.8))))
    out = _pmap(_check_classes, graphs, jobs)
    rows, bad = [], 0
    for g, (a, ta, p, tp, valid) in zip(graphs, out):
        ok = a == ta and p == tp and valid
        bad += not ok
        rows.append({"graph6": encode_graph6(g), "n": g.order, "A": a, "oracle_A": ta, "A_prime": p, "oracle_A_prime": tp, "certificate_valid": valid})
    fixtures = _fixtures()
    fix_ok = all(ok for _, ok, _ in fixtures)
    members = sum(r["A"] for r in rows)
    return SuiteResult(
        6,
        "class recognition",
        bad == 0 and fix_ok,
        f"{n_atlas} catalogue + {random_count} random graphs, {members} in A, {sum(r['A_prime'] for r in rows)} in A', {bad} disagreements; "
        f"fixtures {sum(ok for _, ok, _ in fixtures)}/{len(fixtures)}",
        {"graphs": len(graphs), "members_a": members, "disagreements": bad, "fixtures_failed": sum(not ok for _, ok, _ in fixtures)},
        rows=rows,
    )


# --------------------------------------------------------------------------
# 7. colouring
# --------------------------------------------------------------------------


def _check_coloring(g: Graph) -> dict:
    col = color_class_a(g, checked=False)
    omega, chi = oracle_clique_number(g), oracle_chromatic_number(g)
    h, pairs_even = g, True
    for step in col.trace:
        pairs_even &= is_even_pair_definitional(h, step.x, step.y)
        h, _ = contract(h, step.x, step.y)
    return {
        "graph6": encode_graph6(g),
        "n": g.order,
        "palette": col.palette,
        "omega": omega,
        "chi": chi,
        "proper": col.is_proper(g),
        "steps": len(col.trace),
        "even_pairs": pairs_even,
    }


def coloring_corpus(seed: int, count: int = 240) -> list[Graph]:
    """Members of A with at most 9 vertices: the catalogue for n = 4..7, then random graphs on 8 and 9 vertices."""
    rng = random.Random(seed)
    members = [g for g in atlas(7) if g.order >= 4 and recognize_class_a(g).member]
    rng.shuffle(members)
    out = members[: count // 2]
    while len(out) < count:
        g = gnp(rng, rng.randint(8, 9), rng.choice((0.25, 0.4, 0.55, 0.7)))
        if recognize_class_a(g).member:
            out.append(g)
    return out


@_timed
def suite_coloring(seed: int = DEFAULT_SEED, jobs: int = 1, count: int = 240) -> SuiteResult:
    graphs = coloring_corpus(seed, count)
    rows = _pmap(_check_coloring, graphs, jobs)
    bad = 0
    for r in rows:
        r["ok"] = r["palette"] == r["omega"] == r["chi"] and r["proper"] and r["even_pairs"]
        bad += not r["ok"]
    return SuiteResult(
        7,
        "colouring by even-pair contraction",
        bad == 0 and len(graphs) >= 200,
        f"{len(graphs)} members of A with n<=9, {sum(r['steps'] for r in rows)} contractions audited, {bad} failures",
        {"graphs": len(graphs), "failures": bad},
        rows=rows,
    )


# --------------------------------------------------------------------------
# 8. reductions
# --------------------------------------------------------------------------


def _random_formulas(rng: random.Random, count: int) -> list[CnfFormula]:
    out = []
    for _ in range(count):
        n = rng.randint(1, 3)
        m = rng.randint(1, 3)
        clauses = [[rng.choice((1, -1)) * rng.randint(1, n) for _ in range(3)] for _ in range(m)]
        out.append(CnfFormula.from_ints(n, clauses))
    return out


def _check_formula(f: CnfFormula) -> dict:
    audits: list[GadgetAudit] = []
    inst = build_pi_instance(f, audits)
    sat = f.brute_force_sat() is not None
    hole = solve_pi_bruteforce(inst)
    assignment_ok = hole is None or f.evaluate(extract_assignment(inst, hole))
    n, m = f.n_vars, len(f.clauses)
    audit_ok = (
        inst.graph.order == 8 * n + 5 * m + 2
        and inst.graph.edge_count() == expected_edge_count(n, m)
        and all((a.vertices, a.edges) == ((8, 10) if a.kind == "variable" else (5, 6)) for a in audits)
    )
    return {
        "formula": " ".join(map(str, f.to_ints())),
        "n_vars": n,
        "clauses": m,
        "order": inst.graph.order,
        "sat": sat,
        "hole": hole is not None,
        "assignment_ok": assignment_ok,
        "audit_ok": audit_ok,
    }


@_timed
def suite_reductions(seed: int = DEFAULT_SEED, jobs: int = 1, random_count: int = 50) -> SuiteResult:
    formulas = list(formula_family()) + _random_formulas(random.Random(seed), random_count)
    rows = _pmap(_check_formula, formulas, jobs)
    sat_bad = sum(r["sat"] != r["hole"] or not r["assignment_ok"] for r in rows)
    audit_bad = sum(not r["audit_ok"] for r in rows)
    pi_bad, tiny = 0, tiny_pi_instances()
    for name, inst in tiny:
        answer = solve_pi_bruteforce(inst) is not None
        row = {"formula": f"pi:{name}", "order": inst.graph.order, "sat": answer}
        for target, (fn, kind) in REDUCTIONS.items():
            found = any(oracle_has(rg.graph, kind) for rg in fn(inst).graphs)
            row[target] = found
            pi_bad += found != answer
        rows.append(row)
    return SuiteResult(
        8,
        "NP-hardness reductions",
        sat_bad == 0 and audit_bad == 0 and pi_bad == 0 and len(tiny) >= 10,
        f"{len(formulas)} formulas ({sum(r['sat'] for r in rows[: len(formulas)])} satisfiable): {sat_bad} SAT/hole mismatches, "
        f"{audit_bad} audit failures; {len(tiny)} tiny instances x {len(REDUCTIONS)} reductions: {pi_bad} mismatches",
        {"formulas": len(formulas), "sat_mismatches": sat_bad, "audit_failures": audit_bad, "pi_instances": len(tiny), "pi_mismatches": pi_bad},
        rows=rows,
    )


# --------------------------------------------------------------------------
# 9. complexity smoke
# --------------------------------------------------------------------------


def loglog_slope(ns: Iterable[int], times: Iterable[float]) -> float:
    x, y = np.log(np.asarray(list(ns), float)), np.log(np.maximum(np.asarray(list(times), float), 1e-9))
    return float(np.polyfit(x, y, 1)[0])


def _clique_blocks(rng: random.Random, n: int, k: int = 5) -> Graph:
    """Disjoint ``K_k`` blocks, relabelled: many triangles, no pyramid, no prism."""
    perm = list(range(n))
    rng.shuffle(perm)
    edges = [(perm[i], perm[j]) for s in range(0, n, k) for i in range(s, min(n, s + k)) for j in range(i + 1, min(n, s + k))]
    return Graph.from_edges(n, edges)


def _cocktail_party(rng: random.Random, n: int) -> Graph:
    """``K_n`` minus a perfect matching, relabelled.

    Dense and full of triangles, yet every induced subgraph has a matching as
    its complement, which rules out both prisms and pyramids.
    """
    perm = list(range(n))
    rng.shuffle(perm)
    return Graph.from_edges(n, [(perm[i], perm[j]) for i in range(n) for j in range(i + 1, n) if not (j == i + 1 and i % 2 == 0)])


@_timed
def suite_complexity(seed: int = DEFAULT_SEED, jobs: int = 1, sizes=(20, 30, 40, 50, 60), repeats: int = 3, p: float = 0.3, limit: float = 60.0) -> SuiteResult:
    """Gating: G(60, p) within ``limit`` seconds.  Slopes are informational.

    Random graphs at this density are answered at the first triangle, so two
    negative series force a full scan: sparse disjoint cliques and dense
    cocktail-party graphs.
    """
    del jobs  # timings are taken serially
    rng = random.Random(seed)
    rows = []
    for series, make in (("gnp", lambda n: gnp(rng, n, p)), ("cliques", lambda n: _clique_blocks(rng, n)),
                         ("cocktail", lambda n: _cocktail_party(rng, n))):
        for n in sizes:
            for rep in range(repeats):
                g = make(n)
                t0 = time.perf_counter()
                d = detect_pyramid_or_prism_v2(g, want_witness=False)
                rows.append({"series": series, "n": n, "repeat": rep, "seconds": time.perf_counter() - t0, "found": d.found, "edges": g.edge_count()})
    slopes = {}
    for series in ("gnp", "cliques", "cocktail"):
        med = {n: float(np.median([r["seconds"] for r in rows if r["n"] == n and r["series"] == series])) for n in sizes}
        slopes[series] = loglog_slope(med.keys(), med.values())
    worst = max(r["seconds"] for r in rows if r["n"] == max(sizes) and r["series"] == "gnp")
    worst_dense = max(r["seconds"] for r in rows if r["n"] == max(sizes) and r["series"] == "cocktail")
    negatives_ok = not any(r["found"] for r in rows if r["series"] != "gnp")
    return SuiteResult(
        9,
        "complexity smoke (fast pyramid-or-prism)",
        worst < limit and negatives_ok,
        f"G({max(sizes)}, {p}): worst {worst:.4f}s (limit {limit:.0f}s); log-log slope {slopes['gnp']:.2f} on G(n,{p}), "
        f"{slopes['cliques']:.2f} on disjoint cliques, {slopes['cocktail']:.2f} on cocktail-party graphs "
        f"(worst {worst_dense:.3f}s), n={list(sizes)}",
        {"worst_seconds": worst, "worst_dense_seconds": worst_dense, "slope_gnp": slopes["gnp"],
         "slope_cliques": slopes["cliques"], "slope_cocktail": slopes["cocktail"]},
        rows=rows,
    )


SUITES: dict[str, Callable[..., SuiteResult]] = {
    "pyramid-prism": suite_pyramid_prism,
    "long-holes": suite_long_holes,
    "even-prism": suite_even_prism,
    "lgk4": suite_lgk4,
    "odd-prism": suite_odd_prism,
    "recognition": suite_recognition,
    "coloring": suite_coloring,
    "reductions": suite_reductions,
    "complexity": suite_complexity,
}


def run_suites(names: Iterable[str] | None = None, seed: int = DEFAULT_SEED, jobs: int = 1) -> list[SuiteResult]:
    names = list(SUITES) if names is None or list(names) == ["all"] else list(names)
    unknown = [n for n in names if n not in SUITES]
    if unknown:
        raise ValueError(f"unknown suite(s) {unknown}; choose from {list(SUITES)} or 'all'")
    return [SUITES[n](seed=seed, jobs=jobs) for n in names]


def write_report(results: list[SuiteResult], out_dir: str | Path, plots: bool = True) -> list[Path]:
    """``summary.csv``, ``summary.json``, one ``criterion<N>.csv`` per suite, and figures."""
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    written = []
    summary = out / "summary.csv"
    with summary.open("w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(["criterion", "name", "passed", "gating", "elapsed_s", "summary"])
        for r in results:
            w.writerow([r.criterion, r.name, r.passed, r.gating, f"{r.elapsed:.3f}", r.summary])
    written.append(summary)
    js = out / "summary.json"
    js.write_text(json.dumps([r.to_dict() for r in results], indent=2))
    written.append(js)
    for r in results:
        if not r.rows:
            continue
        path = out / f"criterion{r.criterion}.csv"
        keys: list[str] = []
        for row in r.rows:
            keys.extend(k for k in row if k not in keys)
        with path.open("w", newline="") as fh:
            w = csv.DictWriter(fh, fieldnames=keys)
            w.writeheader()
            w.writerows(r.rows)
        written.append(path)
    if plots:
        from .plotting import plot_results

        written.extend(plot_results(results, out))
    return written
