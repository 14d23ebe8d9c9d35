"""Command-line front end.

Every subcommand prints one JSON report (or a one-line summary with
``--format text``) and exits with a code from :data:`EXIT_CODES`.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys
import time
from pathlib import Path

from . import __version__
from .coloring import color_class_a
from .errors import BudgetExceeded, ContractileError, GraphParseError, GraphUsageError, InvariantViolation, PreconditionError
from .graph import Graph, complement, encode_graph6, parse_graph
from .holes import enumerate_chordless_cycles, find_long_antihole, find_long_hole
from .oracle import oracle_has
from .parity import (
    detect_even_prism,
    detect_lg_bipartite_subdivision_k4,
    detect_lg_proper_subdivision_k4,
    detect_odd_prism_full,
)
from .prism_pyramid import detect_pyramid_or_prism_v1, detect_pyramid_or_prism_v2
from .recognize import recognize
from .reductions import REDUCTIONS, PiInstance, build_pi_instance, parse_dimacs

SCHEMA = "contractile.report/1"

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_INPUT = 2
EXIT_PRECONDITION = 3
EXIT_BUDGET = 4
EXIT_MISMATCH = 5
EXIT_FOUND = 10
EXIT_NOT_FOUND = 11

EXIT_CODES = {
    EXIT_OK: "ran",
    EXIT_FAILED: "verification suite failed",
    EXIT_INPUT: "input error",
    EXIT_PRECONDITION: "precondition violated",
    EXIT_BUDGET: "budget exceeded",
    EXIT_MISMATCH: "oracle disagreement or internal invariant failure",
    EXIT_FOUND: "structure found",
    EXIT_NOT_FOUND: "structure not found",
}

DETECT_KINDS = (
    "pyramid-or-prism",
    "pyramid-or-prism-fast",
    "long-hole",
    "long-antihole",
    "even-prism",
    "odd-prism",
    "lg-proper-k4",
    "lg-bipartite-k4",
)

REDUCE_TARGETS = ("pi",) + tuple(REDUCTIONS)


def _read_text(source: str) -> str:
    if source == "-":
        return sys.stdin.read()
    try:
        return Path(source).read_text()
    except OSError as exc:
        raise GraphParseError(f"cannot read {source}: {exc.strerror}") from exc


def _load_graph(args) -> Graph:
    g = parse_graph(_read_text(args.input))
    args.input_block = _input_block(args.input, g)
    return g


def _input_block(source: str, g: Graph) -> dict:
    g6 = encode_graph6(g)
    return {
        "source": source,
        "order": g.order,
        "edges": g.edge_count(),
        "graph6": g6,
        "sha256": hashlib.sha256(g6.encode()).hexdigest(),
    }


def _report(command: str, **fields) -> dict:
    rep = {
        "schema": SCHEMA,
        "command": command,
        "input": None,
        "verdict": None,
        "witness": None,
        "timings": {},
        "exit_code": EXIT_OK,
        "error": None,
    }
    rep.update(fields)
    return rep


# --------------------------------------------------------------------------
# detect
# --------------------------------------------------------------------------


def _run_detector(kind: str, g: Graph, checked: bool | None, literal: bool) -> tuple[object, dict]:
    """Returns (witness or bool, extra report fields)."""
    extra: dict = {}
    if kind == "pyramid-or-prism":
        return detect_pyramid_or_prism_v1(g), extra
    if kind == "pyramid-or-prism-fast":
        d = detect_pyramid_or_prism_v2(g, want_witness=True, literal=literal)
        extra["decision"] = {"triangle": None if d.triangle is None else list(d.triangle), "stage": d.stage}
        return (d.witness if d.found else None), extra
    if kind == "long-hole":
        return find_long_hole(g), extra
    if kind == "long-antihole":
        return find_long_antihole(g), extra
    if kind == "even-prism":
        return detect_even_prism(g, checked=checked, literal=literal), extra
    if kind == "odd-prism":
        res = detect_odd_prism_full(g, checked=checked, literal=literal)
        extra["phase"] = res.phase
        if res.deleted_rung is not None:
            extra["deleted_rung"] = res.deleted_rung
        return res.witness, extra
    if kind == "lg-proper-k4":
        return detect_lg_proper_subdivision_k4(g, checked=checked, literal=literal), extra
    if kind == "lg-bipartite-k4":
        return detect_lg_bipartite_subdivision_k4(g, checked=checked, literal=literal), extra
    raise GraphUsageError(f"unknown detector {kind!r}")


def oracle_verdict(kind: str, g: Graph) -> bool:
    """Exhaustive answer for a detector kind."""
    if kind.startswith("pyramid-or-prism"):
        return oracle_has(g, "prism-any") or oracle_has(g, "pyramid")
    if kind == "long-hole":
        return bool(enumerate_chordless_cycles(g, 5, g.order))
    if kind == "long-antihole":
        return bool(enumerate_chordless_cycles(complement(g), 5, g.order))
    return oracle_has(
        g,
        {
            "even-prism": "prism-even",
            "odd-prism": "prism-odd",
            "lg-proper-k4": "lg-proper-subdiv-k4",
            "lg-bipartite-k4": "lg-bipartite-subdiv-k4",
        }[kind],
    )


def cmd_detect(args) -> dict:
    g = _load_graph(args)
    rep = _report("detect", kind=args.kind, input=args.input_block)
    t0 = time.perf_counter()
    w, extra = _run_detector(args.kind, g, args.checked, args.literal)
    rep["timings"]["detect"] = time.perf_counter() - t0
    rep.update(extra)
    found = w is not None
    rep["verdict"] = "found" if found else "not-found"
    rep["witness"] = None if w is None else w.to_dict()
    rep["exit_code"] = EXIT_FOUND if found else EXIT_NOT_FOUND
    if w is not None and not w.validate(g):
        raise InvariantViolation("detector returned a witness that does not validate")
    if args.oracle:
        t0 = time.perf_counter()
        truth = oracle_verdict(args.kind, g)
        rep["timings"]["oracle"] = time.perf_counter() - t0
        rep["oracle"] = {"verdict": "found" if truth else "not-found", "agrees": truth == found}
        if truth != found:
            rep["exit_code"] = EXIT_MISMATCH
            rep["error"] = "detector and oracle disagree"
    return rep


# --------------------------------------------------------------------------
# recognize / color
# --------------------------------------------------------------------------


def cmd_recognize(args) -> dict:
    g = _load_graph(args)
    r = recognize(g, args.cls)
    rep = _report("recognize", input=args.input_block, timings=r.timings)
    rep["class"] = r.class_name
    rep["verdict"] = "member" if r.member else "non-member"
    rep["stage"] = r.stage
    rep["certificate_kind"] = r.certificate_kind
    rep["witness"] = None if r.certificate is None else r.certificate.to_dict()
    if args.oracle:
        from .recognize import definitional_member

        truth = definitional_member(g, r.class_name)
        rep["oracle"] = {"verdict": "member" if truth else "non-member", "agrees": truth == r.member}
        if truth != r.member:
            rep["exit_code"] = EXIT_MISMATCH
            rep["error"] = "recognizer and definitional oracle disagree"
    return rep


def cmd_color(args) -> dict:
    g = _load_graph(args)
    checked = True if args.checked is None else args.checked
    t0 = time.perf_counter()
    col = color_class_a(g, checked=checked, literal=args.literal)
    rep = _report("color", input=args.input_block, timings={"color": time.perf_counter() - t0})
    rep["verdict"] = "colored"
    rep["coloring"] = col.to_dict()
    if args.oracle:
        from .oracle import oracle_chromatic_number

        chi = oracle_chromatic_number(g)
        rep["oracle"] = {"chromatic_number": chi, "agrees": chi == col.palette}
        if chi != col.palette:
            rep["exit_code"] = EXIT_MISMATCH
            rep["error"] = "palette differs from the chromatic number"
    return rep


# --------------------------------------------------------------------------
# reduce
# --------------------------------------------------------------------------


def _looks_like_dimacs(text: str) -> bool:
    for ln in text.splitlines():
        s = ln.strip()
        if s:
            return s.startswith(("p cnf", "c ", "c\t")) or s == "c"
    return False


def _default_terminals(g: Graph) -> tuple[int, int]:
    """Smallest non-adjacent pair of degree-2 vertices."""
    deg2 = [v for v in range(g.order) if g.degree(v) == 2]
    for i, a in enumerate(deg2):
        for b in deg2[i + 1 :]:
            if not g.has_edge(a, b):
                return a, b
    raise GraphUsageError("no two non-adjacent degree-2 vertices; pass --a and --b")


def _load_instance(args, text: str) -> tuple[PiInstance, dict]:
    if _looks_like_dimacs(text):
        f = parse_dimacs(text)
        inst = build_pi_instance(f)
        return inst, {"source": args.input, "format": "dimacs", "n_vars": f.n_vars, "clauses": len(f.clauses)}
    g = parse_graph(text)
    a, b = (args.a, args.b) if args.a is not None and args.b is not None else _default_terminals(g)
    return PiInstance(g, a, b), {**_input_block(args.input, g), "a": a, "b": b}


def _write_graph(out_dir: Path | None, label: str, g: Graph, names: dict[str, int]) -> dict:
    entry = {"label": label, "order": g.order, "edges": g.edge_count(), "graph6": encode_graph6(g), "names": names}
    if out_dir is not None:
        out_dir.mkdir(parents=True, exist_ok=True)
        stem = label.replace("'", "p")
        (out_dir / f"{stem}.g6").write_text(entry["graph6"] + "\n")
        (out_dir / f"{stem}.names.json").write_text(json.dumps(names, indent=2, sort_keys=True) + "\n")
        entry["files"] = [str(out_dir / f"{stem}.g6"), str(out_dir / f"{stem}.names.json")]
    return entry


def cmd_reduce(args) -> dict:
    text = _read_text(args.input)
    out_dir = Path(args.out) if args.out else None
    t0 = time.perf_counter()
    if args.target == "pi":
        if not _looks_like_dimacs(text):
            raise GraphParseError("target 'pi' needs a DIMACS CNF input")
        f = parse_dimacs(text)
        inst = build_pi_instance(f)
        block = {"source": args.input, "format": "dimacs", "n_vars": f.n_vars, "clauses": len(f.clauses)}
        graphs = [_write_graph(out_dir, "G_f", inst.graph, {**inst.names, "a": inst.a, "b": inst.b})]
    else:
        inst, block = _load_instance(args, text)
        fn, kind = REDUCTIONS[args.target]
        graphs = [_write_graph(out_dir, rg.label, rg.graph, rg.names) for rg in fn(inst).graphs]
    rep = _report("reduce", target=args.target, input=block, timings={"reduce": time.perf_counter() - t0})
    rep["verdict"] = "built"
    rep["graphs"] = graphs
    if args.oracle and args.target != "pi":
        from .reductions import solve_pi_bruteforce

        answer = solve_pi_bruteforce(inst) is not None
        present = any(oracle_has(parse_graph(e["graph6"]), REDUCTIONS[args.target][1]) for e in graphs)
        rep["oracle"] = {"pi_answer": answer, "target_present": present, "agrees": answer == present}
        if answer != present:
            rep["exit_code"] = EXIT_MISMATCH
            rep["error"] = "reduction does not preserve the answer"
    return rep


# --------------------------------------------------------------------------
# verify
# --------------------------------------------------------------------------


def cmd_verify(args) -> dict:
    from .verify import run_suites, write_report

    results = run_suites(args.suites or ["all"], seed=args.seed, jobs=args.jobs)
    for r in results:
        print(r.line(), file=sys.stderr)
    rep = _report("verify", seed=args.seed, jobs=args.jobs)
    rep["suites"] = [r.to_dict() for r in results]
    rep["timings"] = {f"criterion{r.criterion}": r.elapsed for r in results}
    ok = all(r.passed or not r.gating for r in results)
    rep["verdict"] = "pass" if ok else "fail"
    rep["exit_code"] = EXIT_OK if ok else EXIT_FAILED
    if args.report_dir:
        rep["files"] = [str(p) for p in write_report(results, args.report_dir, plots=not args.no_plots)]
    return rep


# --------------------------------------------------------------------------
# plumbing
# --------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    from .verify import DEFAULT_SEED, SUITES

    p = argparse.ArgumentParser(prog="contractile", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "text"), default="json")
    common.add_argument("--oracle", action="store_true", help="cross-check against the exhaustive oracle")
    common.add_argument("--seed", type=int, default=DEFAULT_SEED)
    common.add_argument("--jobs", type=int, default=1)
    chk = common.add_mutually_exclusive_group()
    chk.add_argument("--checked", dest="checked", action="store_true", default=None, help="verify preconditions first")
    chk.add_argument("--unchecked", dest="checked", action="store_false", help="skip precondition checks")
    common.add_argument("--literal", action="store_true", help="run the procedure exactly as first described (no symmetry pruning or corrections)")

    sub = p.add_subparsers(dest="command", required=True)
    d = sub.add_parser("detect", parents=[common], help="run one detector")
    d.add_argument("kind", choices=DETECT_KINDS)
    d.add_argument("input", help="graph6 or edge-list file, '-' for stdin")
    d.set_defaults(func=cmd_detect)

    r = sub.add_parser("recognize", parents=[common], help="membership in class A or A'")
    r.add_argument("cls", metavar="class", help="A or A' (also a-prime)")
    r.add_argument("input")
    r.set_defaults(func=cmd_recognize)

    c = sub.add_parser("color", parents=[common], help="colour a member of class A")
    c.add_argument("input")
    c.set_defaults(func=cmd_color)

    red = sub.add_parser("reduce", parents=[common], help="build reduction graphs")
    red.add_argument("target", choices=REDUCE_TARGETS)
    red.add_argument("input", help="DIMACS CNF, or a graph file for a Pi instance")
    red.add_argument("--a", type=int, help="first terminal of the Pi instance")
    red.add_argument("--b", type=int, help="second terminal of the Pi instance")
    red.add_argument("--out", help="directory for <label>.g6 and <label>.names.json")
    red.set_defaults(func=cmd_reduce)

    v = sub.add_parser("verify", parents=[common], help="run acceptance suites")
    v.add_argument("suites", nargs="*", help=f"any of {', '.join(SUITES)} or 'all' (default)")
    v.add_argument("--report-dir", help="write CSV, JSON and PNG figures here")
    v.add_argument("--no-plots", action="store_true")
    v.set_defaults(func=cmd_verify)
    return p


def _text_line(rep: dict) -> str:
    parts = [rep["command"], str(rep.get("kind") or rep.get("class") or rep.get("target") or ""), str(rep["verdict"])]
    w = rep.get("witness")
    if w:
        parts.append(w["kind"])
        if "lengths" in w:
            parts.append("lengths=" + ",".join(map(str, w["lengths"])))
    if rep.get("coloring"):
        parts.append(f"palette={rep['coloring']['palette']}")
    if rep.get("error"):
        parts.append(f"error: {rep['error']}")
    return " ".join(p for p in parts if p)


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        rep = args.func(args)
    except PreconditionError as exc:
        cert = exc.certificate
        rep = _report(args.command, verdict="precondition-failed", error=str(exc), exit_code=EXIT_PRECONDITION,
                      witness=None if cert is None else cert.to_dict())
    except BudgetExceeded as exc:
        rep = _report(args.command, verdict="budget-exceeded", error=str(exc), exit_code=EXIT_BUDGET)
    except (GraphParseError, GraphUsageError, ValueError) as exc:
        rep = _report(args.command, verdict="input-error", error=str(exc), exit_code=EXIT_INPUT)
    except (InvariantViolation, ContractileError) as exc:
        rep = _report(args.command, verdict="internal-error", error=str(exc), exit_code=EXIT_MISMATCH)
    if rep["input"] is None:
        rep["input"] = getattr(args, "input_block", None)
    if args.format == "text":
        print(_text_line(rep))
    else:
        print(json.dumps(rep, indent=2, sort_keys=False))
    return rep["exit_code"]


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
