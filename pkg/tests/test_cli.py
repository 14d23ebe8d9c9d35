from __future__ import annotations

import io
import json

import pytest

from contractile.cli import EXIT_CODES, main
from contractile.graph import cycle_graph, encode_graph6, even_prism9, parse_graph, prism6
from contractile.structures import witness_from_dict


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def run_json(capsys, *argv):
    code, out = run(capsys, *argv)
    rep = json.loads(out)
    assert rep["schema"] == "contractile.report/1" and rep["exit_code"] == code
    return code, rep


@pytest.fixture
def g6file(tmp_path):
    def write(g, name="g.g6"):
        p = tmp_path / name
        p.write_text(encode_graph6(g) + "\n")
        return str(p)

    return write


def test_detect_found_and_witness_round_trip(capsys, g6file):
    g = even_prism9()
    code, rep = run_json(capsys, "detect", "even-prism", g6file(g), "--oracle")
    assert code == 10 and rep["verdict"] == "found" and rep["oracle"]["agrees"]
    assert rep["input"]["order"] == 9 and len(rep["input"]["sha256"]) == 64
    w = witness_from_dict(rep["witness"])
    assert w.validate(g) and sorted(rep["witness"]["lengths"]) == [2, 2, 2]


def test_detect_not_found(capsys, g6file):
    code, rep = run_json(capsys, "detect", "pyramid-or-prism", g6file(cycle_graph(7)))
    assert code == 11 and rep["witness"] is None


def test_detect_precondition(capsys, g6file):
    code, rep = run_json(capsys, "detect", "even-prism", g6file(cycle_graph(5)), "--checked")
    assert code == 3 and rep["verdict"] == "precondition-failed"
    assert rep["input"]["order"] == 5


def test_stdin_and_text_format(capsys, monkeypatch):
    monkeypatch.setattr("sys.stdin", io.StringIO(encode_graph6(prism6()) + "\n"))
    code, out = run(capsys, "detect", "pyramid-or-prism", "-", "--format", "text")
    assert code == 10 and out.startswith("detect pyramid-or-prism found prism")


def test_input_errors(capsys, tmp_path):
    code, rep = run_json(capsys, "detect", "long-hole", str(tmp_path / "missing.g6"))
    assert code == 2 and rep["verdict"] == "input-error"
    bad = tmp_path / "bad.g6"
    bad.write_text("not a graph !!\n")
    assert run_json(capsys, "recognize", "A", str(bad))[0] == 2
    assert run_json(capsys, "recognize", "B", str(bad))[0] == 2


def test_recognize(capsys, g6file):
    path = g6file(even_prism9())
    code, rep = run_json(capsys, "recognize", "A", path, "--oracle")
    assert code == 0 and rep["verdict"] == "non-member" and rep["certificate_kind"] == "prism"
    assert rep["oracle"]["agrees"]
    code, rep = run_json(capsys, "recognize", "A'", path)
    assert rep["verdict"] == "member" and rep["witness"] is None


def test_color(capsys, g6file):
    code, rep = run_json(capsys, "color", g6file(cycle_graph(6)), "--oracle")
    assert code == 0 and rep["coloring"]["palette"] == 2 and rep["oracle"]["agrees"]
    assert run_json(capsys, "color", g6file(cycle_graph(5)))[0] == 3


def test_reduce_from_dimacs(capsys, tmp_path):
    cnf = tmp_path / "f.cnf"
    cnf.write_text("p cnf 3 1\n1 2 3 0\n")
    code, rep = run_json(capsys, "reduce", "pi", str(cnf))
    assert code == 0 and rep["graphs"][0]["edges"] == 51 and rep["input"]["format"] == "dimacs"
    code, rep = run_json(capsys, "reduce", "lgbsk4", str(cnf))
    assert [e["label"] for e in rep["graphs"]] == ["G''_00", "G''_01", "G''_10", "G''_11"]


def test_reduce_graph_instance_writes_files(capsys, g6file, tmp_path):
    out = tmp_path / "out"
    code, rep = run_json(capsys, "reduce", "prism", g6file(cycle_graph(6)), "--out", str(out), "--oracle")
    assert code == 0 and rep["input"]["a"] == 0 and rep["input"]["b"] == 2
    assert rep["oracle"]["agrees"]
    g = parse_graph((out / "Gp.g6").read_text())
    assert g.order == 14
    assert set(json.loads((out / "Gp.names.json").read_text())) >= {"a1", "b5", "g1"}


def test_reduce_bad_terminals(capsys, g6file):
    assert run_json(capsys, "reduce", "prism", g6file(cycle_graph(6)), "--a", "0", "--b", "1")[0] == 2
    assert run_json(capsys, "reduce", "pi", g6file(cycle_graph(6)))[0] == 2


def test_verify_writes_report(capsys, tmp_path):
    code, rep = run_json(capsys, "verify", "odd-prism", "reductions", "--report-dir", str(tmp_path), "--no-plots")
    assert code == 0 and rep["verdict"] == "pass"
    assert [s["criterion"] for s in rep["suites"]] == [5, 8]
    assert (tmp_path / "summary.csv").exists() and (tmp_path / "criterion8.csv").exists()


def test_exit_code_table():
    assert set(EXIT_CODES) == {0, 1, 2, 3, 4, 5, 10, 11}
