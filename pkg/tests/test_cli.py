import io
import json
import subprocess
import sys

import pytest

from minbricks.cli import run
from minbricks.families import k4, prism, wheel
from minbricks.graph import parse_graph6, write_graph6


def _run(argv, stdin=""):
    out = io.StringIO()
    code = run(argv, out=out, stdin=io.StringIO(stdin))
    return code, out.getvalue()


def test_family_and_check_pipeline():
    code, g6 = _run(["family", "--kind", "prism"])
    assert code == 0 and parse_graph6(g6.strip()) == prism()
    code, out = _run(["check", "--predicate", "minimal-brick"], g6)
    assert code == 0
    assert json.loads(out) == {"graph6": g6.strip(), "pass": True, "predicate": "minimal-brick"}


def test_family_with_param_and_dash_names():
    assert _run(["family", "--kind", "wheel", "--param", "6"])[1].strip() == write_graph6(wheel(6))
    code, out = _run(["family", "--kind", "planar-ladder", "--param", "3"])
    assert code == 0 and parse_graph6(out.strip()).canonical_key() == prism().canonical_key()


@pytest.mark.parametrize("argv", [
    [],
    ["bogus"],
    ["family", "--kind", "wheel"],
    ["family", "--kind", "wheel", "--param", "2"],
    ["check", "--predicate", "planar"],
    ["generate", "--max-vertices", "7", "--out", "x.g6"],
    ["oracle", "--vertices", "10"],
    ["verify", "--theorem", "k4-prism-minor", "--max-vertices", "2"],
])
def test_usage_errors_exit_2(argv, capsys):
    assert _run(argv)[0] == 2


def test_check_each_predicate():
    lines = "\n".join([write_graph6(k4()), "A_", ""])
    for pred in ("brick", "minimal-brick", "bicritical", "3-connected", "perfect-matching"):
        code, out = _run(["check", "--predicate", pred], lines)
        records = [json.loads(x) for x in out.splitlines()]
        assert code == 0 and len(records) == 2 and records[0]["pass"] is True
    code, out = _run(["check", "--predicate", "perfect-matching"], "A_\n")
    assert json.loads(out)["pass"] is True


def test_minor_answers_and_refusal():
    code, out = _run(["minor", "--pattern", write_graph6(k4()), "--host", write_graph6(prism())])
    assert code == 0 and json.loads(out) == {"answer": False, "refused": False}
    code, out = _run(["minor", "--pattern", "C~", "--host", "C~", "--budget", "3"])
    assert json.loads(out) == {"answer": None, "refused": True}


def test_generate_check_all_pass(tmp_path):
    path = tmp_path / "cat.g6"
    code, out = _run(["generate", "--max-vertices", "8", "--out", str(path)])
    assert code == 0
    assert json.loads(out)["by_vertices"] == {"4": 1, "6": 2, "8": 13}
    code, out = _run(["check", "--predicate", "minimal-brick"], path.read_text())
    assert all(json.loads(x)["pass"] for x in out.splitlines())
    assert len(out.splitlines()) == 16
    code, stats = _run(["stats", "--catalog", str(path)])
    assert code == 0 and json.loads(stats)["min_cubic_count"] >= 3


def test_generate_is_byte_identical(tmp_path):
    a, b = tmp_path / "a.g6", tmp_path / "b.g6"
    _run(["generate", "--max-vertices", "8", "--out", str(a)])
    _run(["generate", "--max-vertices", "8", "--out", str(b), "--threads", "2"])
    assert a.read_bytes() == b.read_bytes()
    assert (tmp_path / "a.jsonl").read_bytes() == (tmp_path / "b.jsonl").read_bytes()


def test_verify_edge_bound_exit_code(tmp_path):
    code, out = _run(["verify", "--theorem", "edge-bound", "--max-vertices", "8"])
    rep = json.loads(out)
    assert code == 0 and rep["pass"] and rep["summary"]["exceptions"] == 4


def test_verify_failure_exits_1(tmp_path):
    # K6 is not minimal and breaks the edge bound, so a catalog holding it fails
    path = tmp_path / "k6.g6"
    path.write_text("E~~w\n")
    code, out = _run(["verify", "--theorem", "edge-bound", "--max-vertices", "6",
                      "--catalog", str(path)])
    assert code == 1 and json.loads(out)["pass"] is False


def test_oracle_lines():
    code, out = _run(["oracle", "--vertices", "6", "--minimal"])
    keys = {parse_graph6(x).canonical_key() for x in out.split()}
    assert code == 0 and keys == {prism().canonical_key(), wheel(6).canonical_key()}


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "minbricks", "family", "--kind", "k4"],
                          capture_output=True, text=True, check=True)
    assert proc.stdout == "C~\n"
