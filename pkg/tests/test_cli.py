import json
import subprocess
import sys

import pytest

from superschur.cli import main
from superschur.superalgebra import SuperPolynomial, parse_polynomial
from superschur.bases import schur


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out.strip(), err.strip()


def test_schur(capsys):
    assert run(capsys, "schur", "I", "0;3") == (0, "-1 t4 | 1 t1*x3 | 1 t1*x1*x2 | 1/6 t1*x1^3", "")
    assert run(capsys, "schur", "I", ";")[1] == "1"
    code, out, _ = run(capsys, "schur", "Istar", "2;1", "--check")
    assert code == 0 and out.endswith("check: PASS")
    assert parse_polynomial(out.splitlines()[0]) == schur("Istar", "2;1")


def test_schur_json_round_trips(capsys):
    code, out, _ = run(capsys, "schur", "II", "1;2", "--format", "json")
    data = json.loads(out)
    assert SuperPolynomial.from_json(data["terms"]) == schur("II", "1;2")


def test_apply(capsys):
    assert run(capsys, "apply", "B3^1", "--on", "I:0;3")[1] == "(3,0;3): 1"
    assert run(capsys, "apply", "de0", "--on", "I:;3")[1] == "0"
    assert run(capsys, "apply", "C2^0 C1^1", "--type", "Istar")[1] == "(1;2): 1"


@pytest.mark.slow
def test_apply_long_string(capsys):
    assert run(capsys, "apply", "B4^1 B3^0 B2^0 B2^0 B1^1")[1] == "(4,1;3,2,2): 1"


def test_apply_errors(capsys):
    code, _, err = run(capsys, "apply", "Q3")
    assert code == 2 and "unknown operator" in err
    code, _, err = run(capsys, "apply", "B3^1", "--on", "I:0;3", "--max", "4")
    assert code == 2 and "bidegree" in err


def test_parse_error_exit_code(capsys):
    code, _, err = run(capsys, "schur", "I", "1,x;2")
    assert code == 2 and "position 2" in err


def test_pieri(capsys):
    code, out, _ = run(capsys, "pieri", "thetaI", "4", "0;3", "--check")
    lines = out.splitlines()
    assert code == 0 and len(lines) == 7 and lines[-1] == "oracle: PASS"
    assert all(line.endswith(": 1") for line in lines[:6])
    assert len(run(capsys, "pieri", "eIstar", "2", "2;1")[1].splitlines()) == 4
    assert run(capsys, "pieri", "eI", "0", "1;2")[1] == "(1;2): 1"
    code, out, _ = run(capsys, "pieri", "eIstar", "2", "2;1", "--diagrams")
    assert "[+]" in out and "(!)" in out
    assert run(capsys, "pieri", "bogus", "1", ";")[0] == 2


def test_verify(capsys):
    code, out, _ = run(capsys, "verify", "orthogonality", "--max", "0", "--format", "json")
    report = json.loads(out)
    assert code == 0 and report["passed"]
    assert all(c["passed"] for c in report["suites"][0]["checks"])
    code, out, _ = run(capsys, "verify", "table1", "--max", "3")
    assert code == 0 and out.startswith("table1: PASS")


def test_verify_failure_exit_code(capsys):
    code, out, _ = run(capsys, "verify", "dualities", "--max", "3")
    assert code == 1
    assert "FAIL s*_L = omega(sbar_L')  first counterexample: (1,0;)" in out


def test_small_commands(capsys):
    assert run(capsys, "conjugate", "8,6,3,2,0;5,3")[1] == "(6,5,3,1,0;6,3,2,1)"
    assert run(capsys, "weight", "1,0;2,2")[1] == "-1/2"
    assert run(capsys, "enumerate", "3", "1")[1].splitlines() == [
        "(0;1,1,1)", "(1;1,1)", "(0;2,1)", "(1;2)", "(2;1)", "(0;3)", "(3;)"]


def test_output_is_deterministic():
    cmd = [sys.executable, "-m", "superschur", "pieri", "thetaI", "4", "0;3", "--format", "json"]
    first = subprocess.run(cmd, capture_output=True, text=True, check=True).stdout
    second = subprocess.run(cmd, capture_output=True, text=True, check=True).stdout
    assert first == second


def test_disk_cache(tmp_path, monkeypatch, capsys):
    monkeypatch.setenv("SUPERSCHUR_CACHE_DIR", str(tmp_path))
    assert run(capsys, "apply", "B1^1", "--on", "I:0;1")[1] == "(1,0;1): 1"
    files = sorted(p.name for p in tmp_path.iterdir())
    assert "Istar-2-2.json" in files
    assert not any(name.endswith(".tmp") for name in files)
    assert run(capsys, "apply", "B1^1", "--on", "I:0;1")[1] == "(1,0;1): 1"
