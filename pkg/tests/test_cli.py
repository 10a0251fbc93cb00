import io
import json
import subprocess
import sys

import pytest

from homflypt.cli import run
from homflypt.coeff import parse_rational, delta, RationalFunction, s_diff, V
from homflypt.connectsum import SurgeryPresentation
from homflypt.hecke import BraidWord, evaluate_braid, markov_trace
from homflypt.skeinrw import format_pd, meridian_diagram, closure_of_braid


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


def call_json(*argv):
    code, out, err = call("--json", *argv)
    return code, json.loads(out)


def test_homfly_braid():
    code, doc = call_json("homfly", "--braid", "n=2 s1 s1 s1")
    assert code == 0
    assert doc["schema"] == 1 and doc["ok"] and doc["command"] == "homfly"
    want = markov_trace(evaluate_braid(BraidWord(2, (1, 1, 1))))
    assert parse_rational(doc["value"]) == want


def test_homfly_diagram_file(tmp_path):
    f = tmp_path / "trefoil.pd"
    f.write_text(format_pd(closure_of_braid(BraidWord(2, (1, 1, 1)))))
    code, out, _ = call("homfly", "--diagram", str(f))
    assert code == 0
    assert parse_rational(out.strip()) == markov_trace(evaluate_braid(BraidWord(2, (1, 1, 1))))


def test_trace_unknot():
    code, out, _ = call("trace", "--braid", "n=1")
    assert code == 0
    assert parse_rational(out.strip()) == delta()


def test_idempotent_check():
    code, doc = call_json("idempotent-check", "--n", "3")
    assert code == 0
    assert all(r["pass"] for r in doc["checks"])


def test_eigen_table_and_c_table():
    code, doc = call_json("eigen-table", "--max", "3")
    assert code == 0 and len(doc["rows"]) == 2 * (1 + 2 * 2 + 3 * 3)
    code, doc = call_json("c-table", "--max", "2")
    assert code == 0 and doc["ok"]


def test_rank():
    assert call("rank", "--n", "3")[1].strip() == "6"


def test_reduce(tmp_path):
    d, ring = meridian_diagram((), 2)
    f = tmp_path / "pass.pd"
    f.write_text(SurgeryPresentation(d, (ring,)).to_text())
    code, doc = call_json("reduce", str(f))
    assert code == 0
    assert doc["value"] == "0" and doc["ring"] == "k_2" and doc["verified"]


def test_s5():
    code, doc = call_json("s5")
    assert code == 0
    assert parse_rational(doc["value"]) == RationalFunction(s_diff(), V ** -1 - V)


def test_certify():
    code, doc = call_json("certify", "--ring", "R'", "--value", "(1)/(-1 + s^2)", "--tag", "s2n-1:1")
    assert code == 0 and doc["verified"]
    code, doc = call_json("certify", "--ring", "R", "--value", "(1)/(-1 + v^2)", "--tag", "v4-s2n:0")
    assert code == 1 and not doc["ok"]
    code, doc = call_json("certify", "--ring", "k_r", "--r", "1", "--value", "(1)/(-1 + x - v^-1*s + v^-1*s^-1)",
                          "--tag", "obstruction:1:[1]:[]")
    assert code == 0


def test_obstruction():
    code, out, _ = call("obstruction", "--r", "0", "--lambda", "[1]", "--mu", "[1]")
    assert code == 0
    assert out.strip()


@pytest.mark.parametrize("argv", [
    ["homfly", "--braid", "s1 s1"],
    ["obstruction", "--r", "2", "--lambda", "[1]", "--mu", "[]"],
    ["certify", "--ring", "k_r", "--value", "1"],
    ["certify", "--ring", "R", "--value", "1", "--tag", "bogus"],
    ["rank", "--n", "0"],
    ["reduce", "/nonexistent/file.pd"],
    ["frobnicate"],
])
def test_usage_errors(argv):
    code, _, err = call(*argv)
    assert code == 2


def test_caps(monkeypatch):
    monkeypatch.setenv("HOMFLYPT_MAX_STRANDS", "2")
    code, _, err = call("trace", "--braid", "n=3 s1 s2")
    assert code == 2 and "HOMFLYPT_MAX_STRANDS" in err
    monkeypatch.setenv("HOMFLYPT_MAX_CROSSINGS", "2")
    monkeypatch.setenv("HOMFLYPT_MAX_STRANDS", "6")
    code, _, err = call("homfly", "--braid", "n=2 s1 s1 s1")
    assert code == 2 and "HOMFLYPT_MAX_CROSSINGS" in err


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "homflypt", "rank", "--n", "2"], capture_output=True, text=True)
    assert res.returncode == 0
    assert res.stdout.strip() == "2"
