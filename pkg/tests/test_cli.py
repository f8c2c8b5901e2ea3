import json
import subprocess
import sys

import pytest

from nckleinian.cli import EXIT_FAIL, EXIT_OK, EXIT_USAGE, main
from nckleinian.dq import params_from_q, pbw_normal_form, parse_expression
from nckleinian.exact import Polynomial
from nckleinian.hc import Distribution
from nckleinian.skew import SkewElement

T4 = "0,0,0,0,1"


def run(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr()


def test_verify_reports_only_the_braid_failure(capsys):
    code, out = run(capsys, "--q", T4, "verify")
    report = json.loads(out.out)
    failed = [r["identity"] for r in report if not r["pass"]]
    assert failed == ["s0 s1 s0 s1 = s1 s0 s1 s0"]
    assert code == EXIT_FAIL
    assert {r["suite"] for r in report} == {"relations", "gwa", "nilhecke", "flag", "invariance"}


def test_verify_passing_suites(capsys):
    code, out = run(capsys, "verify", "--q", T4, "--only", "relations", "--only", "flag",
                    "--only", "gwa")
    assert code == EXIT_OK
    assert all(r["pass"] for r in json.loads(out.out))


def test_verify_only_nilhecke(capsys):
    code, out = run(capsys, "verify", "--only", "nilhecke")
    assert {r["suite"] for r in json.loads(out.out)} == {"nilhecke"}
    assert code == EXIT_FAIL


def test_degree_gate(capsys):
    code, out = run(capsys, "--q", "0,0,0,1", "verify")
    assert code == EXIT_USAGE
    assert "DegreeTooSmall" in out.err


def test_usage_errors(capsys):
    assert run(capsys, "--q", "a,b", "phi", "u")[0] == EXIT_USAGE
    assert run(capsys, "frobnicate")[0] == EXIT_USAGE
    assert run(capsys, "phi", "u")[0] == EXIT_USAGE  # missing --q


def test_phi(capsys):
    code, out = run(capsys, "--q", T4, "phi", "u")
    assert code == EXIT_OK
    assert json.loads(out.out) == {"terms": [{"k": 0, "eps": 0, "num": "0,0,1", "den": "1"}]}
    code, out = run(capsys, "--q", T4, "phi", "u*v - v*u - 2*w - v")
    assert json.loads(out.out) == {"terms": []}
    code, out = run(capsys, "--q", T4, "phi", "u*")
    assert code == EXIT_USAGE and "ExpressionParseError" in out.err


def test_phi_roundtrip(capsys):
    code, out = run(capsys, "--q", "1,1,0,0,1", "phi", "w*v - 3*u")
    elem = SkewElement.from_json(json.loads(out.out))
    assert SkewElement.from_json(elem.to_json()) == elem


def test_nf(capsys):
    code, out = run(capsys, "--q", T4, "nf", "w*w*w")
    data = json.loads(out.out)
    assert code == EXIT_OK
    assert max(t["w"] for t in data["terms"]) <= 1
    expected = pbw_normal_form(parse_expression("w*w*w"), params_from_q(Polynomial([0, 0, 0, 0, 1])))
    assert parse_expression(data["text"]) == expected.to_free()


def test_graph_outputs(capsys, tmp_path):
    target = tmp_path / "g.dot"
    code, _ = run(capsys, "--q", "4,0,-5,0,1", "graph", "--orbit", "0", "--window", "8",
                  "--format", "dot", "--symbolic", "--out", str(target))
    assert code == EXIT_OK
    assert target.read_text(encoding="utf-8").startswith("digraph")
    code, out = run(capsys, "--q", "4,0,-5,0,1", "graph", "--orbit", "1/2", "--window", "8")
    data = json.loads(out.out)
    assert data["orbit_class"] == "half_integral"
    assert any(e["symbol"] == "q(-1/2)" and e["kind"] == "back" for e in data["edges"])


def test_graph_window_gate(capsys):
    code, out = run(capsys, "--q", "4,0,-5,0,1", "graph", "--orbit", "1/3", "--window", "1")
    assert code == EXIT_USAGE
    assert "need at least 5" in out.err


def test_flag(capsys):
    code, out = run(capsys, "--q", T4, "flag", "--max-deg", "10")
    names = [r["identity"] for r in json.loads(out.out) if not r["pass"]]
    assert names == ["s0 s1 s0 s1 = s1 s0 s1 s0"]
    assert code == EXIT_FAIL


def test_act(capsys):
    code, out = run(capsys, "--q", T4, "act", "w", "--point", "1/2")
    data = json.loads(out.out)
    assert code == EXIT_OK and data["agree"]
    d = Distribution.from_json(data["oracle"])
    assert Distribution.from_json(d.to_json()) == d
    code, out = run(capsys, "--q", T4, "act", "v*w", "--point", "2", "--order", "1")
    assert code == EXIT_OK and json.loads(out.out)["oracle"]


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "nckleinian", "--q", T4, "phi", "u"],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["terms"][0]["num"] == "0,0,1"
