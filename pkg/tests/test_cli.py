import json
import subprocess
import sys

BASE = [sys.executable, "-m", "spcthecke.cli"]


def run_cli(*args):
    return subprocess.run(BASE + list(args), capture_output=True, text=True)


def test_enumerate_spct():
    res = run_cli("enumerate", "spct", "--shape", "2,1", "--sigma", "2,1")
    assert res.returncode == 0
    assert json.loads(res.stdout) == [[[3, 2], [1]], [[3, 1], [2]]]


def test_enumerate_incompatible_is_empty_but_ok():
    res = run_cli("enumerate", "spct", "--shape", "1,2", "--sigma", "2,1")
    assert res.returncode == 0
    assert json.loads(res.stdout) == []


def test_enumerate_srt():
    res = run_cli("enumerate", "srt", "--shape", "2,2")
    assert res.returncode == 0
    assert len(json.loads(res.stdout)) == 5


def test_char_qs_json():
    res = run_cli("char", "--shape", "2,1", "--sigma", "2,1", "--basis", "QS", "--json")
    assert res.returncode == 0
    payload = json.loads(res.stdout)
    assert payload["basis"] == "QS"
    assert sorted(tuple(t["composition"]) for t in payload["terms"]) == [(1, 2), (2, 1)]
    assert all(t["coeff"] == 1 for t in payload["terms"])


def test_graph_dot():
    res = run_cli("graph", "--shape", "2,1", "--sigma", "2,1")
    assert res.returncode == 0
    assert res.stdout.startswith("digraph")
    assert 'label="1"' in res.stdout


def test_verify_pass_and_report(tmp_path):
    out = tmp_path / "report.json"
    res = run_cli("verify", "prop-3.4", "--max-n", "4", "--out", str(out))
    assert res.returncode == 0
    report = json.loads(out.read_text())
    assert report["status"] == "pass" and report["claim"] == "prop-3.4"


def test_verify_with_jobs():
    res = run_cli("verify", "lem-2.7", "--max-n", "4", "--jobs", "2")
    assert res.returncode == 0
    assert json.loads(res.stdout)["status"] == "pass"


def test_verify_list():
    res = run_cli("verify", "--list")
    assert res.returncode == 0
    assert "prop-3.4" in res.stdout and "cor-5.6" in res.stdout


def test_unknown_claim_is_usage_error():
    res = run_cli("verify", "no-such-claim")
    assert res.returncode == 2


def test_bound_exceeded_is_usage_error():
    res = run_cli("enumerate", "spct", "--shape", "2,2,2,2", "--sigma", "1,2,3,4", "--bound", "6")
    assert res.returncode == 2
    assert "exceeds" in res.stderr


def test_malformed_shape_is_usage_error():
    res = run_cli("char", "--shape", "2,x", "--sigma", "1")
    assert res.returncode == 2


def test_basis_cert():
    res = run_cli("basis-cert", "--n", "4")
    assert res.returncode == 0
    report = json.loads(res.stdout)
    assert report["ok"] and report["det"] in (1, -1)


def test_determinism_across_runs():
    a = run_cli("verify", "thm-4.8", "--max-n", "4")
    b = run_cli("verify", "thm-4.8", "--max-n", "4", "--jobs", "2")
    assert a.stdout == b.stdout
