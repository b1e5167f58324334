import json
import os
import subprocess

import pytest

CLI = os.environ.get("NCSING_CLI")
pytestmark = pytest.mark.skipif(not CLI, reason="NCSING_CLI not set")

THETA = {
    "vertices": [{"halfEdges": [0, 1, 2]}, {"halfEdges": [3, 4, 5]}],
    "edges": [
        {"kind": "compact", "ends": [0, 3]},
        {"kind": "compact", "ends": [1, 5]},
        {"kind": "compact", "ends": [2, 4]},
    ],
}


def run(*args, stdin=None):
    return subprocess.run([CLI, *args], input=stdin, capture_output=True, text=True)


def write(tmp_path, name, obj):
    path = tmp_path / name
    path.write_text(obj if isinstance(obj, str) else json.dumps(obj))
    return str(path)


def test_validate_exit_codes(tmp_path):
    assert run("validate", write(tmp_path, "theta.json", THETA)).returncode == 0
    bad = {"vertices": [{"halfEdges": [0, 1]}], "edges": [{"kind": "leg", "end": 0}, {"kind": "leg", "end": 1}]}
    res = run("validate", write(tmp_path, "bad.json", bad))
    assert res.returncode == 1
    assert "not trivalent" in json.loads(res.stdout)["result"]["violations"][0]
    assert run("validate", write(tmp_path, "junk.json", "{nope")).returncode == 2
    assert run("validate", str(tmp_path / "missing.json")).returncode == 2
    assert run("validate", "-", stdin=json.dumps({"rays": [[1, 0, 0]], "cones": []})).returncode == 0


def test_analyze_theta_all(tmp_path):
    res = run("analyze", write(tmp_path, "theta.json", THETA), "--all")
    assert res.returncode == 0
    report = json.loads(res.stdout)
    assert sorted(report) == ["command", "diagnostics", "inputDigest", "result"]
    assert report["result"]["surface"]["genus"] == 2
    assert report["result"]["h1"] == {"free": 4, "torsion": [2]}
    assert report["result"]["twoPeriodic"] is True


def test_reports_are_deterministic(tmp_path):
    path = write(tmp_path, "theta.json", THETA)
    assert run("analyze", path, "--all").stdout == run("analyze", path, "--all").stdout
    out = tmp_path / "report.json"
    assert run("analyze", path, "--output", str(out)).returncode == 0
    assert out.read_text() == run("analyze", path).stdout


def test_toric_extract_examples():
    quartic = json.loads(run("toric", "extract", "--example", "quartic-mirror").stdout)["result"]
    edges = quartic["graph"]["edges"]
    assert len(quartic["graph"]["vertices"]) == 64 and len(edges) == 96
    assert sum(e.get("twist") == 1 for e in edges) == 24
    p3 = json.loads(run("toric", "extract", "--example", "p3").stdout)["result"]["graph"]
    assert [e["twist"] for e in p3["edges"]] == [4] * 6
    conifold = json.loads(run("toric", "extract", "--example", "conifold").stdout)["result"]["graph"]
    assert [e["twist"] for e in conifold["edges"] if e["kind"] == "compact"] == [0]
    singular = json.dumps({"rays": [[1, 0, 0], [0, 1, 0], [1, 1, 2]], "cones": [[0, 1, 2]]})
    res = run("toric", "extract", "-", stdin=singular)
    assert res.returncode == 1 and "non-unimodular" in res.stdout


def test_extract_output_feeds_analyze(tmp_path):
    fan = run("toric", "quartic-mirror").stdout
    report = run("toric", "extract", "-", stdin=fan).stdout
    res = run("analyze", write(tmp_path, "quartic.json", report), "--pencil")
    assert res.returncode == 0
    curve = json.loads(res.stdout)["result"]["nodalCurve"]
    assert [c["genus"] for c in curve["components"]] == [3, 3, 3, 3]
    assert curve["nodes"] == 24


def test_negative_defect_pencil(tmp_path):
    graph = json.loads(json.dumps(THETA))
    graph["edges"][0]["twist"] = -1
    graph["edges"][2]["twist"] = 1
    res = run("analyze", write(tmp_path, "neg.json", graph), "--pencil")
    assert res.returncode == 1
    assert "NegativeDefect" in res.stderr
    assert any("NegativeDefect" in d for d in json.loads(res.stdout)["diagnostics"])


def test_non_orientable_descent(tmp_path):
    graph = json.loads(json.dumps(THETA))
    graph["edges"][1]["reversing"] = True
    res = run("analyze", write(tmp_path, "twisted.json", graph), "--descent", "--surface")
    assert res.returncode == 1
    report = json.loads(res.stdout)
    assert report["result"]["surface"]["orientable"] is False
    assert any("NonOrientable" in d for d in report["diagnostics"])
