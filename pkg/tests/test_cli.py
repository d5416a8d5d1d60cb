"""End-to-end tests for the command-line interface."""

import json

import pytest
from click.testing import CliRunner

from forge.cli import cli


@pytest.fixture
def runner():
    return CliRunner()


def invoke(runner, args):
    return runner.invoke(cli, args, catch_exceptions=False)


def test_build_chessboard(runner, tmp_path):
    out = tmp_path / "k.json"
    res = invoke(runner, ["build", "chessboard", "--params", "3,4", "--out", str(out)])
    assert res.exit_code == 0
    data = json.loads(out.read_text())
    assert len(data["facets"]) == 24


def test_build_bier_from_file(runner, tmp_path):
    kfile = tmp_path / "k.json"
    # the 1-skeleton of the 3-simplex

    kfile.write_text(json.dumps({
        "ground_set": [0, 1, 2, 3],
        "facets": [[0, 1], [0, 2], [0, 3], [1, 2], [1, 3], [2, 3]],
    }))
    out = tmp_path / "bier.json"
    res = invoke(runner, ["build", "bier", "--input", str(kfile), "--out", str(out)])
    assert res.exit_code == 0
    data = json.loads(out.read_text())
    assert len(data["ground_set"]) == 8
    assert len(data["facets"]) == 12


def test_homology_command(runner, tmp_path):
    kfile = tmp_path / "k.json"
    invoke(runner, ["build", "chessboard", "--params", "3,4", "--out", str(kfile)])
    res = invoke(runner, ["homology", "--complex", str(kfile)])
    assert res.exit_code == 0
    data = json.loads(res.output)
    assert data["betti"] == [0, 2, 1]


def test_config_space_morse_certify_chain(runner, tmp_path):
    cs_file = tmp_path / "cs.json"
    field_file = tmp_path / "field.json"
    res = invoke(runner, ["config-space", "--r", "2", "--d", "2", "--out", str(cs_file)])
    assert res.exit_code == 0
    res = invoke(runner, ["morse", "--space", str(cs_file), "--out", str(field_file)])
    assert res.exit_code == 0
    res = invoke(runner, ["certify", "--space", str(cs_file), "--field", str(field_file)])
    assert res.exit_code == 0
    verdict = json.loads(res.output)
    assert verdict["valid"] and verdict["acyclic"]
    assert verdict["certificate"]["connectivity"] == 2
    assert verdict["lexicographic_violations"] == 0


def test_certify_rejects_corrupted_field(runner, tmp_path):
    cs_file = tmp_path / "cs.json"
    field_file = tmp_path / "field.json"
    invoke(runner, ["config-space", "--r", "2", "--d", "2", "--out", str(cs_file)])
    invoke(runner, ["morse", "--space", str(cs_file), "--out", str(field_file)])
    data = json.loads(field_file.read_text())
    # corrupt one pair so that the lower face is not a facet of the upper
    lo, hi = data["pairs"][0]
    data["pairs"][0] = [lo, lo]
    field_file.write_text(json.dumps(data))
    res = runner.invoke(cli, ["certify", "--space", str(cs_file), "--field", str(field_file)])
    assert res.exit_code == 1


def test_pipeline_verdict_and_exit_code(runner, tmp_path):
    man = tmp_path / "man.json"
    res = invoke(runner, ["pipeline", "--r", "2", "--d", "2", "--out", str(man)])
    assert res.exit_code == 0
    verdicts = json.loads(man.read_text())["verdicts"]
    assert verdicts["connectivity_certified"]
    assert verdicts["homology_agrees"]


def test_pipeline_rejects_bad_r(runner):
    res = runner.invoke(cli, ["pipeline", "--r", "6", "--d", "2"])
    assert res.exit_code != 0


def test_pipeline_reproducible_output(runner, tmp_path):
    a = tmp_path / "a.json"
    b = tmp_path / "b.json"
    invoke(runner, ["pipeline", "--r", "2", "--d", "2", "--out", str(a)])
    invoke(runner, ["pipeline", "--r", "2", "--d", "2", "--out", str(b)])
    assert a.read_text() == b.read_text()


def test_random_config_and_verify(runner, tmp_path):
    pts = tmp_path / "pts.json"
    res = invoke(runner, [
        "random-config", "--seed", "5", "--n", "7", "--d", "2",
        "--colors", "2,2,2,1", "--out", str(pts),
    ])
    assert res.exit_code == 0
    res = invoke(runner, ["verify", "seven-point", "--config", str(pts)])
    assert res.exit_code == 0
    data = json.loads(res.output)
    assert data["witness"] is not None


def test_verify_reports_exhaustion_with_exit_1(runner, tmp_path):
    pts = tmp_path / "pts.json"
    pts.write_text(json.dumps({
        "d": 2,
        "points": [["0/1", "0/1"], ["10/1", "0/1"], ["0/1", "10/1"]],
        "colors": None,
    }))
    res = runner.invoke(cli, ["verify", "tverberg", "--config", str(pts), "--r", "2"])
    assert res.exit_code == 1
    data = json.loads(res.output)
    assert data["witness"] is None
    assert data["exhaustion"]["candidates_checked"] > 0


def test_equivariant_scan(runner, tmp_path):
    out = tmp_path / "scan.json"
    res = invoke(runner, ["equivariant-scan", "--out", str(out)])
    assert res.exit_code == 0
    data = json.loads(out.read_text())
    assert len(data["maps"]) == 16
    assert data["parity_congruence"]


def test_report_renders_manifest(runner, tmp_path):
    man = tmp_path / "man.json"
    invoke(runner, ["pipeline", "--r", "2", "--d", "2", "--out", str(man)])
    res = invoke(runner, ["report", "--manifest", str(man)])
    assert res.exit_code == 0
    assert "connectivity 2 certified" in res.output
    assert "perfect matching" in res.output


def test_build_random_config_seed_stability(runner):
    a = invoke(runner, ["random-config", "--seed", "9", "--n", "5", "--d", "2"])
    b = invoke(runner, ["random-config", "--seed", "9", "--n", "5", "--d", "2"])
    assert a.output == b.output


def test_main_exit_codes(tmp_path):
    import subprocess
    import sys

    # input error: missing file
    proc = subprocess.run(
        [sys.executable, "-m", "forge.cli", "homology", "--complex", "/nonexistent.json"],
        capture_output=True,
    )
    assert proc.returncode == 2
    # input error: bad r
    proc = subprocess.run(
        [sys.executable, "-m", "forge.cli", "pipeline", "--r", "6", "--d", "2"],
        capture_output=True,
    )
    assert proc.returncode == 2
