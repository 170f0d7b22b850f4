"""Tests for the command-line entry point."""

import json

import numpy as np
import pytest

from siclie.cli import main
from siclie.config import get_settings
from siclie.sic import load_fiducial, load_sic_set, validate_sic
from siclie.tensors import save_theta3


@pytest.fixture(autouse=True)
def isolated_settings(monkeypatch):
    for name in ("SIC_DATA_DIR", "SIC_TOL", "SIC_FILE_TOL", "SIC_WORKERS", "SIC_LOG_LEVEL"):
        monkeypatch.delenv(name, raising=False)
    monkeypatch.setattr("siclie.config.settings.load_dotenv", lambda: None)
    get_settings.cache_clear()
    yield
    get_settings.cache_clear()


@pytest.mark.parametrize("d", [2, 3])
def test_verify_bundled(tmp_path, capsys, d):
    out = tmp_path / "report.json"
    assert main(["verify", "--dim", str(d), "--out", str(out)]) == 0
    data = json.loads(out.read_text())
    assert data["metadata"]["d"] == d
    assert len(data["checks"]) >= 25
    assert "0 failed" in capsys.readouterr().out


def test_verify_selected_checks(tmp_path):
    out = tmp_path / "report.json"
    assert main(["verify", "--dim", "2", "--checks", "sic,hs", "--out", str(out)]) == 0
    names = {c["name"] for c in json.loads(out.read_text())["checks"]}
    assert "sic.overlaps" in names
    assert not any(name.startswith("geometry.") for name in names)


def test_verify_unknown_group():
    assert main(["verify", "--dim", "2", "--checks", "bogus"]) == 2


def test_verify_corrupt_fiducial(tmp_path):
    path = tmp_path / "bad.txt"
    path.write_text("3\n1 0\n")
    assert main(["verify", "--dim", "3", "--fiducial", str(path)]) == 2


def test_verify_not_a_sic(tmp_path):
    path = tmp_path / "basis.txt"
    path.write_text("2\n1 0\n0 0\n")
    assert main(["verify", "--dim", "2", "--fiducial", str(path)]) == 1


def test_usage_errors():
    assert main([]) == 2
    assert main(["verify"]) == 2
    assert main(["search", "--dim", "1", "--out", "unused.txt"]) == 2


def test_search_deterministic(tmp_path):
    first, second = tmp_path / "a.txt", tmp_path / "b.txt"
    assert main(["search", "--dim", "3", "--seed", "9", "--out", str(first)]) == 0
    assert main(["search", "--dim", "3", "--seed", "9", "--out", str(second)]) == 0
    assert first.read_text() == second.read_text()
    assert load_fiducial(first).d == 3


def test_theta3_reconstruct_round_trip(tmp_path, capsys):
    dump, vectors = tmp_path / "t3.bin", tmp_path / "set.txt"
    assert main(["theta3", "--dim", "3", "--out", str(dump)]) == 0
    assert main(["reconstruct", "--theta3", str(dump), "--out", str(vectors)]) == 0
    assert "tensor match: yes" in capsys.readouterr().out
    assert validate_sic(load_sic_set(vectors)).passed


def test_reconstruct_other_anchor(tmp_path, capsys):
    dump = tmp_path / "t3.bin"
    first, fifth = tmp_path / "a1.txt", tmp_path / "a5.txt"
    assert main(["theta3", "--dim", "3", "--out", str(dump)]) == 0
    assert main(["reconstruct", "--theta3", str(dump), "--out", str(first)]) == 0
    args = ["reconstruct", "--theta3", str(dump), "--anchor", "5", "--out", str(fifth)]
    assert main(args) == 0
    assert capsys.readouterr().out.count("tensor match: yes") == 2


def test_reconstruct_bad_file(tmp_path):
    path = tmp_path / "bad.bin"
    path.write_bytes(b"garbage")
    assert main(["reconstruct", "--theta3", str(path), "--out", str(tmp_path / "x")]) == 2


@pytest.mark.parametrize(
    "argv",
    [
        ["search", "--dim", "3", "--restarts", "0"],
        ["search", "--dim", "3", "--tol", "-1"],
        ["verify", "--dim", "5", "--restarts", "0"],
    ],
    ids=["search-restarts", "search-tol", "verify-restarts"],
)
def test_invalid_numeric_flags(tmp_path, argv):
    out = tmp_path / "out.txt"
    if argv[0] == "search":
        argv = argv + ["--out", str(out)]
    assert main(argv) == 2
    assert not out.exists()


def test_reconstruct_random_theta3(tmp_path, capsys):
    dump = tmp_path / "random.bin"
    rng = np.random.default_rng(11)
    save_theta3(rng.uniform(-np.pi, np.pi, size=(9, 9, 9)), dump)
    assert main(["reconstruct", "--theta3", str(dump), "--out", str(tmp_path / "x")]) == 1
    assert "Consistency condition failed" in capsys.readouterr().out
    assert not (tmp_path / "x").exists()


def test_verify_d2_skips_degenerate_geometry(tmp_path):
    out = tmp_path / "report.json"
    assert main(["verify", "--dim", "2", "--checks", "geometry", "--out", str(out)]) == 0
    checks = {c["name"]: c for c in json.loads(out.read_text())["checks"]}
    inclination = checks["geometry.q.inclination"]
    assert inclination["passed"] is None
    assert inclination["skipped_reason"]
