from __future__ import annotations

import json
import subprocess
import sys

import pytest

from yamabe_cert.cli import RunConfig, UsageError, cmd_certify, cmd_sweep_corollary, main, parse_range, resolve_precision
from yamabe_cert.report import CERTIFIED, LemmaReport


def test_parse_range():
    assert parse_range("3..15") == (3, 15)
    assert parse_range("7") == (7, 7)
    with pytest.raises(UsageError):
        parse_range("9..3")
    with pytest.raises(UsageError):
        parse_range("a..b")


def test_precision_resolution(monkeypatch):
    monkeypatch.delenv("YC_PRECISION", raising=False)
    assert resolve_precision(None) == 60
    assert resolve_precision(45) == 45
    monkeypatch.setenv("YC_PRECISION", "80")
    assert resolve_precision(45) == 80
    monkeypatch.setenv("YC_PRECISION", "20")
    with pytest.raises(UsageError):
        resolve_precision(None)


def test_run_config_invariants():
    with pytest.raises(UsageError):
        RunConfig(2, 5)
    with pytest.raises(UsageError):
        RunConfig(3, 5, n_exhaustive_max=11)
    with pytest.raises(UsageError):
        RunConfig(3, 5, precision=20)
    with pytest.raises(UsageError):
        RunConfig(3, 5, n_exhaustive_max=100, n_tail=50)


def test_certify_single_point(capsys, tmp_path):
    assert main(["certify", "--omega", "3", "--n-max", "12", "--out", str(tmp_path), "--format", "both"]) == 0
    out = capsys.readouterr().out
    assert "verdict: CERTIFIED" in out
    md = (tmp_path / "certify.md").read_text()
    assert "| omega | n range |" in md and "| 3 | 12..12 |" in md
    assert main(["verify", str(tmp_path / "certify.json")]) == 0


def test_usage_errors(capsys):
    assert main(["certify", "--omega", "2"]) == 3
    assert main(["certify", "--omega", "3", "--precision", "10"]) == 3
    assert main(["falsify", "--omega", "16", "--n", "60..50"]) == 3
    assert main(["falsify", "--omega", "16", "--n", "20..50"]) == 3
    assert main(["window", "--omega", "5", "--n", "10"]) == 3
    assert main(["nonsense"]) == 3
    assert main(["threshold", "--n", "2"]) == 3


def test_falsify_exit_codes(capsys, tmp_path):
    assert main(["falsify", "--omega", "3", "--n", "12..100"]) == 0
    assert "none found" in capsys.readouterr().out
    assert main(["falsify", "--omega", "16", "--n", "1850..1900", "--out", str(tmp_path)]) == 1
    out = capsys.readouterr().out
    assert "n=1859" in out and "x_7" in out and "y_1" in out
    rep = LemmaReport.load(tmp_path / "falsify.json")
    assert rep.falsified == (16, 1859)
    assert main(["verify", str(tmp_path / "falsify.json")]) == 1


def test_window_and_threshold(capsys):
    assert main(["window", "--omega", "3", "--n", "12"]) == 0
    assert "5/1408" in capsys.readouterr().out
    assert main(["threshold", "--n", "3", "--m", "1"]) == 0
    assert capsys.readouterr().out.startswith("43.823232716")


def test_verify_detects_tampering(tmp_path, capsys):
    assert main(["certify", "--omega", "4", "--n-max", "30", "--out", str(tmp_path)]) == 0
    data = json.loads((tmp_path / "certify.json").read_text())
    cert = next(c for c in data["certificates"] if c["witness"].get("kind") == "window-witnesses")
    cert["witness"]["points"][3][1] = "1"
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps(data))
    assert main(["verify", str(bad)]) == 2
    assert main(["verify", str(tmp_path / "missing.json")]) == 3


def test_determinism_and_parallel():
    serial = cmd_certify(RunConfig(3, 6, n_exhaustive_max=60, n_tail=60))
    again = cmd_certify(RunConfig(3, 6, n_exhaustive_max=60, n_tail=60))
    parallel = cmd_certify(RunConfig(3, 6, n_exhaustive_max=60, n_tail=60, threads=3))
    assert serial.verdict == parallel.verdict == CERTIFIED
    assert serial.witnesses == parallel.witnesses
    assert serial.dumps(timing=False) == again.dumps(timing=False) == parallel.dumps(timing=False)


def test_corollary_sweep():
    rep = cmd_sweep_corollary()
    assert rep.verdict == CERTIFIED
    records = {r["n"]: r for r in rep.config["records"]}
    assert sorted(records) == list(range(3, 38))
    assert records[11]["omega_in_scope"] == [] and "deferred entirely" in records[11]["deferred"][0]
    assert records[12]["certified"] == [3]
    assert records[37]["certified"] == list(range(3, 16))
    assert rep.config["max_omega_in_scope"] == 15


def test_identities_command(capsys):
    assert main(["identities", "--a-max", "12", "--omega", "3..5", "--n-max", "30"]) == 0
    out = capsys.readouterr().out
    assert "recurrences a<=12: PASS" in out and "printed residual" in out


def test_console_entry_point():
    proc = subprocess.run([sys.executable, "-m", "yamabe_cert.cli", "certify", "--omega", "2"], capture_output=True, text=True)
    assert proc.returncode == 3
