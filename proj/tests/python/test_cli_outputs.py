"""End-to-end CLI runs validated against the shipped JSON schemas."""

import json
import os
import subprocess
from pathlib import Path

import pytest

jsonschema = pytest.importorskip("jsonschema")

CLI = os.environ.get("XYCHAIN_CLI")
SCHEMAS = Path(__file__).resolve().parents[2] / "schemas"

pytestmark = pytest.mark.skipif(CLI is None, reason="XYCHAIN_CLI not set")


def run(*args):
    return subprocess.run([CLI, *args], capture_output=True, text=True)


def validate(payload, schema_name):
    schema = json.loads((SCHEMAS / schema_name).read_text())
    jsonschema.validate(payload, schema)


def test_times_json(tmp_path):
    out = tmp_path / "times.json"
    res = run("--command", "times", "--lambda", "0", "--lambda", "1.5", "--lambda", "4",
              "--with-threshold", "--format", "json", "--out", str(out))
    assert res.returncode == 0, res.stderr
    payload = json.loads(out.read_text())
    validate(payload, "times.schema.json")
    assert len(payload["rows"]) == 4
    assert payload["rows"][0]["period_over_t0"] == pytest.approx(2.0)


def test_trace_json(tmp_path):
    out = tmp_path / "trace.json"
    res = run("--command", "trace", "--lambda", "1.5", "--axis", "x", "--steps", "51",
              "--t-max", "2", "--format", "json", "--out", str(out))
    assert res.returncode == 0, res.stderr
    payload = json.loads(out.read_text())
    validate(payload, "trace.schema.json")
    assert len(payload["trace"]) == 51


def test_trace_csv_header(tmp_path):
    out = tmp_path / "trace.csv"
    res = run("--command", "trace", "--lambda", "0", "--axis", "z", "--steps", "11",
              "--t-max", "1", "--out", str(out))
    assert res.returncode == 0, res.stderr
    lines = out.read_text().splitlines()
    assert lines[0] == "t,c_source,c_middle,c_target"
    assert len(lines) == 12


def test_compile_outputs(tmp_path):
    res = run("--command", "compile", "--lambda", "1.5", "--sign", "both",
              "--out", str(tmp_path))
    assert res.returncode == 0, res.stderr
    report = json.loads((tmp_path / "compile_report.json").read_text())
    validate(report, "compile_report.schema.json")
    for entry in report["sequences"]:
        assert entry["replay_distance_uc"] < 1e-9
    seq = json.loads((tmp_path / "uc_plus.json").read_text())
    validate(seq, "sequence.schema.json")
    text = (tmp_path / "uc_plus.txt").read_text()
    assert text.startswith("ROT ")


def test_verify_summary(tmp_path):
    out = tmp_path / "verify.json"
    res = run("--command", "verify", "--out", str(out))
    assert res.returncode == 0
    payload = json.loads(out.read_text())
    validate(payload, "verify.schema.json")
    assert payload["pass"] is True


def test_usage_exit_code():
    res = run("--command", "times")  # missing lambdas
    assert res.returncode == 2
    res = run("--bogus-flag")
    assert res.returncode == 2
