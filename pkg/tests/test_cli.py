"""Command line interface: subcommands, formats, exit codes, determinism."""

import json
import subprocess
import sys

import pytest

from suq2.verify import RunConfig, dump_json, report_doc, run_suite

CLI = [sys.executable, "-m", "suq2.cli"]


def run_cli(*args, env_extra=None, check=False):
    import os

    env = dict(os.environ)
    env.pop("SUQ2_T", None)
    if env_extra:
        env.update(env_extra)
    result = subprocess.run(
        CLI + list(args), capture_output=True, text=True, env=env, timeout=300
    )
    if check and result.returncode != 0:
        raise AssertionError(f"cli failed: {result.returncode}\n{result.stderr}")
    return result


def test_rep_emits_valid_json():
    result = run_cli("rep", "--n", "2", check=True)
    doc = json.loads(result.stdout)
    assert doc["kind"] == "rep"
    assert doc["two_n"] == 2
    assert doc["dim"] == 3
    assert doc["weights"] == [2, 0, -2]
    assert len(doc["amplitudes"]) == 2
    assert all(value < 1e-10 for value in doc["residuals"].values())
    assert doc["classified"] == {"two_n": 2, "sign": 1}
    # complex numbers are [re, im] pairs
    assert doc["matrices"]["q"][0][0][1] == 0.0


def test_rep_negative_sign():
    result = run_cli("rep", "--n", "1", "--sign", "-1", check=True)
    doc = json.loads(result.stdout)
    assert doc["classified"]["sign"] == -1
    assert doc["matrices"]["q"][0][0][0] < 0


def test_cg_emits_valid_json():
    result = run_cli("cg", "--n", "1", "--m", "1", check=True)
    doc = json.loads(result.stdout)
    assert doc["kind"] == "cg"
    assert doc["index_set"] == [0, 2]
    assert set(doc["isometries"]) == {"0", "2"}
    assert all(value < 1e-9 for value in doc["residuals"].values())


def test_verify_passes_and_reports(tmp_path):
    out = tmp_path / "report.json"
    result = run_cli("verify", "--suite", "hopf", "--out", str(out), check=True)
    doc = json.loads(out.read_text())
    assert doc["kind"] == "verify"
    assert doc["suite"] == "hopf"
    assert doc["summary"]["failed"] == 0
    assert doc["summary"]["total"] == len(doc["checks"])
    ids = [check["id"] for check in doc["checks"]]
    assert ids == sorted(ids)
    assert all(check["pass"] for check in doc["checks"])
    assert "0 failed" in result.stderr


def test_verify_all_suites_pass():
    result = run_cli("verify", "--suite", "all", "--out", "/dev/null")
    assert result.returncode == 0, result.stderr


def test_verify_exit_code_on_failure(tmp_path):
    # an absurdly tight tolerance forces failures without touching the math
    out = tmp_path / "report.json"
    result = run_cli("verify", "--suite", "hopf", "--tol-abs", "1e-30", "--out", str(out))
    assert result.returncode == 1
    doc = json.loads(out.read_text())
    assert doc["summary"]["failed"] > 0
    assert "FAIL" in result.stderr


def test_tables_round_trip(tmp_path):
    result = run_cli("tables", "--nmax", "2", check=True)
    doc = json.loads(result.stdout)
    assert doc["kind"] == "tables"
    assert set(doc["blocks"]) == {"0", "1", "2"}
    assert abs(doc["blocks"]["0"]["quantum_dimension"] - 1.0) < 1e-14
    assert "dual_antipode" in doc and "dual_haar_quadratic" in doc


def test_json_output_is_deterministic():
    first = run_cli("verify", "--suite", "dual", check=True)
    second = run_cli("verify", "--suite", "dual", check=True)
    assert first.stdout == second.stdout

    rep1 = run_cli("rep", "--n", "3", check=True)
    rep2 = run_cli("rep", "--n", "3", check=True)
    assert rep1.stdout == rep2.stdout


def test_in_process_report_matches_itself():
    config = RunConfig(t=0.3, nmax2=4, seed=0)
    text1 = dump_json(report_doc(run_suite(config, "hopf")))
    text2 = dump_json(report_doc(run_suite(config, "hopf")))
    assert text1 == text2


def test_csv_requires_out():
    result = run_cli("verify", "--suite", "hopf", "--format", "csv")
    assert result.returncode == 2
    assert "--out" in result.stderr


def test_csv_report_shape(tmp_path):
    out = tmp_path / "report.csv"
    run_cli("verify", "--suite", "hopf", "--format", "csv", "--out", str(out), check=True)
    lines = out.read_text().strip().splitlines()
    assert lines[0] == "id,law,residual,tolerance,pass"
    assert len(lines) > 5
    assert all(line.endswith(",true") for line in lines[1:])


def test_csv_rep_is_flat_key_value(tmp_path):
    out = tmp_path / "rep.csv"
    run_cli("rep", "--n", "1", "--format", "csv", "--out", str(out), check=True)
    lines = out.read_text().strip().splitlines()
    assert lines[0] == "key,value"
    keys = [line.split(",", 1)[0] for line in lines[1:]]
    assert "two_n" in keys
    assert any(key.startswith("matrices.q[0][0]") for key in keys)


def test_invalid_deformation_exits_two():
    result = run_cli("verify", "--t", "-0.5")
    assert result.returncode == 2

    result = run_cli("rep", "--n", "2", "--t", "0")
    assert result.returncode == 2


def test_invalid_subcommand_and_flags_exit_two():
    assert run_cli("bogus").returncode == 2
    assert run_cli("verify", "--suite", "bogus").returncode == 2
    assert run_cli("rep", "--n", "-2").returncode == 2


def test_environment_variables_provide_defaults():
    result = run_cli("rep", "--n", "1", env_extra={"SUQ2_T": "0.4"}, check=True)
    doc = json.loads(result.stdout)
    assert abs(doc["config"]["t"] - 0.4) < 1e-15


def test_flags_override_environment():
    result = run_cli(
        "rep", "--n", "1", "--t", "0.25", env_extra={"SUQ2_T": "0.4"}, check=True
    )
    doc = json.loads(result.stdout)
    assert abs(doc["config"]["t"] - 0.25) < 1e-15


def test_garbage_environment_exits_two():
    result = run_cli("rep", "--n", "1", env_extra={"SUQ2_T": "not-a-number"})
    assert result.returncode == 2
    assert "SUQ2_T" in result.stderr


def test_seed_changes_random_battery_but_not_results():
    a = run_cli("verify", "--suite", "dqg", "--seed", "1", "--out", "/dev/null")
    b = run_cli("verify", "--suite", "dqg", "--seed", "2", "--out", "/dev/null")
    assert a.returncode == 0 and b.returncode == 0
