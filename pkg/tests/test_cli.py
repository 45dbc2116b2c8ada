import json

import pytest
from click.testing import CliRunner

from zetaforge.cli import main

ZETA3_PREFIX = "1.2020569031595942853997381615"


@pytest.fixture()
def runner():
    return CliRunner()


def test_eval_zeta(runner):
    res = runner.invoke(main, ["eval", "zeta", "3", "--bits", "128"])
    assert res.exit_code == 0
    assert res.output.strip().startswith(ZETA3_PREFIX)
    # digit count tracks bits * log10(2) - 2
    digits = len(res.output.strip().replace(".", "").lstrip("-"))
    assert 34 <= digits <= 38


def test_eval_exact(runner):
    res = runner.invoke(main, ["eval", "harmonic", "10", "1"])
    assert res.exit_code == 0
    assert res.output.strip() == "7381/2520"


def test_eval_literals(runner):
    res = runner.invoke(main, ["eval", "clausen", "2", "pi/2", "--bits", "64"])
    assert res.exit_code == 0
    assert res.output.strip().startswith("0.915965594177")
    res = runner.invoke(main, ["eval", "polylog", "2", "-1/2", "--bits", "64"])
    assert res.exit_code == 0
    assert res.output.strip().startswith("-0.448414206923646")


def test_eval_errors_exit_2(runner):
    assert runner.invoke(main, ["eval", "zeta", "1"]).exit_code == 2
    assert runner.invoke(main, ["eval", "nosuchfn", "1"]).exit_code == 2


def test_env_var_bits(runner):
    res = runner.invoke(main, ["eval", "zeta", "2"],
                        env={"ZETAFORGE_BITS": "64"})
    assert res.exit_code == 0
    assert len(res.output.strip()) < 22


def test_verify_single_and_exit_codes(runner):
    res = runner.invoke(main, ["verify", "EQ-4.4.167"])
    assert res.exit_code == 0
    assert "pass" in res.output and "summary: 1 pass" in res.output
    res = runner.invoke(main, ["verify", "NO-SUCH-ID"])
    assert res.exit_code == 2
    res = runner.invoke(main, ["verify"])
    assert res.exit_code == 2


def test_verify_tol_failure_exit_1(runner):
    res = runner.invoke(main, [
        "verify", "EQ-4.4.163", "--bits", "64", "--tol", "1e-80"])
    assert res.exit_code == 1


def test_verify_json_format(runner, tmp_path):
    out = tmp_path / "report.json"
    res = runner.invoke(main, [
        "verify", "EQ-4.4.123", "EQ-4.4.130", "--bits", "64",
        "--format", "json", "--out", str(out)])
    assert res.exit_code == 0
    body = json.loads(out.read_text())
    assert body["summary"]["pass"] == 2
    assert body["run"]["precision_bits"] == 64


def test_report_subcommand(runner, tmp_path):
    out = tmp_path / "r.json"
    res = runner.invoke(main, [
        "report", "--tag", "exact", "--bits", "64", "--out", str(out)])
    assert res.exit_code == 0
    body = json.loads(out.read_text())
    assert body["summary"]["fail"] == 0
    assert body["summary"]["pass"] >= 15


def test_list_filters(runner):
    res = runner.invoke(main, ["list"])
    assert res.exit_code == 0
    assert len(res.output.strip().splitlines()) >= 60
    res = runner.invoke(main, ["list", "--tag", "negative"])
    assert res.exit_code == 0
    lines = res.output.strip().splitlines()
    assert lines and all("NEG-" in ln for ln in lines)
    res = runner.invoke(main, ["list", "--tag", "exact"])
    assert all("EQ-" in ln for ln in res.output.strip().splitlines())
