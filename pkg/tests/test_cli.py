import json

import pytest
from click.testing import CliRunner

from regmaps.main import cli


@pytest.fixture
def runner():
    return CliRunner()


def test_order(runner):
    result = runner.invoke(cli, ["order", "--preset", "dihedral", "--n", "4"])
    assert result.exit_code == 0, result.output
    assert result.stdout.splitlines() == ["order 16", "o(r0 r1) 2", "o(r1 r2) 8", "o(r0 r2) 2"]


def test_order_from_file(runner, tmp_path):
    path = tmp_path / "ea8.txt"
    path.write_text("# three commuting reflections\nr0^2\nr1^2\nr2^2\n(r0 r2)^2\n(r0 r1)^2\n(r1 r2)^2\n")
    result = runner.invoke(cli, ["order", "--file", str(path), "--strategy", "felsch"])
    assert result.exit_code == 0, result.output
    assert result.stdout.splitlines()[0] == "order 8"


def test_coset_limit_exits_2(runner):
    result = runner.invoke(cli, ["order", "--preset", "delta", "--max-cosets", "2000"])
    assert result.exit_code == 2
    assert "error:" in result.output


def test_bad_preset_parameters_exit_2(runner):
    assert runner.invoke(cli, ["order", "--preset", "dihedral"]).exit_code == 2
    assert runner.invoke(cli, ["order", "--preset", "nosuch", "--n", "4"]).exit_code == 2


def test_preset_and_file_together(runner, tmp_path):
    path = tmp_path / "p.txt"
    path.write_text("r0\n")
    result = runner.invoke(cli, ["order", "--preset", "dihedral", "--n", "4", "--file", str(path)])
    assert result.exit_code == 2
    assert "exactly one" in result.output


def test_analyze(runner):
    result = runner.invoke(cli, ["analyze", "--preset", "dihedral", "--n", "4"])
    assert result.exit_code == 0, result.output
    record = json.loads(result.stdout)
    assert record["flags"] == 16
    assert record["faces"] == 4
    assert record["orientable"] is False


def test_dual(runner):
    result = runner.invoke(cli, ["dual", "--preset", "dihedral", "--n", "4"])
    assert result.exit_code == 0, result.output
    payload = json.loads(result.stdout)
    assert payload["self_dual"] is False
    assert payload["dual"]["valency"] == 2
    assert payload["map_digest"] != payload["dual_digest"]


def test_census(runner, tmp_path):
    result = runner.invoke(cli, ["census", "--max-exp", "3", "--out", str(tmp_path)])
    assert result.exit_code == 0, result.output
    lines = result.stdout.splitlines()
    assert lines[0].split() == ["order", "nodes", "proper", "s,t:count"]
    assert [line.split()[0] for line in lines[1:]] == ["1", "2", "4", "8"]
    assert lines[2].split()[2] == "0"
    assert (tmp_path / "manifest.json").exists()


def test_census_node_limit_exits_2(runner, tmp_path):
    result = runner.invoke(cli, ["census", "--max-exp", "3", "--out", str(tmp_path), "--max-nodes", "2"])
    assert result.exit_code == 2
    assert "incomplete" in result.output


def test_crosscheck(runner, small_census, tmp_path):
    missing = runner.invoke(cli, ["crosscheck", str(tmp_path / "absent.csv"), "--census", str(small_census)])
    assert missing.exit_code == 0
    assert "skipped" in missing.output
    counts = tmp_path / "counts.csv"
    counts.write_text("order_exp,count\n1,5\n")
    assert runner.invoke(cli, ["crosscheck", str(counts), "--census", str(small_census)]).exit_code == 1


def test_verify(runner, tmp_path):
    report = tmp_path / "reports.jsonl"
    result = runner.invoke(cli, ["verify", "conjecture34", "--n", "9", "--s", "4", "--t", "5",
                                 "--report", str(report)])
    assert result.exit_code == 0, result.output
    assert "0 passed, 0 failed, 1 skipped" in result.stdout
    assert json.loads(report.read_text())["status"] == "skipped"


def test_verify_rejects_unknown_claims(runner):
    assert runner.invoke(cli, ["verify", "thm99"]).exit_code == 2


def test_verify_missing_parameter_exits_2(runner, tmp_path):
    result = runner.invoke(cli, ["verify", "thm32", "--n", "12", "--report", str(tmp_path / "r.jsonl")])
    assert result.exit_code == 2


def test_version(runner):
    result = runner.invoke(cli, ["--version"])
    assert result.exit_code == 0
    assert "regmaps" in result.output


@pytest.mark.slow
def test_order_g4_at_12(runner):
    result = runner.invoke(cli, ["order", "--preset", "G4", "--n", "12"])
    assert result.exit_code == 0, result.output
    assert result.stdout.splitlines() == ["order 4096", "o(r0 r1) 512", "o(r1 r2) 512", "o(r0 r2) 2"]


@pytest.mark.slow
def test_verify_permutation_model_at_12(runner, tmp_path):
    result = runner.invoke(cli, ["verify", "thm43-perms", "--n", "12", "--report", str(tmp_path / "r.jsonl")])
    assert result.exit_code == 0, result.output
    assert "1 passed" in result.stdout
