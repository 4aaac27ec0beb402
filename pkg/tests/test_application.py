import json
from pathlib import Path

import pytest

from khovanizer.core.application import main
from khovanizer.core.exit_codes import ExitCode


@pytest.fixture
def config_path(tmp_path: Path, monkeypatch: pytest.MonkeyPatch, restore_logging) -> str:
    monkeypatch.setenv("APPDATA", str(tmp_path / "appdata"))
    monkeypatch.setenv("HOME", str(tmp_path / "home"))
    monkeypatch.delenv("KH_CORPUS_DIR", raising=False)
    return str(tmp_path / "config" / "config.toml")


def run_json(config_path: str, tmp_path: Path, *argv: str):
    target = tmp_path / "result.json"
    code = main([*argv, "--config", config_path, "--json", "-o", str(target)])
    document = json.loads(target.read_text(encoding="utf-8")) if target.exists() else None
    return code, document


def test_compute_writes_a_report(config_path: str, tmp_path: Path):
    code, document = run_json(config_path, tmp_path, "compute", "trefoil-right", "--ring", "q")
    assert code == ExitCode.OK
    assert document["format"] == "khovanizer.kh_report"
    assert document["diagram"]["positive"] == 3
    assert document["two_line"] == 2
    ranks = {(e["i"], e["j"]): e["betti"] for e in document["homology"]["entries"]}
    assert ranks == {(0, 1): 1, (0, 3): 1, (2, 5): 1, (3, 9): 1}
    assert document["oracle"]["status"] == "off"


def test_compute_with_the_oracle(config_path: str, tmp_path: Path):
    code, document = run_json(config_path, tmp_path, "compute", "X(1,4,2,3) X(3,2,4,1)", "--oracle")
    assert code == ExitCode.OK
    assert document["oracle"]["status"] == "agrees"


def test_compute_rejects_bad_input(config_path: str, tmp_path: Path):
    code, document = run_json(config_path, tmp_path, "compute", "X(1,2,3")
    assert code == ExitCode.INPUT_ERROR
    assert document is None
    code, _ = run_json(config_path, tmp_path, "compute", "omega3")
    assert code == ExitCode.INPUT_ERROR


def test_reduce_a_tangle(config_path: str, tmp_path: Path):
    code, document = run_json(config_path, tmp_path, "reduce", "twist")
    assert code == ExitCode.OK
    assert document["format"] == "khovanizer.complex"
    assert document["boundary_count"] == 4


def test_reduce_accepts_its_own_output(config_path: str, tmp_path: Path):
    first = tmp_path / "first.json"
    assert main(["reduce", "negative-crossing", "--config", config_path, "--json", "-o", str(first)]) == ExitCode.OK
    code, document = run_json(config_path, tmp_path, "reduce", str(first))
    assert code == ExitCode.OK
    original = json.loads(first.read_text(encoding="utf-8"))
    assert len(document["objects"]) == len(original["objects"]) == 2
    assert document["boundary_count"] == original["boundary_count"]


def test_check_diagonal_exit_codes(config_path: str, tmp_path: Path):
    code, document = run_json(config_path, tmp_path, "check-diagonal", "omega3")
    assert code == ExitCode.OK
    assert document["verdict"] == {"status": "diagonal", "constant": -1}
    code, document = run_json(config_path, tmp_path, "check-diagonal", "omega3", "--coherent")
    assert code == ExitCode.PROPERTY_VIOLATED
    assert document["verdict"]["status"] == "not_diagonal"
    code, document = run_json(config_path, tmp_path, "check-diagonal", "negative-crossing", "--coherent")
    assert code == ExitCode.OK
    assert document["verdict"]["constant"] == -1


def test_text_output_goes_to_stdout(config_path: str, capsys):
    code = main(["compute", "hopf", "--config", config_path, "--format", "text", "--no-color"])
    assert code == ExitCode.OK
    out = capsys.readouterr().out
    assert "2 crossings" in out
    assert "Two-line support: j - 2i = -1 +/- 1" in out


def test_unknown_profile_is_an_input_error(config_path: str, tmp_path: Path):
    code, _ = run_json(config_path, tmp_path, "compute", "hopf", "--profile", "missing")
    assert code == ExitCode.INPUT_ERROR


def test_profile_settings_reach_the_commands(config_path: str, tmp_path: Path):
    code, document = run_json(config_path, tmp_path, "compute", "trefoil-left", "--profile", "rational")
    assert code == ExitCode.OK
    assert document["homology"]["ring"] == "q"


def test_selftest_runs_selected_suites(config_path: str, tmp_path: Path):
    code, document = run_json(config_path, tmp_path, "selftest", "--suite", "local-relations", "--seed", "11")
    assert code == ExitCode.OK
    assert document["seed"] == 11
    assert [suite["name"] for suite in document["suites"]] == ["local-relations"]
    code, _ = run_json(config_path, tmp_path, "selftest", "--suite", "no-such-suite")
    assert code == ExitCode.INPUT_ERROR
