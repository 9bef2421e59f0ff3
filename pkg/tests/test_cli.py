import json
import os
import sys

import pytest

sys.path.insert(0, os.path.join(os.path.dirname(__file__), "..", "scripts"))

from run_experiments import (EXIT_CONFIG, EXIT_OK, EXIT_SIMULATION, GLOBAL_KEYS, SIMULATE_KEYS, main)  # noqa: E402


@pytest.fixture(autouse=True)
def _workdir(tmp_path, monkeypatch):
    monkeypatch.chdir(tmp_path)


def test_help_names_config_keys(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["simulate", "--help"])
    assert exc.value.code == 0
    out = capsys.readouterr().out
    for key in SIMULATE_KEYS + GLOBAL_KEYS:
        assert f"[{key}]" in out


def test_missing_config_file_exit_code(tmp_path, capsys):
    code = main(["simulate", "--config", str(tmp_path / "missing.cfg")])
    assert code == EXIT_CONFIG
    assert "missing.cfg" in capsys.readouterr().err


def test_unparsable_flag_value(capsys):
    assert main(["simulate", "--dt", "fast"]) == EXIT_CONFIG


def test_simulate_single_run(tmp_path, capsys):
    out = tmp_path / "run"
    code = main(["simulate", "--plant", "revisited", "--controller", "arps", "--rho", "100",
                 "--sigma0-n", "2", "--sigma0-b", "3", "--out", str(out)])
    assert code == EXIT_OK
    printed = capsys.readouterr().out
    assert "t_bar=" in printed and "t_bar=-" not in printed
    assert (out / "series.csv").read_text().startswith("t,sigma_1,sigma_2,norm_sigma,Lambda,norm_nu,norm_f,mode\n")
    assert (out / "series_norm.svg").exists()
    manifest = json.loads((out / "manifest.json").read_text())
    assert manifest["command"] == "simulate"
    assert manifest["resolved_config"]["disturbance.rho"] == 100.0
    assert "series.csv" in manifest["outputs"]


def test_simulate_fault_exit_code(tmp_path, capsys):
    code = main(["simulate", "--controller", "arps", "--T-c", "0.01", "--t-end", "0.01", "--dt", "1e-3",
                 "--rho", "1000", "--sigma0-n", "2", "--out", str(tmp_path / "fault")])
    assert code == EXIT_SIMULATION
    assert "HorizonExceeded" in capsys.readouterr().out


def test_replay_reproduces_outputs(tmp_path):
    out = tmp_path / "replay"
    argv = ["simulate", "--controller", "fixed", "--gain", "50", "--rho", "5", "--t-end", "0.05", "--out", str(out)]
    assert main(argv) == EXIT_OK
    first = (out / "series.csv").read_bytes()
    first_svg = (out / "series_gain.svg").read_bytes()
    (out / "series.csv").unlink()
    assert main(["replay", str(out / "manifest.json")]) == EXIT_OK
    assert (out / "series.csv").read_bytes() == first
    assert (out / "series_gain.svg").read_bytes() == first_svg


def test_sweep_small_grid(tmp_path, capsys):
    out = tmp_path / "sweep"
    code = main(["sweep", "--controller", "arps", "--rho-values", "0", "--n-values", "1", "--b-values", "1",
                 "--workers", "1", "--out", str(out)])
    assert code == EXIT_OK
    lines = (out / "sweep_arps.csv").read_text().splitlines()
    assert lines[0] == "rho,n,b,t_bar,status"
    assert lines[1].endswith(",Reached")
    assert (out / "rt_surface_arps.svg").exists()
    assert "all_reached=True" in capsys.readouterr().out


def test_sweep_empty_grid_is_config_error(tmp_path):
    assert main(["sweep", "--rho-values", "", "--out", str(tmp_path / "empty")]) == EXIT_CONFIG


def test_sweep_store(tmp_path, capsys):
    url = f"sqlite:///{tmp_path / 'results.db'}"
    code = main(["sweep", "--controller", "arps", "--rho-values", "0", "--n-values", "1", "--b-values", "1",
                 "--workers", "1", "--store", url, "--out", str(tmp_path / "stored")])
    assert code == EXIT_OK
    assert "sweep_run_id=1" in capsys.readouterr().out


def test_verify_revisited_plant(tmp_path, capsys):
    code = main(["verify", "--plant", "revisited", "--out", str(tmp_path / "verify")])
    assert code == EXIT_OK
    assert "passed=True" in capsys.readouterr().out


def test_verify_negative_rho(tmp_path):
    assert main(["verify", "--plant", "revisited", "--rho", "-1", "--out", str(tmp_path / "v")]) == EXIT_CONFIG


@pytest.mark.slow
def test_verify_oracle(tmp_path, capsys):
    code = main(["verify", "--plant", "revisited", "--oracle", "--rho", "100", "--out", str(tmp_path / "oracle")])
    assert code == EXIT_OK
    assert "equivalent=True" in capsys.readouterr().out


@pytest.mark.slow
def test_simulate_scenario2(tmp_path):
    out = tmp_path / "scenario2"
    assert main(["simulate", "--scenario", "2", "--out", str(out)]) == EXIT_OK
    assert (out / "scenario2.csv").exists()
    assert (out / "scenario2_envelope.csv").exists()
