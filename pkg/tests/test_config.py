import pytest

from config import BUILTIN_DEFAULTS, SCHEMA, load_config_file, parse_value, resolve_config
from core.errors import ConfigError
from controllers import ArpsController, BaselineController, FixedGainController, HybridController
from controllers.params import BarrierKind
from experiments.factory import (build_controller, build_disturbance, build_plant, build_sigma0,
                                 build_sim_config)


def test_defaults_cover_schema():
    assert set(BUILTIN_DEFAULTS) == set(SCHEMA)


def test_load_config_file_types_values(tmp_path):
    path = tmp_path / "run.cfg"
    path.write_text(
        "# barrido de prueba\n"
        "plant.name=motivating\n"
        "disturbance.rho=250\n"
        "disturbance.rho_schedule=0:80,0.2:50\n"
        "sim.stride=10\n"
        "sim.stop_on_reach=true\n"
    )
    values = load_config_file(path)
    assert values == {
        "plant.name": "motivating",
        "disturbance.rho": 250.0,
        "disturbance.rho_schedule": "0:80,0.2:50",
        "sim.stride": 10,
        "sim.stop_on_reach": True,
    }


def test_missing_config_file_names_path(tmp_path):
    with pytest.raises(ConfigError, match="nope.cfg"):
        load_config_file(tmp_path / "nope.cfg")


def test_unknown_key_is_rejected(tmp_path):
    path = tmp_path / "run.cfg"
    path.write_text("sim.dtt=1e-5\n")
    with pytest.raises(ConfigError, match="sim.dtt"):
        load_config_file(path)


@pytest.mark.parametrize("key, raw", [
    ("sim.dt", "fast"),
    ("sim.dt", "nan"),
    ("controller.kind", "pid"),
    ("sim.stop_on_reach", "maybe"),
    ("sim.stride", "1.5"),
])
def test_unparsable_values(key, raw):
    with pytest.raises(ConfigError, match=key):
        parse_value(key, raw)


def test_precedence_cli_over_file_over_defaults():
    file_values = {"disturbance.rho": 10.0, "controller.alpha": 0.3}
    overrides = {"disturbance.rho": "20"}
    cfg = resolve_config(file_values, overrides)
    assert cfg["disturbance.rho"] == 20.0
    assert cfg["controller.alpha"] == 0.3
    assert cfg["controller.T_c"] == BUILTIN_DEFAULTS["controller.T_c"]


def test_environment_is_not_consulted(monkeypatch):
    monkeypatch.setenv("sim.dt", "0.5")
    monkeypatch.setenv("SIM_DT", "0.5")
    assert resolve_config()["sim.dt"] == BUILTIN_DEFAULTS["sim.dt"]


@pytest.mark.parametrize("kind, cls", [
    ("fixed", FixedGainController),
    ("baseline", BaselineController),
    ("arps", ArpsController),
    ("hybrid", HybridController),
])
def test_build_controller_kinds(kind, cls):
    assert isinstance(build_controller(resolve_config(overrides={"controller.kind": kind})), cls)


def test_build_pd_hybrid():
    cfg = resolve_config(overrides={"controller.kind": "hybrid", "controller.barrier": "pd",
                                    "controller.beta_bar": "2"})
    ctrl = build_controller(cfg)
    assert ctrl.barrier.kind is BarrierKind.POSITIVE_DEFINITE
    assert ctrl.barrier.beta_bar == 2.0


def test_build_from_defaults():
    cfg = resolve_config()
    assert build_plant(cfg).name == "revisited"
    assert build_disturbance(cfg).rho == 1000.0
    assert build_sim_config(cfg).dt == 1e-5
    assert build_sigma0(cfg).shape == (2,)


def test_bad_schedule_is_config_error():
    cfg = resolve_config(overrides={"disturbance.rho_schedule": "1:5"})
    with pytest.raises(ConfigError):
        build_disturbance(cfg)
