"""Construye planta, perturbación, controlador y SimConfig a partir de una configuración resuelta."""
from core.errors import ConfigError
from controllers.laws import ArpsController, BaselineController, Controller, FixedGainController, HybridController
from controllers.params import ArpsParams, BarrierKind, BarrierSpec, BaselineParams
from integrator.series import SimConfig
from plants import PlantSpec, make_plant
from plants.disturbance import DisturbanceParams, RhoSchedule
from experiments.sweep import sigma0_from


def build_plant(cfg: dict) -> PlantSpec:
    try:
        return make_plant(cfg["plant.name"])
    except ValueError as e:
        raise ConfigError(str(e)) from e


def build_disturbance(cfg: dict) -> DisturbanceParams:
    schedule_text = cfg["disturbance.rho_schedule"]
    try:
        schedule = RhoSchedule.parse(schedule_text) if schedule_text else None
    except ValueError as e:
        raise ConfigError(f"Valor inválido para 'disturbance.rho_schedule': {schedule_text!r} ({e})") from e
    return DisturbanceParams(
        rho=cfg["disturbance.rho"],
        a1=cfg["disturbance.a1"],
        b1=cfg["disturbance.b1"],
        omega1=cfg["disturbance.omega1"],
        omega2=cfg["disturbance.omega2"],
        rho_schedule=schedule,
        offsets_per_rho=cfg["disturbance.offsets_per_rho"],
    )


def build_arps_params(cfg: dict) -> ArpsParams:
    return ArpsParams(alpha=cfg["controller.alpha"], T_c=cfg["controller.T_c"], beta0=cfg["controller.beta0"])


def build_controller(cfg: dict) -> Controller:
    kind = cfg["controller.kind"]
    epsilon = cfg["controller.epsilon"]
    if kind == "fixed":
        return FixedGainController(Lambda=cfg["controller.gain"], epsilon=epsilon)
    if kind == "baseline":
        return BaselineController(BaselineParams(K_bar=cfg["controller.K_bar"], k0=cfg["controller.k0"]),
                                  epsilon=epsilon)
    if kind == "arps":
        return ArpsController(build_arps_params(cfg), epsilon=epsilon)
    barrier = BarrierSpec(kind=BarrierKind(cfg["controller.barrier"]), epsilon=epsilon,
                          beta_bar=cfg["controller.beta_bar"])
    return HybridController(arps=build_arps_params(cfg), barrier=barrier)


def build_sim_config(cfg: dict) -> SimConfig:
    return SimConfig(
        dt=cfg["sim.dt"],
        t_end=cfg["sim.t_end"],
        record_stride=cfg["sim.stride"],
        deadzone=cfg["sim.deadzone"],
        stop_on_reach=cfg["sim.stop_on_reach"],
    )


def build_sigma0(cfg: dict):
    return sigma0_from(cfg["sim.sigma0_n"], cfg["sim.sigma0_b"])
