import dataclasses
import logging
import math

import numpy as np

from core.errors import BarrierBreached, NonFiniteState, SingularMatrix, TimeHorizonExceeded
from core.linalg import norm2
from core.types import GainState, StateVector, Vec
from controllers.gains import unit_vector_control
from controllers.laws import Controller
from integrator.series import ReachEvent, SeriesRecorder, SimConfig, SimulationResult, Termination, TimeSeries
from plants.base import PlantSpec
from plants.disturbance import DisturbanceParams

logger = logging.getLogger(__name__)

_FAULTS = {
    TimeHorizonExceeded: Termination.HORIZON_EXCEEDED,
    BarrierBreached: Termination.BARRIER_BREACHED,
    NonFiniteState: Termination.NON_FINITE,
    SingularMatrix: Termination.SINGULAR,
}


def _closed_loop(t: float, sigma: Vec, norm_sigma: float, Lambda: float, plant: PlantSpec,
                 p: DisturbanceParams, deadzone: float) -> tuple[Vec, Vec, Vec]:
    """σ̇ = G(I+Δg)u + f con u = G⁻¹ν. Devuelve (σ̇, ν, f)."""
    G = plant.eval_G(t, sigma)
    f = plant.eval_f(t, sigma, p)
    if norm_sigma < deadzone:
        # Selección de Filippov en σ = 0.
        nu = np.zeros_like(sigma)
        return f, nu, f
    u, nu = unit_vector_control(sigma, Lambda, G, deadzone)
    sigma_dot = G @ (u + plant.eval_dg(t, sigma) @ u) + f
    return sigma_dot, nu, f


def _check_finite(sigma: Vec, t: float):
    if not np.all(np.isfinite(sigma)):
        raise NonFiniteState(f"Estado no finito en t={t:.9g}: sigma={sigma}")


def step(state: StateVector, gains: GainState, plant: PlantSpec, controller: Controller, cfg: SimConfig,
         disturbance: DisturbanceParams | None = None) -> tuple[StateVector, GainState]:
    """Un paso de Euler del lazo cerrado y de los integradores de ganancia."""
    p = disturbance or DisturbanceParams()
    norm_sigma = norm2(state.sigma)
    Lambda, gains = controller.gain(state.t, norm_sigma, gains)
    sigma_dot, _, _ = _closed_loop(state.t, state.sigma, norm_sigma, Lambda, plant, p, cfg.deadzone)
    sigma_next = state.sigma + cfg.dt * sigma_dot
    _check_finite(sigma_next, state.t + cfg.dt)
    return StateVector(sigma_next, state.t + cfg.dt), controller.advance(gains, norm_sigma, cfg.dt)


def simulate(plant: PlantSpec, controller: Controller, initial: StateVector, cfg: SimConfig,
             disturbance: DisturbanceParams | None = None) -> SimulationResult:
    """
    Integra hasta t_end o hasta un fallo; registra el primer instante con
    ‖σ‖ <= umbral de alcance. Determinista: mismos argumentos, misma salida.
    """
    p = disturbance or DisturbanceParams()
    dt = cfg.dt
    n_steps = cfg.n_steps
    stride = cfg.record_stride
    threshold = controller.reach_threshold
    recorder = SeriesRecorder(initial.m)

    sigma = np.array(initial.sigma, dtype=float)
    t0 = initial.t
    gains = controller.initial_state()
    event: ReachEvent | None = None
    status = Termination.COMPLETED
    message = ""

    logger.info(
        f"Simulación: planta={plant.name}, controlador={controller.name}, ‖σ0‖={norm2(sigma):.6g}, "
        f"dt={dt:g}, t_end={cfg.t_end:g}")
    i = 0
    try:
        _check_finite(sigma, t0)
        while True:
            t = t0 + i * dt
            norm_sigma = norm2(sigma)
            if event is None and norm_sigma <= threshold:
                event = ReachEvent(t_bar=t, norm_at_event=norm_sigma, steps_taken=i)
                logger.debug(f"Alcance en t={t:.9g} con ‖σ‖={norm_sigma:.6g}")

            Lambda, gains = controller.gain(t, norm_sigma, gains)
            if not math.isfinite(Lambda):
                raise NonFiniteState(f"Ganancia no finita en t={t:.9g}")
            sigma_dot, nu, f = _closed_loop(t, sigma, norm_sigma, Lambda, plant, p, cfg.deadzone)

            stop = None
            horizon = controller.rp_horizon(gains)
            if horizon is not None and horizon - t <= dt * (1.0 + 1e-9):
                if event is None:
                    raise TimeHorizonExceeded(
                        f"La fase de alcance no terminó antes de T_c - dt (t={t:.9g}, ‖σ‖={norm_sigma:.6g})")
                # ARPS sin fase adaptativa: κ(t) no permite seguir más allá de T_c.
                stop = Termination.COMPLETED
            elif cfg.stop_on_reach and event is not None:
                stop = Termination.REACHED
            elif i == n_steps:
                stop = Termination.COMPLETED

            if i % stride == 0 or stop is not None:
                recorder.add(t, sigma, norm_sigma, Lambda, norm2(nu), norm2(f), gains.mode.value,
                             gains.beta_hat, gains.k_hat)
            if stop is not None:
                status = stop
                break

            sigma = sigma + dt * sigma_dot
            gains = controller.advance(gains, norm_sigma, dt)
            i += 1
            _check_finite(sigma, t0 + i * dt)
    except tuple(_FAULTS) as exc:
        status = _FAULTS[type(exc)]
        message = str(exc)
        logger.warning(f"Simulación interrumpida ({status.value}): {message}")

    series = recorder.build()
    t_bar = "-" if event is None else f"{event.t_bar:.9g}"
    logger.info(f"Fin de simulación: estado={status.value}, t_bar={t_bar}, muestras={len(series)}")
    return SimulationResult(series=series, reach=event, status=status, message=message)


def reach_time(series: TimeSeries, threshold: float) -> float | None:
    """Primer instante muestreado con ‖σ‖ <= threshold."""
    if len(series) == 0:
        raise ValueError("La serie está vacía")
    hits = np.flatnonzero(series.norm_sigma <= threshold)
    if hits.size == 0:
        return None
    return float(series.t[hits[0]])


def step_robustness(plant: PlantSpec, controller: Controller, initial: StateVector, cfg: SimConfig,
                    disturbance: DisturbanceParams | None = None) -> tuple[float | None, float | None]:
    """t̄ con dt y con dt/2 (misma configuración en lo demás)."""
    coarse = simulate(plant, controller, initial, cfg, disturbance)
    fine_cfg = dataclasses.replace(cfg, dt=0.5 * cfg.dt, record_stride=2 * cfg.record_stride)
    fine = simulate(plant, controller, initial, fine_cfg, disturbance)
    return coarse.t_bar, fine.t_bar
