import logging
from dataclasses import dataclass

import numpy as np

from core.linalg import as_vec
from core.types import StateVector
from controllers.laws import ArpsController
from controllers.params import ArpsParams
from integrator.euler import simulate
from integrator.series import SimConfig, SimulationResult, TimeSeries
from plants.assumptions import AssumptionReport, check_assumptions, default_sigma_grid
from plants.base import PlantSpec
from plants.disturbance import DisturbanceParams
from timescale_oracle.lyapunov import LyapunovTrace, lyapunov_trace
from timescale_oracle.scaled_sim import DEFAULT_DTAU, ScaledSeries, simulate_scaled
from timescale_oracle.scaling import ScaleMap, default_tau_max, t_of_tau

logger = logging.getLogger(__name__)

EQUIVALENCE_TOL = 1e-3


@dataclass(frozen=True)
class OracleReport:
    deviation: float
    compared_points: int
    direct: SimulationResult
    scaled: ScaledSeries
    lyapunov: LyapunovTrace | None = None
    assumptions: AssumptionReport | None = None
    vanishing_ok: bool | None = None

    @property
    def equivalent(self) -> bool:
        return self.deviation <= EQUIVALENCE_TOL


def equivalence_deviation(direct: TimeSeries, scaled: ScaledSeries) -> tuple[float, int]:
    """sup ‖σ(t(τ)) − y(τ)‖ con σ interpolado linealmente en los instantes t(τ)."""
    mask = (scaled.t >= direct.t[0]) & (scaled.t <= direct.t[-1])
    if not np.any(mask):
        raise ValueError("Las series directa y escalada no se solapan en el tiempo")
    t_points = scaled.t[mask]
    sigma_interp = np.column_stack([np.interp(t_points, direct.t, direct.sigma[:, i]) for i in range(direct.m)])
    diff = np.linalg.norm(sigma_interp - scaled.y[mask], axis=1)
    return float(np.max(diff)), int(mask.sum())


def check_vanishing_perturbation(scaled: ScaledSeries, scale: ScaleMap, d_est: float, rtol: float = 1e-3) -> bool:
    """
    ‖f̄(τ)‖ <= αT_c e^{−ατ}·d en cada muestra. rtol absorbe la resolución de la
    malla con la que se estimó d.
    """
    bound = scale.alpha * scale.T_c * np.exp(-scale.alpha * scaled.tau) * d_est
    return bool(np.all(scaled.norm_f_bar <= bound * (1.0 + rtol)))


def run_oracle(plant: PlantSpec, arps: ArpsParams, sigma0, disturbance: DisturbanceParams,
               direct_dt: float = 1e-6, dtau: float = DEFAULT_DTAU, tau_max: float | None = None,
               scaled_stride: int = 100, with_lyapunov: bool = True) -> OracleReport:
    """
    Ejecuta la fase de alcance directa (solo ARPS, sin conmutación) y el sistema
    escalado con la misma condición inicial y compara ambas trayectorias.
    """
    scale = ScaleMap(arps.alpha, arps.T_c)
    tau_max = default_tau_max(scale) if tau_max is None else tau_max
    t_end = t_of_tau(tau_max, scale)
    sigma0 = as_vec(sigma0)

    direct_cfg = SimConfig(dt=direct_dt, t_end=t_end, record_stride=1)
    direct = simulate(plant, ArpsController(arps), StateVector(sigma0), direct_cfg, disturbance)
    scaled_cfg = SimConfig(dt=dtau, t_end=tau_max, record_stride=scaled_stride)
    scaled = simulate_scaled(plant, arps, sigma0, scaled_cfg, disturbance)

    deviation, compared = equivalence_deviation(direct.series, scaled)
    logger.info(f"Oráculo de escala de tiempo: desviación sup={deviation:.6g} en {compared} puntos")

    trace = assumptions = vanishing = None
    if with_lyapunov:
        # d y q1 se estiman en la ventana temporal que cubre la corrida escalada.
        assumptions = check_assumptions(
            plant, disturbance, np.linspace(0.0, arps.T_c, 41), default_sigma_grid())
        trace = lyapunov_trace(scaled, assumptions.beta_star_est, assumptions.b0_est)
        vanishing = check_vanishing_perturbation(scaled, scale, assumptions.d_est)
        logger.info(
            f"Traza de Lyapunov: max ΔV={trace.max_increment:.6g}, max V={trace.max_V:.6g}, "
            f"no creciente={trace.nonincreasing()}")
    return OracleReport(
        deviation=deviation,
        compared_points=compared,
        direct=direct,
        scaled=scaled,
        lyapunov=trace,
        assumptions=assumptions,
        vanishing_ok=vanishing,
    )


__all__ = ["OracleReport", "equivalence_deviation", "check_vanishing_perturbation", "run_oracle"]
