import logging
import math
from dataclasses import dataclass, field

import numpy as np

from core.linalg import norm2
from core.types import Mode, StateVector
from controllers.laws import HybridController
from controllers.params import ArpsParams, BarrierKind, BarrierSpec
from integrator.euler import simulate
from integrator.series import SimConfig, SimulationResult, TimeSeries
from plants.disturbance import DisturbanceParams, RhoSchedule
from plants.revisited import RevisitedPlant

logger = logging.getLogger(__name__)

SCENARIO_ARPS = ArpsParams(alpha=0.4, T_c=1.0, beta0=0.0)
SCENARIO_EPSILON = 0.05

SCENARIO1_NORMS = (1.0, 5.0, 10.0)
SCENARIO1_SCHEDULE = RhoSchedule((0.0, 0.2, 0.4), (80.0, 50.0, 10.0))
SCENARIO1_DISTURBANCE = DisturbanceParams(a1=1.0, b1=1.2, omega1=30.0, omega2=20.0,
                                          rho_schedule=SCENARIO1_SCHEDULE, offsets_per_rho=True)
SCENARIO1_T_END = 1.5

SCENARIO2_SCHEDULE = RhoSchedule((0.0, 3.0, 6.0), (10.0, 100.0, 200.0))
SCENARIO2_DISTURBANCE = DisturbanceParams(a1=1.0, b1=1.0, omega1=2.0, omega2=3.0,
                                          rho_schedule=SCENARIO2_SCHEDULE, offsets_per_rho=True)
SCENARIO2_T_END = 9.0

_DIRECTION = np.array([1.0, -1.0]) / math.sqrt(2.0)


@dataclass(frozen=True)
class ScenarioSettings:
    dt: float = 1e-5
    record_stride: int = 10
    t_end: float | None = None
    barrier: BarrierSpec = field(default_factory=lambda: BarrierSpec(BarrierKind.POSITIVE_SEMIDEFINITE,
                                                                     SCENARIO_EPSILON))


@dataclass(frozen=True)
class SegmentStats:
    index: int
    t_start: float
    t_stop: float
    rho: float
    mean_Lambda: float
    max_Lambda: float
    max_norm_f: float


@dataclass(frozen=True)
class ScenarioReport:
    label: str
    sigma0_norm: float
    epsilon: float
    T_c: float
    result: SimulationResult
    schedule: RhoSchedule
    segments: list[SegmentStats]
    max_norm_after_switch: float | None

    @property
    def series(self) -> TimeSeries:
        return self.result.series

    @property
    def t_bar(self) -> float | None:
        return self.result.t_bar

    @property
    def passed(self) -> bool:
        """Alcance antes de T_c y ‖σ‖ < ε tras el cambio de modo."""
        if self.result.status.is_fault or self.t_bar is None or self.t_bar >= self.T_c:
            return False
        return self.max_norm_after_switch is not None and self.max_norm_after_switch < self.epsilon

    def mean_Lambda(self, t_start: float, t_stop: float) -> float:
        mask = self.series.window(t_start, t_stop)
        if not mask.any():
            raise ValueError(f"Sin muestras en [{t_start}, {t_stop}]")
        return float(np.mean(self.series.Lambda[mask]))


def _segment_stats(series: TimeSeries, schedule: RhoSchedule, t_end: float) -> list[SegmentStats]:
    stats = []
    bounds = list(schedule.breakpoints) + [t_end]
    for i, rho in enumerate(schedule.values):
        t_start, t_stop = bounds[i], bounds[i + 1]
        mask = (series.t >= t_start) & (series.t < t_stop)
        if not mask.any():
            continue
        stats.append(SegmentStats(
            index=i,
            t_start=t_start,
            t_stop=t_stop,
            rho=rho,
            mean_Lambda=float(np.mean(series.Lambda[mask])),
            max_Lambda=float(np.max(series.Lambda[mask])),
            max_norm_f=float(np.max(series.norm_f[mask])),
        ))
    return stats


def disturbance_envelope(series: TimeSeries, schedule: RhoSchedule) -> np.ndarray:
    """Cota superior constante a trozos de ‖f‖: máximo observado en cada segmento de ρ."""
    envelope = np.zeros_like(series.norm_f)
    segments = np.array([schedule.segment_index(t) for t in series.t], dtype=int)
    for idx in np.unique(segments):
        mask = segments == idx
        envelope[mask] = np.max(series.norm_f[mask])
    return envelope


def run_scenario(label: str, sigma0, disturbance: DisturbanceParams, t_end: float,
                 settings: ScenarioSettings) -> ScenarioReport:
    controller = HybridController(arps=SCENARIO_ARPS, barrier=settings.barrier)
    cfg = SimConfig(dt=settings.dt, t_end=settings.t_end or t_end, record_stride=settings.record_stride)
    initial = StateVector(np.asarray(sigma0, dtype=float))
    result = simulate(RevisitedPlant(), controller, initial, cfg, disturbance)

    series = result.series
    after = series.mode == Mode.ADAPTIVE_PHASE.value
    max_after = float(np.max(series.norm_sigma[after])) if after.any() else None
    report = ScenarioReport(
        label=label,
        sigma0_norm=norm2(initial.sigma),
        epsilon=settings.barrier.epsilon,
        T_c=SCENARIO_ARPS.T_c,
        result=result,
        schedule=disturbance.rho_schedule,
        segments=_segment_stats(series, disturbance.rho_schedule, cfg.t_end),
        max_norm_after_switch=max_after,
    )
    logger.info(
        f"Escenario {label}: estado={result.status.value}, t_bar={report.t_bar}, "
        f"max ‖σ‖ tras el cambio={max_after}, superado={report.passed}")
    return report


def run_scenario1(settings: ScenarioSettings | None = None) -> list[ScenarioReport]:
    """Tres condiciones iniciales ‖σ0‖ ∈ {1, 5, 10} en la dirección (1, −1)/√2."""
    settings = settings or ScenarioSettings()
    return [
        run_scenario(f"1-{k + 1}", norm * _DIRECTION, SCENARIO1_DISTURBANCE, SCENARIO1_T_END, settings)
        for k, norm in enumerate(SCENARIO1_NORMS)
    ]


def run_scenario2(settings: ScenarioSettings | None = None) -> ScenarioReport:
    settings = settings or ScenarioSettings()
    return run_scenario("2", _DIRECTION, SCENARIO2_DISTURBANCE, SCENARIO2_T_END, settings)
