import enum
import logging
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from core.types import StateVector
from controllers.laws import ArpsController, BaselineController
from controllers.params import ArpsParams, BaselineParams
from integrator.euler import simulate
from integrator.series import SimConfig, Termination
from plants.disturbance import DisturbanceParams
from plants.motivating import MotivatingPlant
from plants.revisited import RevisitedPlant

logger = logging.getLogger(__name__)

RHO_RANGE = (0.0, 1000.0)
N_RANGE = (1, 4)
B_RANGE = (1.0, 9.0)

SWEEP_EPSILON = 0.05
SWEEP_DISTURBANCE = dict(a1=1.0, b1=1.2, omega1=3.0, omega2=2.0)
SWEEP_ARPS = ArpsParams(alpha=0.4, T_c=0.1, beta0=0.0)
SWEEP_BASELINE = BaselineParams(K_bar=100.0, k0=0.0)
BASELINE_T_END = 2.0
ARPS_SWEEP_DT = 1e-5
# k̂·dt < ε/2 también en ‖σ0‖ = 9·10⁴; con 1e-5 el castañeo de Euler impide el alcance.
BASELINE_SWEEP_DT = 1e-6


class ControllerKind(enum.Enum):
    BASELINE = "baseline"
    ARPS = "arps"


class PointStatus(enum.Enum):
    REACHED = "Reached"
    HORIZON_EXCEEDED = "HorizonExceeded"
    FAULT = "Fault"


@dataclass(frozen=True)
class SweepGrid:
    rho_values: tuple[float, ...]
    n_values: tuple[int, ...]
    b_values: tuple[float, ...]
    allow_wide: bool = False

    def __post_init__(self):
        if not self.rho_values or not self.n_values or not self.b_values:
            raise ValueError("La malla de barrido no puede tener listas vacías")
        if any(r < 0 for r in self.rho_values):
            raise ValueError(f"rho debe ser >= 0: {self.rho_values}")
        if not self.allow_wide:
            checks = [
                ("rho", self.rho_values, RHO_RANGE),
                ("n", self.n_values, N_RANGE),
                ("b", self.b_values, B_RANGE),
            ]
            for name, values, (low, high) in checks:
                outside = [v for v in values if not low <= v <= high]
                if outside:
                    raise ValueError(f"Valores de {name} fuera de [{low}, {high}]: {outside}")

    def points(self) -> list[tuple[float, int, float]]:
        """Orden determinista: ρ, después n, después b."""
        return [(float(r), int(n), float(b)) for r in self.rho_values for n in self.n_values for b in self.b_values]

    def __len__(self) -> int:
        return len(self.rho_values) * len(self.n_values) * len(self.b_values)


def ci_grid() -> SweepGrid:
    return SweepGrid((0.0, 250.0, 500.0, 750.0, 1000.0), (1, 2, 3, 4), (1.0, 5.0, 9.0))


def dense_grid() -> SweepGrid:
    return SweepGrid(tuple(float(r) for r in np.linspace(0.0, 1000.0, 11)), (1, 2, 3, 4),
                     tuple(float(b) for b in range(1, 10)))


def sigma0_from(n: int, b: float) -> np.ndarray:
    """σ0 = (b/√2)(10ⁿ, −10ⁿ), ‖σ0‖ = b·10ⁿ."""
    scale = b / math.sqrt(2.0) * 10.0 ** n
    return np.array([scale, -scale])


@dataclass(frozen=True)
class SweepEntry:
    rho: float
    n: int
    b: float
    t_bar: float | None
    status: PointStatus


@dataclass(frozen=True)
class SweepResult:
    controller_kind: ControllerKind
    entries: list[SweepEntry] = field(default_factory=list)

    def __len__(self) -> int:
        return len(self.entries)

    @property
    def all_reached(self) -> bool:
        return all(e.status is PointStatus.REACHED for e in self.entries)

    def reach_times(self) -> list[float]:
        return [e.t_bar for e in self.entries if e.t_bar is not None]

    @property
    def max_t_bar(self) -> float | None:
        times = self.reach_times()
        return max(times) if times else None

    @property
    def min_t_bar(self) -> float | None:
        times = self.reach_times()
        return min(times) if times else None

    def lookup(self, rho: float, n: int, b: float) -> SweepEntry:
        for entry in self.entries:
            if entry.rho == rho and entry.n == n and entry.b == b:
                return entry
        raise KeyError((rho, n, b))


@dataclass(frozen=True)
class SweepSettings:
    """dt=None usa el paso por defecto de cada controlador."""
    dt: float | None = None
    baseline_t_end: float = BASELINE_T_END

    def step_for(self, kind: ControllerKind) -> float:
        if self.dt is not None:
            return self.dt
        return BASELINE_SWEEP_DT if kind is ControllerKind.BASELINE else ARPS_SWEEP_DT


def _point_setup(kind: ControllerKind, rho: float, settings: SweepSettings):
    disturbance = DisturbanceParams(rho=rho, **SWEEP_DISTURBANCE)
    if kind is ControllerKind.ARPS:
        plant = RevisitedPlant()
        controller = ArpsController(SWEEP_ARPS, epsilon=SWEEP_EPSILON)
        t_end = SWEEP_ARPS.T_c
    else:
        plant = MotivatingPlant()
        controller = BaselineController(SWEEP_BASELINE, epsilon=SWEEP_EPSILON)
        t_end = settings.baseline_t_end
    dt = settings.step_for(kind)
    n_steps = int(round(t_end / dt))
    cfg = SimConfig(dt=dt, t_end=t_end, record_stride=max(1, n_steps), stop_on_reach=True)
    return plant, controller, cfg, disturbance


def run_point(kind: ControllerKind, rho: float, n: int, b: float, settings: SweepSettings) -> SweepEntry:
    plant, controller, cfg, disturbance = _point_setup(kind, rho, settings)
    result = simulate(plant, controller, StateVector(sigma0_from(n, b)), cfg, disturbance)
    if result.reach is not None:
        status = PointStatus.REACHED
    elif result.status in (Termination.HORIZON_EXCEEDED, Termination.COMPLETED):
        status = PointStatus.HORIZON_EXCEEDED
    else:
        status = PointStatus.FAULT
    return SweepEntry(rho=rho, n=n, b=b, t_bar=result.t_bar, status=status)


def _run_point_packed(args) -> SweepEntry:
    return run_point(*args)


def run_sweep(controller_kind: ControllerKind, grid: SweepGrid, settings: SweepSettings | None = None,
              workers: int = 1) -> SweepResult:
    """
    Una simulación por punto de la malla. Los fallos por punto se agregan en el
    estado de la entrada sin abortar el barrido; el orden del resultado es el de la malla.
    """
    settings = settings or SweepSettings()
    jobs = [(controller_kind, rho, n, b, settings) for rho, n, b in grid.points()]
    dt = settings.step_for(controller_kind)
    logger.info(f"Barrido {controller_kind.value}: {len(jobs)} puntos, dt={dt:g}, workers={workers}")

    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            entries = list(pool.map(_run_point_packed, jobs))
    else:
        entries = [_run_point_packed(job) for job in jobs]

    for entry in entries:
        if entry.status is not PointStatus.REACHED:
            logger.warning(f"Punto rho={entry.rho}, n={entry.n}, b={entry.b} terminó con {entry.status.value}")
    result = SweepResult(controller_kind=controller_kind, entries=entries)
    logger.info(f"Barrido finalizado: max t_bar={result.max_t_bar}, todos alcanzados={result.all_reached}")
    return result
