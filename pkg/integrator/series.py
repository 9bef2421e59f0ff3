import enum
import math
from dataclasses import dataclass, field

import numpy as np
import pandas as pd

from controllers.gains import DEFAULT_DEADZONE


class Termination(enum.Enum):
    COMPLETED = "Completed"
    REACHED = "Reached"
    HORIZON_EXCEEDED = "HorizonExceeded"
    BARRIER_BREACHED = "BarrierBreached"
    NON_FINITE = "NonFinite"
    SINGULAR = "Singular"

    @property
    def is_fault(self) -> bool:
        return self not in (Termination.COMPLETED, Termination.REACHED)


@dataclass(frozen=True)
class SimConfig:
    """Euler de paso fijo; se guarda una muestra cada record_stride pasos."""
    dt: float = 1e-6
    t_end: float = 1.0
    record_stride: int = 100
    deadzone: float = DEFAULT_DEADZONE
    stop_on_reach: bool = False

    def __post_init__(self):
        if self.dt <= 0.0:
            raise ValueError(f"dt debe ser > 0, recibido {self.dt}")
        if self.t_end <= 0.0:
            raise ValueError(f"t_end debe ser > 0, recibido {self.t_end}")
        if self.record_stride < 1:
            raise ValueError(f"record_stride debe ser >= 1, recibido {self.record_stride}")
        if self.deadzone < 0.0:
            raise ValueError(f"deadzone debe ser >= 0, recibido {self.deadzone}")

    @property
    def n_steps(self) -> int:
        # round() absorbe el error de representación de t_end/dt (p. ej. 0.1/1e-6).
        return int(round(self.t_end / self.dt))

    @property
    def expected_samples(self) -> int:
        return self.n_steps // self.record_stride + 1


@dataclass(frozen=True)
class ReachEvent:
    t_bar: float
    norm_at_event: float
    steps_taken: int


@dataclass(frozen=True)
class TimeSeries:
    """Trayectoria muestreada. beta_hat y k_hat acompañan en memoria pero no van al CSV."""
    t: np.ndarray
    sigma: np.ndarray
    norm_sigma: np.ndarray
    Lambda: np.ndarray
    norm_nu: np.ndarray
    norm_f: np.ndarray
    mode: np.ndarray
    beta_hat: np.ndarray = field(default=None)
    k_hat: np.ndarray = field(default=None)

    def __post_init__(self):
        for name in ("t", "sigma", "norm_sigma", "Lambda", "norm_nu", "norm_f", "mode", "beta_hat", "k_hat"):
            arr = getattr(self, name)
            if arr is not None:
                arr.setflags(write=False)

    def __len__(self) -> int:
        return self.t.shape[0]

    @property
    def m(self) -> int:
        return self.sigma.shape[1]

    def columns(self) -> list[str]:
        return ["t", *[f"sigma_{i + 1}" for i in range(self.m)], "norm_sigma", "Lambda", "norm_nu", "norm_f", "mode"]

    def to_frame(self) -> pd.DataFrame:
        data = {"t": self.t}
        for i in range(self.m):
            data[f"sigma_{i + 1}"] = self.sigma[:, i]
        data.update({
            "norm_sigma": self.norm_sigma,
            "Lambda": self.Lambda,
            "norm_nu": self.norm_nu,
            "norm_f": self.norm_f,
            "mode": self.mode,
        })
        return pd.DataFrame(data, columns=self.columns())

    def window(self, t_start: float, t_stop: float = math.inf) -> np.ndarray:
        """Máscara booleana de las muestras con t_start <= t <= t_stop."""
        return (self.t >= t_start) & (self.t <= t_stop)


class SeriesRecorder:
    """Acumula muestras y construye el TimeSeries final."""

    def __init__(self, m: int):
        self.m = m
        self._rows: list[tuple] = []
        self._sigmas: list[np.ndarray] = []

    def __len__(self) -> int:
        return len(self._rows)

    @property
    def last_t(self) -> float | None:
        return self._rows[-1][0] if self._rows else None

    def add(self, t, sigma, norm_sigma, Lambda, norm_nu, norm_f, mode, beta_hat, k_hat):
        self._rows.append((t, norm_sigma, Lambda, norm_nu, norm_f, mode, beta_hat, k_hat))
        self._sigmas.append(np.array(sigma, dtype=float))

    def build(self) -> TimeSeries:
        if self._rows:
            t, norm_sigma, Lambda, norm_nu, norm_f, mode, beta_hat, k_hat = map(list, zip(*self._rows))
            sigma = np.vstack(self._sigmas)
        else:
            t = norm_sigma = Lambda = norm_nu = norm_f = mode = beta_hat = k_hat = []
            sigma = np.empty((0, self.m))
        return TimeSeries(
            t=np.asarray(t, dtype=float),
            sigma=sigma,
            norm_sigma=np.asarray(norm_sigma, dtype=float),
            Lambda=np.asarray(Lambda, dtype=float),
            norm_nu=np.asarray(norm_nu, dtype=float),
            norm_f=np.asarray(norm_f, dtype=float),
            mode=np.asarray(mode, dtype=object),
            beta_hat=np.asarray(beta_hat, dtype=float),
            k_hat=np.asarray(k_hat, dtype=float),
        )


@dataclass(frozen=True)
class SimulationResult:
    series: TimeSeries
    reach: ReachEvent | None
    status: Termination
    message: str = ""

    @property
    def t_bar(self) -> float | None:
        return None if self.reach is None else self.reach.t_bar
