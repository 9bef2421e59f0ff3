import enum
from dataclasses import dataclass, field

import numpy as np
import numpy.typing as npt

Vec = npt.NDArray[np.float64]
Mat = npt.NDArray[np.float64]


class Mode(enum.Enum):
    REACHING_PHASE = "RP"
    ADAPTIVE_PHASE = "ASP"


@dataclass(frozen=True)
class StateVector:
    """Variable deslizante σ más el reloj de simulación."""
    sigma: Vec
    t: float = 0.0

    def __post_init__(self):
        sigma = np.asarray(self.sigma, dtype=float)
        if sigma.ndim != 1:
            raise ValueError(f"sigma debe ser un vector, recibido shape={sigma.shape}")
        if self.t < 0:
            raise ValueError(f"t debe ser >= 0, recibido {self.t}")
        object.__setattr__(self, "sigma", sigma)

    @property
    def m(self) -> int:
        return self.sigma.shape[0]


@dataclass(frozen=True)
class GainState:
    """
    Estado de los integradores adaptativos.
    beta_hat (ARPS) y k_hat (ley de referencia) solo crecen; el modo pasa de
    RP a ASP una única vez y t_bar queda registrado en ese instante.
    """
    beta_hat: float = 0.0
    k_hat: float = 0.0
    mode: Mode = Mode.REACHING_PHASE
    t_bar: float | None = field(default=None)

    def __post_init__(self):
        if self.beta_hat < 0 or self.k_hat < 0:
            raise ValueError("beta_hat y k_hat deben ser no negativos")
        if (self.t_bar is not None) != (self.mode is Mode.ADAPTIVE_PHASE):
            raise ValueError("t_bar se define si y solo si mode = ADAPTIVE_PHASE")
