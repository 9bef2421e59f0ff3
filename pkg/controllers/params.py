import enum
from dataclasses import dataclass


class BarrierKind(enum.Enum):
    POSITIVE_DEFINITE = "pd"
    POSITIVE_SEMIDEFINITE = "psd"


@dataclass(frozen=True)
class ArpsParams:
    """Ganancia de la fase de alcance: α ∈ (0,1), cota de tiempo T_c > 0 y β̂(0)."""
    alpha: float = 0.4
    T_c: float = 0.1
    beta0: float = 0.0

    def __post_init__(self):
        if not 0.0 < self.alpha < 1.0:
            raise ValueError(f"alpha debe estar en (0,1), recibido {self.alpha}")
        if self.T_c <= 0.0:
            raise ValueError(f"T_c debe ser > 0, recibido {self.T_c}")
        if self.beta0 < 0.0:
            raise ValueError(f"beta0 debe ser >= 0, recibido {self.beta0}")


@dataclass(frozen=True)
class BarrierSpec:
    kind: BarrierKind = BarrierKind.POSITIVE_SEMIDEFINITE
    epsilon: float = 0.05
    beta_bar: float = 0.0

    def __post_init__(self):
        if self.epsilon <= 0.0:
            raise ValueError(f"epsilon debe ser > 0, recibido {self.epsilon}")
        if self.beta_bar < 0.0:
            raise ValueError(f"beta_bar debe ser >= 0, recibido {self.beta_bar}")
        if self.kind is BarrierKind.POSITIVE_SEMIDEFINITE and self.beta_bar != 0.0:
            raise ValueError("La barrera semidefinida positiva exige beta_bar = 0")


@dataclass(frozen=True)
class BaselineParams:
    """Ley adaptativa de referencia k̂̇ = K̄‖σ‖, k̂(0) = k0."""
    K_bar: float = 100.0
    k0: float = 0.0

    def __post_init__(self):
        if self.K_bar <= 0.0:
            raise ValueError(f"K_bar debe ser > 0, recibido {self.K_bar}")
        if self.k0 < 0.0:
            raise ValueError(f"k0 debe ser >= 0, recibido {self.k0}")
