import math
from dataclasses import dataclass

from core.errors import DomainError


@dataclass(frozen=True)
class ScaleMap:
    """t = T_c(1 − e^{−ατ})  ⇔  τ = −α⁻¹ ln(1 − t/T_c)."""
    alpha: float
    T_c: float

    def __post_init__(self):
        if not 0.0 < self.alpha < 1.0:
            raise ValueError(f"alpha debe estar en (0,1), recibido {self.alpha}")
        if self.T_c <= 0.0:
            raise ValueError(f"T_c debe ser > 0, recibido {self.T_c}")


def t_of_tau(tau: float, scale: ScaleMap) -> float:
    if tau < 0.0:
        raise DomainError(f"tau debe ser >= 0, recibido {tau}")
    return -scale.T_c * math.expm1(-scale.alpha * tau)


def tau_of_t(t: float, scale: ScaleMap) -> float:
    if not 0.0 <= t < scale.T_c:
        raise DomainError(f"t={t} fuera de [0, T_c={scale.T_c})")
    return -math.log1p(-t / scale.T_c) / scale.alpha


def kappa_bar_inv(tau: float, scale: ScaleMap) -> float:
    """κ̄(τ)⁻¹ = αT_c e^{−ατ} = dt/dτ."""
    return scale.alpha * scale.T_c * math.exp(-scale.alpha * tau)


def default_tau_max(scale: ScaleMap, fraction: float = 0.999) -> float:
    return tau_of_t(fraction * scale.T_c, scale)
