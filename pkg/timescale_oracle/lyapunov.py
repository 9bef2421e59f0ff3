from dataclasses import dataclass

import numpy as np

from timescale_oracle.scaled_sim import ScaledSeries

DEFAULT_RTOL = 1e-6


@dataclass(frozen=True)
class LyapunovSample:
    tau: float
    V: float
    V1: float
    V2: float


@dataclass(frozen=True)
class LyapunovTrace:
    samples: list[LyapunovSample]
    beta_star: float
    b0: float
    max_increment: float
    max_rate: float
    max_V: float

    def nonincreasing(self, rtol: float = DEFAULT_RTOL) -> bool:
        """V no crece más que rtol·max V entre muestras consecutivas."""
        return self.max_increment <= rtol * self.max_V


def lyapunov_trace(scaled: ScaledSeries, beta_star: float, b0: float) -> LyapunovTrace:
    """V = ‖y‖² + b0(β̃ − β*)² a lo largo de la traza; diferencias hacia adelante."""
    V1 = scaled.norm_y ** 2
    V2 = b0 * (scaled.beta_tilde - beta_star) ** 2
    V = V1 + V2
    samples = [LyapunovSample(float(tau), float(v), float(v1), float(v2))
               for tau, v, v1, v2 in zip(scaled.tau, V, V1, V2)]
    if V.size > 1:
        dV = np.diff(V)
        max_increment = float(np.max(dV))
        max_rate = float(np.max(dV / np.diff(scaled.tau)))
    else:
        max_increment = max_rate = 0.0
    return LyapunovTrace(
        samples=samples,
        beta_star=beta_star,
        b0=b0,
        max_increment=max_increment,
        max_rate=max_rate,
        max_V=float(np.max(V)) if V.size else 0.0,
    )
