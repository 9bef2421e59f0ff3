import logging
from dataclasses import dataclass

import numpy as np
import pandas as pd

from core.errors import NonFiniteState, SingularMatrix
from core.linalg import as_vec, invert, norm2
from controllers.params import ArpsParams
from integrator.series import SimConfig
from plants.base import PlantSpec
from plants.disturbance import DisturbanceParams
from timescale_oracle.scaling import ScaleMap, kappa_bar_inv, t_of_tau

logger = logging.getLogger(__name__)

DEFAULT_DTAU = 1e-5


@dataclass(frozen=True)
class ScaledSeries:
    """Trayectoria del sistema escalado, muestreada en τ."""
    tau: np.ndarray
    t: np.ndarray
    y: np.ndarray
    norm_y: np.ndarray
    beta_tilde: np.ndarray
    norm_f_bar: np.ndarray
    kappa_bar_inv: np.ndarray
    status: str = "Completed"

    def __len__(self) -> int:
        return self.tau.shape[0]

    @property
    def m(self) -> int:
        return self.y.shape[1]

    def to_frame(self) -> pd.DataFrame:
        data = {"tau": self.tau, "t": self.t}
        for i in range(self.m):
            data[f"sigma_{i + 1}"] = self.y[:, i]
        data.update({
            "norm_sigma": self.norm_y,
            "beta_tilde": self.beta_tilde,
            "norm_f_bar": self.norm_f_bar,
        })
        return pd.DataFrame(data)


def simulate_scaled(plant: PlantSpec, arps: ArpsParams, y0, cfg: SimConfig,
                    disturbance: DisturbanceParams | None = None) -> ScaledSeries:
    """
    Euler en τ (paso cfg.dt, horizonte cfg.t_end interpretado como τ_max) de
        y′ = −(I + ΔḠ)(κ̄⁻¹β̃·y/‖y‖ + y) + f̄,   β̃′ = κ̄⁻¹‖y‖,
    con ΔḠ = GΔgG⁻¹ y f̄ = κ̄⁻¹f evaluados en (t(τ), y).
    """
    p = disturbance or DisturbanceParams()
    scale = ScaleMap(arps.alpha, arps.T_c)
    y = as_vec(y0).copy()
    if norm2(y) <= 0.0:
        raise ValueError("y0 debe ser no nulo")
    identity = np.eye(y.shape[0])
    beta = arps.beta0
    dtau = cfg.dt
    n_steps = cfg.n_steps
    rows = []
    ys = []
    status = "Completed"

    logger.info(f"Simulación escalada: planta={plant.name}, ‖y0‖={norm2(y):.6g}, dτ={dtau:g}, τ_max={cfg.t_end:g}")
    try:
        for i in range(n_steps + 1):
            tau = i * dtau
            t = t_of_tau(tau, scale)
            kinv = kappa_bar_inv(tau, scale)
            G = plant.eval_G(t, y)
            delta_G = G @ plant.eval_dg(t, y) @ invert(G)
            f_bar = kinv * plant.eval_f(t, y, p)
            norm_y = norm2(y)
            if i % cfg.record_stride == 0 or i == n_steps:
                rows.append((tau, t, norm_y, beta, norm2(f_bar), kinv))
                ys.append(y.copy())
            if i == n_steps:
                break
            if norm_y < cfg.deadzone:
                v = -y
            else:
                v = -(kinv * beta / norm_y) * y - y
            y = y + dtau * ((identity + delta_G) @ v + f_bar)
            beta = beta + dtau * kinv * norm_y
            if not np.all(np.isfinite(y)):
                raise NonFiniteState(f"Estado escalado no finito en τ={tau + dtau:.9g}")
    except (NonFiniteState, SingularMatrix) as exc:
        status = type(exc).__name__
        logger.warning(f"Simulación escalada interrumpida: {exc}")

    # Un fallo en el primer paso deja la serie vacía.
    columns = list(zip(*rows)) if rows else [()] * 6
    tau_a, t_a, norm_a, beta_a, f_a, k_a = (np.asarray(c, dtype=float) for c in columns)
    return ScaledSeries(
        tau=tau_a,
        t=t_a,
        y=np.vstack(ys) if ys else np.empty((0, y.shape[0])),
        norm_y=norm_a,
        beta_tilde=beta_a,
        norm_f_bar=f_a,
        kappa_bar_inv=k_a,
        status=status,
    )
