import itertools
import logging
import math
from dataclasses import dataclass

import numpy as np

from core.linalg import invert, mat_inf_norm, min_eig_sym_part, norm2
from plants.base import PlantSpec
from plants.disturbance import DisturbanceParams

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class AssumptionReport:
    """
    Peores casos de las hipótesis 1–3 sobre la malla muestreada (sin garantía fuera de ella).
    q_est: max ‖GΔgG⁻¹‖∞; q1_est: min λ_min de la parte simétrica; d_est: max ‖f‖.
    """
    rank_ok: bool
    q_est: float
    q1_est: float
    d_est: float
    grid_size: int
    t_range: tuple[float, float]
    sigma_range: tuple[float, float]

    @property
    def b0_est(self) -> float:
        return 1.0 + self.q1_est

    @property
    def beta_star_est(self) -> float:
        """β* = d/b0 con las estimaciones empíricas."""
        return self.d_est / self.b0_est

    @property
    def passed(self) -> bool:
        return self.rank_ok and self.q_est < 1.0 and self.q1_est > -1.0


def default_t_grid(t_max: float = 10.0, points: int = 21) -> np.ndarray:
    return np.linspace(0.0, t_max, points)


def default_sigma_grid(points: int = 21) -> np.ndarray:
    # Δg y f dependen de σ solo a través de cos/sin: un periodo cubre todo ℝ².
    return np.linspace(-math.pi, math.pi, points)


def check_assumptions(plant: PlantSpec, p: DisturbanceParams, t_grid, sigma_grid) -> AssumptionReport:
    """
    Evalúa rango de G, ‖GΔgG⁻¹‖∞, λ_min(½(ΔG+ΔGᵀ)) y ‖f‖ en cada punto de
    t_grid × sigma_grid^m y devuelve los peores casos.
    """
    t_grid = np.asarray(t_grid, dtype=float)
    sigma_grid = np.asarray(sigma_grid, dtype=float)
    if t_grid.size == 0 or sigma_grid.size == 0:
        raise ValueError("Las mallas de verificación no pueden estar vacías")

    rank_ok = True
    q_est = 0.0
    q1_est = math.inf
    d_est = 0.0
    count = 0
    full_rank = 0
    for t in t_grid:
        for point in itertools.product(sigma_grid, repeat=plant.m):
            sigma = np.array(point)
            G = plant.eval_G(t, sigma)
            d_est = max(d_est, norm2(plant.eval_f(t, sigma, p)))
            count += 1
            if np.linalg.matrix_rank(G) < plant.m:
                logger.warning(f"G sin rango completo en t={t:.6g}, sigma={sigma}")
                rank_ok = False
                continue
            full_rank += 1
            # invert puede seguir lanzando SingularMatrix si G está mal condicionada.
            delta_G = G @ plant.eval_dg(t, sigma) @ invert(G)
            q_est = max(q_est, mat_inf_norm(delta_G))
            q1_est = min(q1_est, min_eig_sym_part(delta_G))

    if full_rank == 0:
        # Sin ningún punto de rango completo ΔG no está definida.
        q_est = q1_est = math.nan

    report = AssumptionReport(
        rank_ok=rank_ok,
        q_est=q_est,
        q1_est=q1_est,
        d_est=d_est,
        grid_size=count,
        t_range=(float(t_grid.min()), float(t_grid.max())),
        sigma_range=(float(sigma_grid.min()), float(sigma_grid.max())),
    )
    logger.info(
        f"Hipótesis en '{plant.name}' sobre {count} puntos: rank_ok={rank_ok}, "
        f"q={q_est:.6g}, q1={q1_est:.6g}, d={d_est:.6g}")
    return report
