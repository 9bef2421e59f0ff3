import math
from dataclasses import dataclass

import numpy as np

from core.types import Mat, Vec
from plants.disturbance import DisturbanceParams

_IDENTITY_2 = np.eye(2)


def motivating_f(t: float, sigma: Vec, p: DisturbanceParams) -> Vec:
    """Perturbación acoplada del ejemplo motivador (lineal en ρ salvo offsets_per_rho)."""
    rho = p.rho_at(t)
    s2 = sigma[1]
    osc1 = 0.4 * math.sin(p.omega1 * t) + 0.01 * math.cos(20.0 * t + s2)
    osc2 = 0.2 * math.sin(p.omega2 * t) + 0.02 * math.cos(15.0 * t + s2)
    if p.offsets_per_rho:
        return np.array([p.a1 + rho * osc1, p.b1 + rho * osc2])
    return np.array([rho * (p.a1 + osc1), rho * (p.b1 + osc2)])


def motivating_H(t: float, sigma: Vec) -> Mat:
    """Matriz de entrada H(t,σ) del ejemplo motivador; la entrada (2,1) es siempre 0."""
    c1 = math.cos(sigma[0])
    s5 = math.sin(5.0 * t + sigma[1])
    return np.array([
        [1.0 + 0.5 * c1, 13.0 / 30.0 * c1 - s5 / 30.0],
        [0.0, 1.0 + 0.2 * c1 + 0.1 * s5],
    ])


@dataclass(frozen=True)
class MotivatingPlant:
    """
    σ̇ = H(t,σ)ν + f(t,σ,ρ).
    Se expresa en la interfaz genérica con G ≡ I (parte conocida) y Δg = H − I
    (parte desconocida), así u = G⁻¹ν = ν y el lazo cerrado es exactamente Hν + f.
    """
    name: str = "motivating"
    m: int = 2

    def eval_G(self, t: float, sigma: Vec) -> Mat:
        return _IDENTITY_2

    def eval_dg(self, t: float, sigma: Vec) -> Mat:
        return motivating_H(t, sigma) - _IDENTITY_2

    def eval_f(self, t: float, sigma: Vec, p: DisturbanceParams) -> Vec:
        return motivating_f(t, sigma, p)
