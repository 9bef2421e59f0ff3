import math
from dataclasses import dataclass

import numpy as np

from core.types import Mat, Vec
from plants.disturbance import DisturbanceParams
from plants.motivating import motivating_f

_G = np.array([[2.0, -3.0], [0.0, 3.0]])
_G.setflags(write=False)


def revisited_G() -> Mat:
    return _G


def revisited_dg(t: float, sigma: Vec) -> Mat:
    c1 = math.cos(sigma[0])
    shared = 0.2 * c1 + 0.1 * math.sin(5.0 * t + sigma[1])
    return np.array([
        [0.5 * c1, shared],
        [0.0, shared],
    ])


@dataclass(frozen=True)
class RevisitedPlant:
    """G constante de rango 2, incertidumbre Δg(t,σ) y la misma f que el ejemplo motivador."""
    name: str = "revisited"
    m: int = 2

    def eval_G(self, t: float, sigma: Vec) -> Mat:
        return _G

    def eval_dg(self, t: float, sigma: Vec) -> Mat:
        return revisited_dg(t, sigma)

    def eval_f(self, t: float, sigma: Vec, p: DisturbanceParams) -> Vec:
        return motivating_f(t, sigma, p)
