from typing import Protocol, runtime_checkable

from core.types import Mat, Vec
from plants.disturbance import DisturbanceParams


@runtime_checkable
class PlantSpec(Protocol):
    """
    Sistema incierto de primer orden
        σ̇ = G(t,σ)[I + Δg(t,σ)]u + f(t,σ)
    G es conocida por el controlador; Δg y f no.
    """
    name: str
    m: int

    def eval_G(self, t: float, sigma: Vec) -> Mat: ...

    def eval_dg(self, t: float, sigma: Vec) -> Mat: ...

    def eval_f(self, t: float, sigma: Vec, p: DisturbanceParams) -> Vec: ...
