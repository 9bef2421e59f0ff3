import bisect
from dataclasses import dataclass, field


@dataclass(frozen=True)
class RhoSchedule:
    """
    ρ constante a trozos, intervalos cerrados por la izquierda:
    ρ(t) = values[i] para breakpoints[i] <= t < breakpoints[i+1].
    El primer breakpoint es 0.
    """
    breakpoints: tuple[float, ...]
    values: tuple[float, ...]

    def __post_init__(self):
        if len(self.breakpoints) != len(self.values) or not self.breakpoints:
            raise ValueError("breakpoints y values deben tener la misma longitud (>= 1)")
        if self.breakpoints[0] != 0.0:
            raise ValueError("El primer breakpoint debe ser 0")
        if any(later <= earlier for earlier, later in zip(self.breakpoints, self.breakpoints[1:])):
            raise ValueError(f"breakpoints no estrictamente crecientes: {self.breakpoints}")
        if any(v < 0 for v in self.values):
            raise ValueError(f"rho debe ser >= 0: {self.values}")

    def __call__(self, t: float) -> float:
        return self.values[bisect.bisect_right(self.breakpoints, t) - 1]

    def segment_index(self, t: float) -> int:
        return bisect.bisect_right(self.breakpoints, t) - 1

    @classmethod
    def parse(cls, text: str) -> "RhoSchedule":
        """Formato 't0:rho0,t1:rho1,...', p. ej. '0:80,0.2:50,0.4:10'."""
        pairs = []
        for chunk in text.split(","):
            chunk = chunk.strip()
            if not chunk:
                continue
            t_str, rho_str = chunk.split(":")
            pairs.append((float(t_str), float(rho_str)))
        return cls(tuple(p[0] for p in pairs), tuple(p[1] for p in pairs))

    def format(self) -> str:
        return ",".join(f"{b!r}:{v!r}" for b, v in zip(self.breakpoints, self.values))


@dataclass(frozen=True)
class DisturbanceParams:
    """
    Parámetros de la perturbación acoplada f(t, σ, ρ).
    Con offsets_per_rho=True los términos constantes se leen como a1/ρ y b1/ρ
    (los escenarios fijan a = 1/ρ, b = 1.2/ρ por segmento), de modo que
    ρ·a1/ρ = a1 sin dividir por ρ.
    """
    rho: float = 0.0
    a1: float = 1.0
    b1: float = 1.2
    omega1: float = 3.0
    omega2: float = 2.0
    rho_schedule: RhoSchedule | None = field(default=None)
    offsets_per_rho: bool = False

    def __post_init__(self):
        if self.rho < 0:
            raise ValueError(f"rho debe ser >= 0, recibido {self.rho}")

    def rho_at(self, t: float) -> float:
        if self.rho_schedule is not None:
            return self.rho_schedule(t)
        return self.rho
