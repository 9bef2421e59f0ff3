import dataclasses
from dataclasses import dataclass, field
from typing import Protocol

from core.types import GainState, Mode
from controllers.gains import arps_gain, arps_gain_rate, baseline_gain_rate, hybrid_gain
from controllers.params import ArpsParams, BarrierSpec, BaselineParams

DEFAULT_EPSILON = 0.05


class Controller(Protocol):
    """Ley de ganancia Λ(t,σ) con su integrador adaptativo."""
    name: str

    @property
    def reach_threshold(self) -> float: ...

    def initial_state(self) -> GainState: ...

    def gain(self, t: float, norm_sigma: float, state: GainState) -> tuple[float, GainState]: ...

    def advance(self, state: GainState, norm_sigma: float, dt: float) -> GainState: ...

    def rp_horizon(self, state: GainState) -> float | None: ...


@dataclass(frozen=True)
class FixedGainController:
    """Control vectorial unitario clásico con Λ constante."""
    Lambda: float = 1.0
    epsilon: float = DEFAULT_EPSILON
    name: str = field(default="fixed")

    @property
    def reach_threshold(self) -> float:
        return 0.5 * self.epsilon

    def initial_state(self) -> GainState:
        return GainState()

    def gain(self, t, norm_sigma, state):
        return self.Lambda, state

    def advance(self, state, norm_sigma, dt):
        return state

    def rp_horizon(self, state):
        return None


@dataclass(frozen=True)
class BaselineController:
    """Λ = k̂, k̂̇ = K̄‖σ‖ (tiempo de alcance no uniforme)."""
    params: BaselineParams = field(default_factory=BaselineParams)
    epsilon: float = DEFAULT_EPSILON
    name: str = field(default="baseline")

    @property
    def reach_threshold(self) -> float:
        return 0.5 * self.epsilon

    def initial_state(self) -> GainState:
        return GainState(k_hat=self.params.k0)

    def gain(self, t, norm_sigma, state):
        return state.k_hat, state

    def advance(self, state, norm_sigma, dt):
        return dataclasses.replace(state, k_hat=state.k_hat + dt * baseline_gain_rate(norm_sigma, self.params))

    def rp_horizon(self, state):
        return None


@dataclass(frozen=True)
class ArpsController:
    """Solo fase de alcance: Λ = β̂ + κ(t)‖σ‖, válida para t < T_c."""
    params: ArpsParams = field(default_factory=ArpsParams)
    epsilon: float = DEFAULT_EPSILON
    name: str = field(default="arps")

    @property
    def reach_threshold(self) -> float:
        return 0.5 * self.epsilon

    def initial_state(self) -> GainState:
        return GainState(beta_hat=self.params.beta0)

    def gain(self, t, norm_sigma, state):
        return arps_gain(t, norm_sigma, state.beta_hat, self.params), state

    def advance(self, state, norm_sigma, dt):
        return dataclasses.replace(state, beta_hat=state.beta_hat + dt * arps_gain_rate(norm_sigma))

    def rp_horizon(self, state):
        return self.params.T_c


@dataclass(frozen=True)
class HybridController:
    """ARPS hasta ‖σ‖ <= ε/2 y después ganancia de barrera; β̂ se congela en ASP."""
    arps: ArpsParams = field(default_factory=ArpsParams)
    barrier: BarrierSpec = field(default_factory=BarrierSpec)
    name: str = field(default="hybrid")

    @property
    def epsilon(self) -> float:
        return self.barrier.epsilon

    @property
    def reach_threshold(self) -> float:
        return 0.5 * self.barrier.epsilon

    def initial_state(self) -> GainState:
        return GainState(beta_hat=self.arps.beta0)

    def gain(self, t, norm_sigma, state):
        return hybrid_gain(t, norm_sigma, state, self.arps, self.barrier)

    def advance(self, state, norm_sigma, dt):
        if state.mode is Mode.ADAPTIVE_PHASE:
            return state
        return dataclasses.replace(state, beta_hat=state.beta_hat + dt * arps_gain_rate(norm_sigma))

    def rp_horizon(self, state):
        if state.mode is Mode.ADAPTIVE_PHASE:
            return None
        return self.arps.T_c
