import dataclasses

from core.errors import BarrierBreached, DeadzoneHit, TimeHorizonExceeded
from core.linalg import invert, norm2
from core.types import GainState, Mat, Mode, Vec
from controllers.params import ArpsParams, BarrierKind, BarrierSpec, BaselineParams

DEFAULT_DEADZONE = 1e-12


def unit_vector_control(sigma: Vec, Lambda: float, G: Mat,
                        deadzone: float = DEFAULT_DEADZONE) -> tuple[Vec, Vec]:
    """ν = −Λσ/‖σ‖, u = G⁻¹ν. Devuelve (u, ν)."""
    norm = norm2(sigma)
    if norm < deadzone:
        raise DeadzoneHit(f"‖σ‖={norm:.3e} por debajo de la zona muerta {deadzone:.1e}")
    nu = (-Lambda / norm) * sigma
    return invert(G) @ nu, nu


def arps_gain(t: float, norm_sigma: float, beta_hat: float, p: ArpsParams) -> float:
    """Λ = β̂ + ‖σ‖/(α(T_c − t))."""
    if t >= p.T_c:
        raise TimeHorizonExceeded(f"t={t:.9g} >= T_c={p.T_c:.9g}: κ(t) no está definido")
    return beta_hat + norm_sigma / (p.alpha * (p.T_c - t))


def arps_gain_rate(norm_sigma: float) -> float:
    return norm_sigma


def baseline_gain_rate(norm_sigma: float, p: BaselineParams) -> float:
    return p.K_bar * norm_sigma


def barrier_gain(norm_sigma: float, spec: BarrierSpec) -> float:
    """
    K_pd = β̄ε/(ε − ‖σ‖), K_psd = ‖σ‖/(ε − ‖σ‖).
    Ambas crecen estrictamente en [0, ε) con asíntota vertical en ε.
    """
    gap = spec.epsilon - norm_sigma
    if gap <= 0.0:
        raise BarrierBreached(f"‖σ‖={norm_sigma:.9g} >= ε={spec.epsilon:.9g}")
    if spec.kind is BarrierKind.POSITIVE_DEFINITE:
        return spec.beta_bar * spec.epsilon / gap
    return norm_sigma / gap


def barrier_root_s(spec: BarrierSpec, beta_star: float) -> float:
    """Raíz s de K_BF(s) = β*; siempre s < ε. Solo para análisis: β* no se conoce en línea."""
    if beta_star <= 0.0:
        raise ValueError(f"beta_star debe ser > 0, recibido {beta_star}")
    eps = spec.epsilon
    if spec.kind is BarrierKind.POSITIVE_DEFINITE:
        if spec.beta_bar < beta_star:
            return eps * (1.0 - spec.beta_bar / beta_star)
        return 0.0
    return eps * beta_star / (1.0 + beta_star)


def switch_threshold(spec: BarrierSpec) -> float:
    return 0.5 * spec.epsilon


def hybrid_gain(t: float, norm_sigma: float, gain_state: GainState, arps: ArpsParams,
                barrier: BarrierSpec) -> tuple[float, GainState]:
    """
    Ganancia conmutada: ARPS mientras mode = RP; en el primer instante con
    ‖σ‖ <= ε/2 pasa a ASP (una sola vez, registrando t̄) y usa la barrera.
    """
    if gain_state.mode is Mode.REACHING_PHASE:
        if norm_sigma > switch_threshold(barrier):
            return arps_gain(t, norm_sigma, gain_state.beta_hat, arps), gain_state
        gain_state = dataclasses.replace(gain_state, mode=Mode.ADAPTIVE_PHASE, t_bar=t)
    return barrier_gain(norm_sigma, barrier), gain_state


__all__ = [
    "DEFAULT_DEADZONE",
    "unit_vector_control",
    "arps_gain",
    "arps_gain_rate",
    "baseline_gain_rate",
    "barrier_gain",
    "barrier_root_s",
    "switch_threshold",
    "hybrid_gain",
]
