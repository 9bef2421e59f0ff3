from .equivalence import OracleReport, check_vanishing_perturbation, equivalence_deviation, run_oracle
from .lyapunov import LyapunovSample, LyapunovTrace, lyapunov_trace
from .scaled_sim import DEFAULT_DTAU, ScaledSeries, simulate_scaled
from .scaling import ScaleMap, default_tau_max, kappa_bar_inv, t_of_tau, tau_of_t

__all__ = [
    "OracleReport",
    "check_vanishing_perturbation",
    "equivalence_deviation",
    "run_oracle",
    "LyapunovSample",
    "LyapunovTrace",
    "lyapunov_trace",
    "DEFAULT_DTAU",
    "ScaledSeries",
    "simulate_scaled",
    "ScaleMap",
    "default_tau_max",
    "kappa_bar_inv",
    "t_of_tau",
    "tau_of_t",
]
