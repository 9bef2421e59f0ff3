from .euler import reach_time, simulate, step, step_robustness
from .series import ReachEvent, SeriesRecorder, SimConfig, SimulationResult, Termination, TimeSeries

__all__ = [
    "reach_time",
    "simulate",
    "step",
    "step_robustness",
    "ReachEvent",
    "SeriesRecorder",
    "SimConfig",
    "SimulationResult",
    "Termination",
    "TimeSeries",
]
