from .gains import (
    DEFAULT_DEADZONE,
    arps_gain,
    arps_gain_rate,
    barrier_gain,
    barrier_root_s,
    baseline_gain_rate,
    hybrid_gain,
    switch_threshold,
    unit_vector_control,
)
from .laws import ArpsController, BaselineController, Controller, FixedGainController, HybridController
from .params import ArpsParams, BarrierKind, BarrierSpec, BaselineParams

__all__ = [
    "DEFAULT_DEADZONE",
    "arps_gain",
    "arps_gain_rate",
    "barrier_gain",
    "barrier_root_s",
    "baseline_gain_rate",
    "hybrid_gain",
    "switch_threshold",
    "unit_vector_control",
    "ArpsController",
    "BaselineController",
    "Controller",
    "FixedGainController",
    "HybridController",
    "ArpsParams",
    "BarrierKind",
    "BarrierSpec",
    "BaselineParams",
]
