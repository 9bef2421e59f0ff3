from .errors import (
    ArpsError,
    BarrierBreached,
    ConfigError,
    DeadzoneHit,
    DomainError,
    NonFiniteState,
    SingularMatrix,
    TimeHorizonExceeded,
)
from .linalg import as_mat, as_vec, invert, mat_inf_norm, min_eig_sym_part, norm2
from .types import GainState, Mat, Mode, StateVector, Vec

__all__ = [
    "ArpsError",
    "BarrierBreached",
    "ConfigError",
    "DeadzoneHit",
    "DomainError",
    "NonFiniteState",
    "SingularMatrix",
    "TimeHorizonExceeded",
    "as_mat",
    "as_vec",
    "invert",
    "mat_inf_norm",
    "min_eig_sym_part",
    "norm2",
    "GainState",
    "Mat",
    "Mode",
    "StateVector",
    "Vec",
]
