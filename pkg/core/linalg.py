import logging
import math

import numpy as np

from core.errors import SingularMatrix
from core.types import Mat, Vec

logger = logging.getLogger(__name__)

SINGULAR_RTOL = 1e-12
JACOBI_TOL = 1e-12
JACOBI_MAX_SWEEPS = 64


def as_vec(values) -> Vec:
    vec = np.asarray(values, dtype=float)
    if vec.ndim != 1:
        raise ValueError(f"Se esperaba un vector, shape={vec.shape}")
    return vec


def as_mat(values) -> Mat:
    mat = np.asarray(values, dtype=float)
    if mat.ndim != 2 or mat.shape[0] != mat.shape[1]:
        raise ValueError(f"Se esperaba una matriz cuadrada, shape={mat.shape}")
    return mat


def norm2(v: Vec) -> float:
    """Norma euclídea."""
    return math.sqrt(float(np.dot(v, v)))


def mat_inf_norm(a: Mat) -> float:
    """Norma ∞ inducida: máxima suma absoluta por filas."""
    return float(np.max(np.sum(np.abs(a), axis=1)))


def invert(a: Mat) -> Mat:
    """
    Inversa de una matriz cuadrada.
    Lanza SingularMatrix si |det A| < 1e-12·(max|aij|)^m.
    """
    m = a.shape[0]
    scale = float(np.max(np.abs(a))) if a.size else 0.0
    if m == 2:
        det = a[0, 0] * a[1, 1] - a[0, 1] * a[1, 0]
    else:
        det = float(np.linalg.det(a))
    if scale == 0.0 or abs(det) < SINGULAR_RTOL * scale ** m:
        raise SingularMatrix(f"Matriz singular (det={det:.3e}, escala={scale:.3e})")
    if m == 2:
        return np.array([[a[1, 1], -a[0, 1]], [-a[1, 0], a[0, 0]]]) / det
    return np.linalg.inv(a)


def _jacobi_eigvals(s: Mat) -> Vec:
    """Autovalores de una matriz simétrica por barridos cíclicos de Jacobi."""
    a = np.array(s, dtype=float)
    n = a.shape[0]
    for _ in range(JACOBI_MAX_SWEEPS):
        off = math.sqrt(float(np.sum(a ** 2) - np.sum(np.diag(a) ** 2)))
        if off < JACOBI_TOL * max(1.0, float(np.max(np.abs(np.diag(a))))):
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                if a[p, q] == 0.0:
                    continue
                theta = (a[q, q] - a[p, p]) / (2.0 * a[p, q])
                t = math.copysign(1.0, theta) / (abs(theta) + math.sqrt(theta * theta + 1.0))
                c = 1.0 / math.sqrt(t * t + 1.0)
                sn = t * c
                rot = np.eye(n)
                rot[p, p] = c
                rot[q, q] = c
                rot[p, q] = sn
                rot[q, p] = -sn
                a = rot.T @ a @ rot
    else:
        logger.warning(f"Jacobi no convergió tras {JACOBI_MAX_SWEEPS} barridos")
    return np.diag(a).copy()


def min_eig_sym_part(a: Mat) -> float:
    """λ_min de ½(A + Aᵀ)."""
    s = 0.5 * (a + a.T)
    if s.shape[0] == 1:
        return float(s[0, 0])
    if s.shape[0] == 2:
        mean = 0.5 * (s[0, 0] + s[1, 1])
        radius = math.hypot(0.5 * (s[0, 0] - s[1, 1]), s[0, 1])
        return float(mean - radius)
    return float(np.min(_jacobi_eigvals(s)))
