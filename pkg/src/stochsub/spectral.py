"""Perron-Frobenius eigenpairs of nonnegative primitive matrices.

Power iteration is all that is needed here: every matrix we solve is
primitive and nonnegative, hence has a simple dominant eigenvalue with a
spectral gap.  The normalisation follows the convention used throughout:
the right eigenvector has L1 norm 1 and the left eigenvector is scaled so
that left . right = 1.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .substitution import RationalMatrix

DEFAULT_TOL = 1e-12
MAX_ITERATIONS = 100_000
STALL_WINDOW = 100
STALL_IMPROVEMENT = 1e-16


class NonConvergence(RuntimeError):
    def __init__(self, message: str, residual: float):
        super().__init__(f"{message} (residual {residual:.3e})")
        self.residual = residual


@dataclass(frozen=True)
class PFEigenpair:
    """Dominant eigenvalue with L1-normalised right and dual left vector."""

    value: float
    right: np.ndarray
    left: np.ndarray
    residual: float
    iterations: int


def _as_array(matrix) -> np.ndarray:
    if isinstance(matrix, RationalMatrix):
        return matrix.to_float()
    arr = np.asarray(matrix, dtype=float)
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
        raise ValueError("matrix must be square")
    return arr


def _power_iterate(mat: np.ndarray, tol: float) -> tuple[float, np.ndarray, float, int]:
    d = mat.shape[0]
    x = np.full(d, 1.0 / d)
    best = np.inf
    since_best = 0
    lam = 0.0
    residual = np.inf
    for it in range(1, MAX_ITERATIONS + 1):
        y = mat @ x
        norm = y.sum()  # L1 norm: the iterates stay nonnegative
        if norm <= 0:
            raise NonConvergence("iterate collapsed to zero", np.inf)
        lam = norm
        x = y / norm
        residual = float(np.abs(mat @ x - lam * x).sum())
        if residual <= tol:
            return lam, x, residual, it
        if residual < best - STALL_IMPROVEMENT * max(best, 1.0):
            best = residual
            since_best = 0
        else:
            since_best += 1
            if since_best >= STALL_WINDOW:
                raise NonConvergence(
                    "power iteration stalled; matrix may not be primitive", residual
                )
    raise NonConvergence("power iteration did not converge", residual)


def pf_eigenpair(matrix, tol: float = DEFAULT_TOL) -> PFEigenpair:
    """PF eigenvalue and eigenvectors of a primitive nonnegative matrix.

    Raises NonConvergence if the residual target cannot be met, and
    ValueError if the computed eigenvector has a non-positive component
    (which indicates a primitivity violation in the input).
    """
    mat = _as_array(matrix)
    d = mat.shape[0]
    if (mat < 0).any():
        raise ValueError("matrix entries must be nonnegative")
    if d == 1:
        c = float(mat[0, 0])
        if c <= 0:
            raise ValueError("1x1 matrix must have a positive entry")
        return PFEigenpair(
            value=c,
            right=np.array([1.0]),
            left=np.array([1.0]),
            residual=0.0,
            iterations=0,
        )
    lam, right, res_r, it_r = _power_iterate(mat, tol)
    _, left_raw, res_l, it_l = _power_iterate(mat.T, tol)
    if right.min() <= 0 or left_raw.min() <= 0:
        raise ValueError(
            "PF eigenvector has a non-positive component; matrix is not primitive"
        )
    left = left_raw / float(left_raw @ right)
    return PFEigenpair(
        value=lam,
        right=right,
        left=left,
        residual=max(res_r, res_l),
        iterations=it_r + it_l,
    )
