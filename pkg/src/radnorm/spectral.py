"""Spectral norm (largest singular value) with a trace-power cross-check.

Small matrices go through a full singular value decomposition; large ones
through deterministic power iteration on A^T A.  The trace-power estimator
(tr A^{2k})^{1/2k} is an independent route used to sanity-check the main
one on symmetric inputs.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .core import WeightMatrix

#: Side length up to which the full decomposition is used.
FULL_DECOMPOSITION_MAX = 512

#: Iteration cap for power iteration is 10 n + this.
ITERATION_CAP_BASE = 1000

DEFAULT_TOL = 1e-10


class ConvergenceError(RuntimeError):
    """Power iteration hit its cap; `best` carries the last estimate."""

    def __init__(self, message: str, best: float):
        super().__init__(message)
        self.best = best


@dataclass(frozen=True)
class SpectralResult:
    value: float
    iterations: int
    residual: float
    method: str  # full_decomposition | power_iteration | trace_power

    def __post_init__(self):
        if self.value < 0:
            raise ValueError("spectral norm is nonnegative")


def _start_vector(n: int) -> np.ndarray:
    # all-ones with a small index ramp so the start is never orthogonal to
    # the leading singular space of sign-structured matrices
    v = 1.0 + 1e-3 * np.arange(n) / max(n - 1, 1)
    return v / np.linalg.norm(v)


def _power_iteration(a: np.ndarray, tol: float) -> SpectralResult:
    n = a.shape[1]
    v = _start_vector(n)
    cap = 10 * max(a.shape) + ITERATION_CAP_BASE
    sigma = 0.0
    for it in range(1, cap + 1):
        w = a.T @ (a @ v)
        norm_w = float(np.linalg.norm(w))
        if norm_w == 0.0:
            return SpectralResult(0.0, it, 0.0, "power_iteration")
        new_sigma = math.sqrt(norm_w)
        v = w / norm_w
        residual = abs(new_sigma - sigma) / new_sigma
        sigma = new_sigma
        if residual <= tol:
            return SpectralResult(sigma, it, residual, "power_iteration")
    raise ConvergenceError(
        f"power iteration did not reach tol={tol} within {cap} iterations", sigma
    )


def spectral_norm(A: WeightMatrix, tol: float = DEFAULT_TOL, method: str = "auto") -> SpectralResult:
    """Largest singular value of A.

    Deterministic: the full decomposition is used up to side 512, beyond
    that power iteration on A^T A from a fixed ramped start vector.
    `method` forces a path ("full" or "power") for cross-checking.
    """
    if not (0.0 < tol <= 1e-3):
        raise ValueError("tol must lie in (0, 1e-3]")
    a = A.entries
    if a.size == 0 or not a.any():
        return SpectralResult(0.0, 0, 0.0, "full_decomposition")
    if method == "auto":
        method = "full" if max(a.shape) <= FULL_DECOMPOSITION_MAX else "power"
    if method == "full":
        value = float(np.linalg.svd(a, compute_uv=False)[0])
        return SpectralResult(value, 0, 0.0, "full_decomposition")
    if method == "power":
        return _power_iteration(a, tol)
    raise ValueError(f"unknown method {method!r}")


def top_singular_triplet(A: WeightMatrix) -> tuple:
    """(sigma, s, t) with sigma = ||A|| and unit witness vectors.

    Helper for modules that need the maximizing pair, not only the value.
    """
    a = A.entries
    if a.size == 0 or not a.any():
        s = np.zeros(a.shape[0])
        t = np.zeros(a.shape[1])
        if s.size:
            s[0] = 1.0
        if t.size:
            t[0] = 1.0
        return 0.0, s, t
    u, sv, vt = np.linalg.svd(a)
    return float(sv[0]), u[:, 0].copy(), vt[0].copy()


def trace_power_norm(A: WeightMatrix, k: int) -> float:
    """(tr A^{2k})^{1/(2k)} for symmetric A.

    Always sandwiched in [||A||, n^{1/(2k)} ||A||].  Computed from the
    eigenvalues with max-abs scaling so large powers cannot overflow.
    """
    if k < 1:
        raise ValueError("k must be a positive integer")
    if not A.symmetric and not np.array_equal(A.entries, A.entries.T):
        raise ValueError("trace-power norm requires a symmetric matrix")
    eig = np.linalg.eigvalsh(A.entries)
    m = float(np.max(np.abs(eig))) if eig.size else 0.0
    if m == 0.0:
        return 0.0
    scaled = np.abs(eig) / m
    return m * float(np.sum(scaled ** (2 * k)) ** (1.0 / (2 * k)))


def max_row_col_l2(A: WeightMatrix) -> tuple:
    """Largest row L2 norm and largest column L2 norm."""
    a = A.entries
    if a.size == 0:
        return 0.0, 0.0
    row = float(np.sqrt((a * a).sum(axis=1).max()))
    col = float(np.sqrt((a * a).sum(axis=0).max()))
    return row, col
