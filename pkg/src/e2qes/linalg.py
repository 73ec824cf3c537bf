"""Dense nonsymmetric eigenvalues on top of the Hessenberg QR kernel."""
from __future__ import annotations

import numpy as np

from ._backend import BACKEND, hessenberg_eigvals
from .errors import NumericalFailure

__all__ = ["BACKEND", "eigvals_hessenberg", "eigvals", "companion", "inverse_iteration_residual"]


def eigvals_hessenberg(h: np.ndarray, balance: bool = True, max_its: int = 60) -> np.ndarray:
    """All eigenvalues of a real upper Hessenberg matrix, sorted by (Re, Im)."""
    h = np.asarray(h, dtype=np.float64)
    if h.ndim != 2 or h.shape[0] != h.shape[1]:
        raise ValueError("square matrix required")
    if not np.all(np.isfinite(h)):
        raise NumericalFailure("non-finite matrix entries")
    if h.shape[0] == 0:
        return np.zeros(0, dtype=complex)
    wr, wi, status = hessenberg_eigvals(h, balance, max_its)
    if status:
        raise NumericalFailure(f"QR iteration cap ({max_its}) exceeded")
    w = wr + 1j * wi
    return w[np.lexsort((w.imag, w.real))]


def eigvals(a: np.ndarray, balance: bool = True) -> np.ndarray:
    """Eigenvalues of a general real matrix (reduced to Hessenberg form first)."""
    from scipy.linalg import hessenberg

    a = np.asarray(a, dtype=np.float64)
    if a.shape[0] > 2 and np.any(np.tril(a, -2)):
        a = hessenberg(a)
    return eigvals_hessenberg(a, balance)


def companion(coeffs) -> np.ndarray:
    """Upper Hessenberg companion of ``sum coeffs[k] x**k`` (low degree first)."""
    c = np.asarray(coeffs, dtype=np.float64)
    n = len(c) - 1
    if n < 1 or c[-1] == 0:
        raise ValueError("degree >= 1 with nonzero leading coefficient required")
    m = np.zeros((n, n))
    m[0, :] = -c[-2::-1] / c[-1]
    if n > 1:
        m[np.arange(1, n), np.arange(n - 1)] = 1.0
    return m


def inverse_iteration_residual(a: np.ndarray, lam: complex, iters: int = 3) -> float:
    """``||(A - lam I) v|| / ||A||`` for the inverse-iteration vector ``v``."""
    a = np.asarray(a, dtype=complex)
    n = a.shape[0]
    scale = max(np.linalg.norm(a, 1), 1.0)
    shifted = a - (lam + 1e-13 * scale) * np.eye(n)
    v = np.ones(n, dtype=complex) / np.sqrt(n)
    for _ in range(iters):
        try:
            v = np.linalg.solve(shifted, v)
        except np.linalg.LinAlgError:
            break
        v /= np.linalg.norm(v)
    return float(np.linalg.norm(a @ v - lam * v) / scale)
