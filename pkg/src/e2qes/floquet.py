"""Monodromy of the complex Mathieu equation -psi'' + 2ig cos(2theta) psi = E psi.

The potential has period pi, so the 2pi monodromy is the square of the
pi monodromy and ``tr M_2pi - 2 = (tr M_pi - 2)(tr M_pi + 2)``.  The
pi-periodic factor is the sector truncated by the Xi and Theta operators.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.integrate import solve_ivp
from scipy.optimize import brentq, minimize_scalar

from .errors import NumericalFailure

RTOL = 1e-10
ATOL = 1e-12
WINDOW = (-0.5, 3.5)


def monodromy(g: float, energies, rtol: float = RTOL, atol: float = ATOL) -> np.ndarray:
    """``M_pi`` for every energy at once, shape ``(n, 2, 2)``.

    Columns are the solutions started from (1, 0) and (0, 1).
    """
    es = np.atleast_1d(np.asarray(energies, dtype=float))
    n = len(es)

    def rhs(theta, y):
        y = y.reshape(n, 4)
        v = 2j * g * np.cos(2 * theta) - es
        out = np.empty_like(y)
        out[:, 0] = y[:, 1]
        out[:, 1] = v * y[:, 0]
        out[:, 2] = y[:, 3]
        out[:, 3] = v * y[:, 2]
        return out.ravel()

    y0 = np.tile(np.array([1, 0, 0, 1], dtype=complex), n)
    sol = solve_ivp(rhs, (0.0, np.pi), y0, method="DOP853", rtol=rtol, atol=atol)
    if not sol.success:
        raise NumericalFailure(f"integrator failed: {sol.message}")
    y = sol.y[:, -1].reshape(n, 4)
    m = np.empty((n, 2, 2), dtype=complex)
    m[:, 0, 0], m[:, 1, 0], m[:, 0, 1], m[:, 1, 1] = y[:, 0], y[:, 1], y[:, 2], y[:, 3]
    return m


def trace_function(g: float, energies, full_period: bool = True) -> np.ndarray:
    """``Re tr M - 2`` over 2pi (``full_period``) or over pi; real for real E."""
    m = monodromy(g, energies)
    tr = np.trace(m, axis1=1, axis2=2)
    if full_period:
        tr = tr * tr - 2.0
    return tr.real - 2.0


@dataclass(frozen=True)
class FloquetResult:
    g: float
    eigenvalues: tuple[float, ...]
    det_residual: float
    window: tuple[float, float]
    full_period: bool


def _scalar(g: float, full_period: bool):
    return lambda e: float(trace_function(g, [e], full_period)[0])


def floquet_periodic_eigenvalues(g: float, window: tuple[float, float] = WINDOW,
                                 tol: float = 1e-10, n_grid: int = 161,
                                 full_period: bool = False) -> FloquetResult:
    """Real E in the window with a periodic solution.

    By default only pi-periodic solutions count (the even Fourier sector);
    ``full_period`` admits every 2pi-periodic solution.  Touching zeros,
    such as the degenerate free levels at g = 0, are reported twice.
    """
    lo, hi = window
    es = np.linspace(lo, hi, n_grid)
    m = monodromy(g, es)
    det_res = float(np.max(np.abs(np.linalg.det(m) - 1.0)))
    tr = np.trace(m, axis1=1, axis2=2)
    if full_period:
        tr = tr * tr - 2.0
    f = tr.real - 2.0
    fs = _scalar(g, full_period)
    roots: list[float] = []
    for k in range(n_grid - 1):
        if f[k] == 0.0:
            roots.append(float(es[k]))
        elif f[k] * f[k + 1] < 0:
            roots.append(brentq(fs, es[k], es[k + 1], xtol=tol))
    scale = max(1.0, float(np.max(np.abs(f))))
    for k in range(1, n_grid - 1):
        if f[k] != 0 and abs(f[k]) <= abs(f[k - 1]) and abs(f[k]) <= abs(f[k + 1]) \
                and f[k - 1] * f[k] > 0 and f[k] * f[k + 1] > 0:
            s = 1.0 if f[k] > 0 else -1.0
            a, b = es[k - 1], es[k + 1]
            r = minimize_scalar(lambda e: s * fs(e), bounds=(a, b),
                                method="bounded", options={"xatol": 1e-12})
            if r.fun < 0:
                roots += [brentq(fs, a, r.x, xtol=tol), brentq(fs, r.x, b, xtol=tol)]
            elif r.fun <= 1e-7 * scale:
                roots += [float(r.x)] * 2
    if f[-1] == 0.0:
        roots.append(float(es[-1]))
    return FloquetResult(float(g), tuple(sorted(roots)), det_res, (lo, hi), full_period)


def window_minimum(g: float, window: tuple[float, float] = WINDOW, n_grid: int = 81) -> float:
    """``min tr M_2pi - 2`` over real E in the window."""
    es = np.linspace(*window, n_grid)
    f = trace_function(g, es)
    k = int(np.argmin(f))
    a, b = es[max(k - 1, 0)], es[min(k + 1, n_grid - 1)]
    r = minimize_scalar(_scalar(g, True), bounds=(a, b), method="bounded",
                        options={"xatol": 1e-10})
    return float(min(r.fun, f[k]))


def critical_coupling(bracket: tuple[float, float] = (1.3, 1.7), window: tuple[float, float] = WINDOW,
                      tol: float = 1e-7) -> float:
    """Coupling at which the two lowest periodic levels in the window merge and leave the axis."""
    a, b = bracket
    fa, fb = window_minimum(a, window), window_minimum(b, window)
    if fa * fb > 0:
        raise NumericalFailure(f"no sign change of the window minimum on [{a}, {b}]")
    return float(brentq(lambda g: window_minimum(g, window), a, b, xtol=tol))
