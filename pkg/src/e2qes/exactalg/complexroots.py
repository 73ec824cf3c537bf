"""Floating complex roots: balanced companion matrix, Hessenberg QR, Newton polish."""
from __future__ import annotations

from typing import Sequence

import numpy as np

from ..errors import NumericalFailure
from ..linalg import companion, eigvals_hessenberg


def _horner(c: np.ndarray, z: complex) -> tuple[complex, complex]:
    p = 0j
    dp = 0j
    for a in c[::-1]:
        dp = dp * z + p
        p = p * z + a
    return p, dp


def _scale(c: np.ndarray, z: complex) -> float:
    r = abs(z)
    return float(sum(abs(a) * r ** k for k, a in enumerate(c)))


def complex_roots(coeffs: Sequence[float], tol: float = 1e-10, polish: int = 3) -> list[complex]:
    """Roots of ``sum coeffs[k] x**k`` sorted by (Re, Im).

    Real inputs give conjugation-closed output: roots with ``|Im| <= tol*max(1,|z|)``
    are snapped onto the axis and the rest are paired with their conjugates.
    """
    c = np.asarray([float(a) for a in coeffs], dtype=np.float64)
    while len(c) and c[-1] == 0:
        c = c[:-1]
    if len(c) < 2:
        raise ValueError("degree >= 1 required")
    nz = 0
    while c[nz] == 0:
        nz += 1
    c_red = c[nz:]
    roots = [0j] * nz
    if len(c_red) > 1:
        w = eigvals_hessenberg(companion(c_red))
        for z in w:
            z = complex(z)
            for _ in range(polish):
                p, dp = _horner(c_red, z)
                if dp == 0:
                    break
                step = p / dp
                znew = z - step
                pn, _ = _horner(c_red, znew)
                if abs(pn) >= abs(p):
                    break
                z = znew
            roots.append(z)
    for z in roots:
        if not np.isfinite(z.real) or not np.isfinite(z.imag):
            raise NumericalFailure("non-finite root")
    return _conjugate_snap(roots, tol)


def _conjugate_snap(roots: list[complex], tol: float) -> list[complex]:
    real, upper, lower = [], [], []
    for z in roots:
        if abs(z.imag) <= tol * max(1.0, abs(z)):
            real.append(complex(z.real, 0.0))
        elif z.imag > 0:
            upper.append(z)
        else:
            lower.append(z)
    if len(upper) != len(lower):
        # an unpaired near-axis root; push the smallest |Im| onto the axis
        pool = sorted(upper + lower, key=lambda z: abs(z.imag))
        while len(upper) != len(lower):
            z = pool.pop(0)
            (upper if z in upper else lower).remove(z)
            real.append(complex(z.real, 0.0))
    out = list(real)
    lower_left = list(lower)
    for z in upper:
        j = min(range(len(lower_left)), key=lambda k: abs(lower_left[k] - z.conjugate()))
        w = lower_left.pop(j)
        m = 0.5 * (z + w.conjugate())
        out += [m, m.conjugate()]
    out.sort(key=lambda z: (z.real, z.imag))
    return out


def residual_ok(coeffs: Sequence[float], z: complex, tol: float) -> bool:
    c = np.asarray(coeffs, dtype=np.float64)
    p, _ = _horner(c, z)
    return abs(p) <= tol * max(_scale(c, z), 1e-300)
