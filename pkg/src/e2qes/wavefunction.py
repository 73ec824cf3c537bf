"""Eigenfunctions on a theta grid and their residuals under the Hamiltonian.

In the trigonometric representation

    H = -d^2/dtheta^2 + zeta^2 cos^2(2 theta) - 2i zeta N cos(2 theta),

and the Ansatz is a phase ``exp(i zeta cos(2 theta) / 2)`` times a finite
sine or cosine series.  Derivatives are taken term by term, so residuals
measure only the error in E.
"""
from __future__ import annotations

import warnings
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

import numpy as np

from .recurrence import RecurrenceSpec, build_P_table

ON_SHELL_TOL = 1e-6


def phase(zeta: float, thetas: np.ndarray) -> np.ndarray:
    return np.exp(0.5j * zeta * np.cos(2 * thetas))


def fourier_coefficients(spec: RecurrenceSpec, zeta, E, n_max: int) -> list:
    """``sigma_0..sigma_{n_max}`` or ``c_0..c_{n_max}`` at possibly complex E.

    Exact when zeta and E are rational.
    """
    exact = isinstance(E, (int, Fraction)) and isinstance(zeta, (int, Fraction))
    z = Fraction(zeta) if exact else float(zeta)
    if z == 0:
        raise ValueError("zeta must be nonzero")
    t = z * z
    table = build_P_table(spec, n_max)
    out = []
    for n in range(n_max + 1):
        if spec.is_sine:
            if n == 0:
                out.append(0 * z)
                continue
            p, power = table[n - 1], n - 1
        else:
            p, power = table[n], n
        val = p.evaluate(Fraction(E) if exact else complex(E), t)
        out.append(val / (z ** power * table.denominator(n)))
    return out


@dataclass(frozen=True)
class Eigenfunction:
    spec: RecurrenceSpec
    zeta: Fraction
    E: complex
    coefficients: tuple
    tail: tuple
    thetas: np.ndarray
    samples: np.ndarray

    @property
    def series(self) -> np.ndarray:
        """Complex Fourier amplitudes multiplying sin(2n theta) or cos(2n theta)."""
        n = np.arange(len(self.coefficients))
        amp = (1j ** n) * np.array([complex(c) for c in self.coefficients])
        return 1j * amp if self.spec.is_sine else amp

    def evaluate(self, thetas: Sequence[float]) -> np.ndarray:
        th = np.asarray(thetas, dtype=float)
        s, _, _ = _series(self.spec.is_sine, self.series, th)
        return phase(float(self.zeta), th) * s


def _series(sine: bool, amp: np.ndarray, th: np.ndarray):
    n = np.arange(len(amp))[:, None]
    arg = 2 * n * th[None, :]
    k = 2.0 * n
    if sine:
        s = (amp[:, None] * np.sin(arg)).sum(0)
        ds = (amp[:, None] * k * np.cos(arg)).sum(0)
        dds = (-amp[:, None] * k * k * np.sin(arg)).sum(0)
    else:
        s = (amp[:, None] * np.cos(arg)).sum(0)
        ds = (-amp[:, None] * k * np.sin(arg)).sum(0)
        dds = (-amp[:, None] * k * k * np.cos(arg)).sum(0)
    return s, ds, dds


def assemble(spec: RecurrenceSpec, zeta, E, thetas: Sequence[float],
             horizon: Optional[int] = None) -> Eigenfunction:
    """Samples of psi on the grid; coefficients past the truncation are kept in ``tail``."""
    last = spec.M
    horizon = spec.K + 4 if horizon is None else max(horizon, last + 1)
    coeffs = fourier_coefficients(spec, zeta, E, horizon)
    kept, tail = tuple(coeffs[: last + 1]), tuple(coeffs[last + 1:])
    scale = max(abs(complex(c)) for c in kept) or 1.0
    if tail and abs(complex(tail[0])) > ON_SHELL_TOL * scale:
        warnings.warn(f"E={E} is off shell: first truncated coefficient {complex(tail[0]):.3e}",
                      stacklevel=2)
    th = np.asarray(list(thetas), dtype=float)
    f = Eigenfunction(spec, Fraction(zeta), complex(E), kept, tail, th, np.zeros(th.shape, complex))
    object.__setattr__(f, "samples", f.evaluate(th))
    return f


def apply_hamiltonian(f: Eigenfunction, thetas: Optional[Sequence[float]] = None) -> tuple[np.ndarray, np.ndarray]:
    """``(H psi, psi)`` on the grid, with exact derivatives of phase and series."""
    th = f.thetas if thetas is None else np.asarray(thetas, dtype=float)
    z = float(f.zeta)
    N = f.spec.N
    s, ds, dds = _series(f.spec.is_sine, f.series, th)
    c2, s2 = np.cos(2 * th), np.sin(2 * th)
    ph = phase(z, th)
    dph = -1j * z * s2 * ph
    ddph = (-2j * z * c2 - z * z * s2 * s2) * ph
    psi = ph * s
    d2psi = ddph * s + 2 * dph * ds + ph * dds
    hpsi = -d2psi + (z * z * c2 * c2 - 2j * z * N * c2) * psi
    return hpsi, psi


def residual(f: Eigenfunction, thetas: Optional[Sequence[float]] = None) -> float:
    """``max |H psi - E psi|`` over the grid."""
    hpsi, psi = apply_hamiltonian(f, thetas)
    if hpsi.size == 0:
        return 0.0
    return float(np.max(np.abs(hpsi - f.E * psi)))


def pt3_defect(f: Eigenfunction) -> float:
    """``max |psi(pi/2 - theta) - conj psi(theta)|`` over the grid."""
    mirrored = f.evaluate(np.pi / 2 - f.thetas)
    return float(np.max(np.abs(mirrored - np.conj(f.samples)))) if f.thetas.size else 0.0


# complex Mathieu limit --------------------------------------------------------

def mathieu_series(kind: str, vector: Sequence[complex]) -> tuple[bool, np.ndarray]:
    """Fourier amplitudes ``(-i)^n v_n`` for an eigenvector of Xi (sine) or Theta (cosine)."""
    v = np.asarray(vector, dtype=complex)
    sine = str(kind).lower() == "xi"
    n = np.arange(1, len(v) + 1) if sine else np.arange(len(v))
    amp = np.zeros(n[-1] + 1, dtype=complex)
    amp[n] = (-1j) ** n * v
    return sine, amp


def mathieu_residual(kind: str, g: float, E: complex, vector: Sequence[complex],
                     thetas: Sequence[float]) -> float:
    """Relative residual of ``-psi'' + 2ig cos(2 theta) psi - E psi`` for a truncated eigenvector."""
    sine, amp = mathieu_series(kind, vector)
    th = np.asarray(thetas, dtype=float)
    s, _, dds = _series(sine, amp, th)
    r = -dds + 2j * g * np.cos(2 * th) * s - E * s
    return float(np.max(np.abs(r)) / max(np.max(np.abs(s)), 1e-300))
