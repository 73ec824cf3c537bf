"""Quantized energies at fixed coupling and coupling sweeps."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

import numpy as np
from scipy.optimize import linear_sum_assignment

from .errors import NumericalFailure
from .exactalg.bipoly import BiPoly
from .exactalg.complexroots import complex_roots
from .exactalg.poly import UniPoly
from .recurrence import RecurrenceSpec, build_P_table

PT_THRESHOLD = 1e-9


def quantization_polynomial(spec: RecurrenceSpec) -> BiPoly:
    """``P_M`` (sine) or ``Phat_L`` (cosine); its roots in E are the energies."""
    return build_P_table(spec, spec.K)[spec.K]


@dataclass(frozen=True)
class PTStatus:
    broken_pairs: int

    @property
    def all_real(self) -> bool:
        return self.broken_pairs == 0

    def __str__(self) -> str:
        return "AllReal" if self.all_real else f"Broken({self.broken_pairs})"


@dataclass(frozen=True)
class SpectrumResult:
    spec: RecurrenceSpec
    zeta: Fraction
    energies: tuple[complex, ...]
    pt_status: PTStatus
    quantization_poly: BiPoly
    multiplicities: tuple[int, ...] = ()

    @property
    def real_energies(self) -> list[float]:
        return [e.real for e in self.energies if e.imag == 0]


def is_broken(e: complex, threshold: float = PT_THRESHOLD) -> bool:
    return abs(e.imag) > threshold * max(1.0, abs(e))


def roots_at(poly: BiPoly, t: Fraction, tol: float = 1e-10) -> tuple[list[complex], list[int]]:
    """Roots in E of ``poly(E, t)`` with exact multiplicities from the squarefree split."""
    p = poly.subs_t(Fraction(t))
    if p.degree < 1:
        return [], []
    p = UniPoly([Fraction(c) for c in p.coeffs])
    out: list[complex] = []
    mults: list[int] = []
    for factor, k in p.squarefree_decomposition():
        if factor.degree == 1:
            rs = [complex(float(-factor[0] / factor[1]), 0.0)]
        else:
            rs = complex_roots([float(c) for c in factor.coeffs], tol)
        for r in rs:
            out += [r] * k
            mults += [k] * k
    order = sorted(range(len(out)), key=lambda i: (out[i].real, out[i].imag))
    return [out[i] for i in order], [mults[i] for i in order]


def energies(spec: RecurrenceSpec, zeta: Fraction | float, tol: float = 1e-10) -> SpectrumResult:
    """Energies at coupling zeta, sorted by (Re, Im)."""
    if tol <= 0:
        raise ValueError("tol must be positive")
    zeta = Fraction(zeta)
    q = quantization_polynomial(spec)
    es, mults = roots_at(q, zeta * zeta, tol)
    if len(es) != spec.K:
        raise NumericalFailure(f"expected {spec.K} energies, found {len(es)}")
    broken = sum(1 for e in es if is_broken(e) and e.imag > 0)
    return SpectrumResult(spec, zeta, tuple(es), PTStatus(broken), q, tuple(mults))


@dataclass(frozen=True)
class SweepRow:
    zeta: float
    energies: tuple[complex, ...]
    sector: str

    def columns(self) -> list[float]:
        out = [self.zeta]
        for e in self.energies:
            out += [e.real, e.imag]
        return out


def match_branches(prev: Sequence[complex], cur: Sequence[complex]) -> list[complex]:
    """Reorder ``cur`` to follow ``prev`` with minimal total squared displacement."""
    if not prev:
        return list(cur)
    a = np.asarray(prev, dtype=complex)
    b = np.asarray(cur, dtype=complex)
    cost = np.abs(a[:, None] - b[None, :]) ** 2
    _, cols = linear_sum_assignment(cost)
    return [complex(b[j]) for j in cols]


def sweep(spec: RecurrenceSpec, zeta_grid: Iterable[Fraction | float],
          tol: float = 1e-10) -> list[SweepRow]:
    """Energies along a sorted zeta grid, with branches continued point to point."""
    grid = list(zeta_grid)
    if any(float(b) < float(a) for a, b in zip(grid, grid[1:])):
        raise ValueError("zeta grid must be sorted ascending")
    raw = [energies(spec, z, tol).energies for z in grid]
    rows: list[SweepRow] = []
    prev: list[complex] = []
    for z, es in zip(grid, raw):
        cur = match_branches(prev, es)
        rows.append(SweepRow(float(z), tuple(cur), spec.sector.value))
        prev = cur
    return rows
