"""Sylvester matrices, exact discriminants in u = zeta**2, and QES exceptional points."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Any

from .exactalg.bipoly import BiPoly
from .exactalg.matrix import DenseMatrix, bareiss_det
from .exactalg.poly import UniPoly
from .exactalg.realroots import IsolatedRoot, isolate_real_roots, root_bound
from .recurrence import RecurrenceSpec, Sector
from .spectrum import quantization_polynomial


def sylvester_matrix(p: UniPoly) -> DenseMatrix:
    """(2n-1)-square matrix of ``p`` and ``dp/dE``; coefficients may be polynomials in u."""
    n = p.degree
    if n < 2:
        raise ValueError(f"Sylvester matrix needs degree >= 2, got {n}")
    zero = UniPoly() if isinstance(p.lc, UniPoly) else 0

    def a(k: int) -> Any:
        return p[k] if 0 <= k <= n else zero

    size = 2 * n - 1
    rows = []
    for i in range(1, size + 1):
        row = []
        for j in range(1, size + 1):
            if i <= n - 1:
                row.append(a(n + i - j))
            else:
                k = 1 + i - j
                row.append(a(k) * k if k > 0 else zero)
        rows.append(row)
    return DenseMatrix(rows)


def discriminant_in_t(poly: BiPoly) -> tuple[UniPoly, UniPoly]:
    """``(delta, raw)``: primitive discriminant with positive lead, and the raw Sylvester determinant."""
    p = poly.as_poly_in_E()
    if p.degree < 2:
        return UniPoly([1]), UniPoly([1])
    raw = bareiss_det(sylvester_matrix(p))
    if not isinstance(raw, UniPoly):
        raw = UniPoly([raw])
    return raw.primitive_part(positive_lc=True), raw


@dataclass(frozen=True)
class DiscriminantResult:
    spec: RecurrenceSpec
    delta: UniPoly
    raw: UniPoly
    kappa: Fraction

    @property
    def kappa_note(self) -> str:
        return f"det S = {self.kappa} * delta"


def qes_discriminant(spec: RecurrenceSpec) -> DiscriminantResult:
    delta, raw = discriminant_in_t(quantization_polynomial(spec))
    kappa = Fraction(raw.lc) / delta.lc
    return DiscriminantResult(spec, delta, raw, kappa)


def even_to_coupling(delta_t: UniPoly) -> UniPoly:
    """``delta(u)`` rewritten as a polynomial in sqrt(u)."""
    cs: list[Any] = []
    for c in delta_t.coeffs:
        cs += [c, 0]
    return UniPoly(cs[:-1] if cs else [])


def positive_coupling_roots(delta_t: UniPoly) -> list[IsolatedRoot]:
    """Positive real roots g of ``delta(g**2)``, ascending."""
    if delta_t.degree < 1:
        return []
    p = even_to_coupling(delta_t)
    return isolate_real_roots(p, (Fraction(0), root_bound(p)))


@dataclass(frozen=True)
class QESExceptionalPoint:
    N: int
    sector: Sector
    zeta0: IsolatedRoot

    @property
    def zeta(self) -> float:
        return self.zeta0.refined

    @property
    def scaled(self) -> float:
        return self.zeta0.refined * self.N


def qes_exceptional_points(spec: RecurrenceSpec) -> list[QESExceptionalPoint]:
    d = qes_discriminant(spec)
    return [QESExceptionalPoint(spec.N, spec.sector, r) for r in positive_coupling_roots(d.delta)]


def table1_row(N: int) -> list[QESExceptionalPoint]:
    """Both sectors' exceptional points at fixed odd N, sorted by zeta0."""
    pts = []
    for sector in (Sector.SINE, Sector.COSINE):
        pts += qes_exceptional_points(RecurrenceSpec(N, sector))
    return sorted(pts, key=lambda p: (p.zeta0.midpoint, p.sector.value))
