"""Weakly orthogonal polynomial structure of the quantization polynomials.

The polynomials obey ``Phi_{n+1} = (E - a_n) Phi_n - b_n Phi_{n-1}`` and are
orthogonal for the functional L that puts weights on the roots of
``Phi_K``.  ``b_K = 0``, so every norm from index K on vanishes.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Optional, Sequence

import mpmath
import numpy as np

from .errors import MeasureRefusal, NumericalFailure
from .exactalg.complexroots import complex_roots
from .exactalg.poly import UniPoly
from .recurrence import RecurrenceSpec, build_P_table

REFUSAL_DISTANCE = 1e-4
DEFAULT_DPS = 50


@dataclass(frozen=True)
class FavardData:
    """``a[n]``, ``b[n]`` for n = 0..K; ``b[0]`` multiplies ``Phi_{-1} = 0``."""

    spec: RecurrenceSpec
    zeta: Fraction
    a: tuple[Fraction, ...]
    b: tuple[Fraction, ...]

    @property
    def K(self) -> int:
        return self.spec.K


def favard_a(spec: RecurrenceSpec, n: int, t):
    return t + 4 * (n + 1) ** 2 if spec.is_sine else t + 4 * n * n


def favard_b(spec: RecurrenceSpec, n: int, t):
    N = spec.N
    if spec.is_sine:
        return t * ((1 + 2 * n) ** 2 - N * N)
    if n == 1:
        return -2 * t * (N * N - 1)
    return t * ((2 * n - 1) ** 2 - N * N)


def favard_constants(spec: RecurrenceSpec, zeta, n_max: Optional[int] = None) -> FavardData:
    zeta = Fraction(zeta)
    t = zeta * zeta
    top = spec.K if n_max is None else max(n_max, spec.K)
    a = tuple(favard_a(spec, n, t) for n in range(top + 1))
    b = tuple(Fraction(0) if n == 0 else favard_b(spec, n, t) for n in range(top + 1))
    if not spec.pt_broken_everywhere and b[spec.K] != 0:
        raise ArithmeticError(f"b_K != 0 for {spec.label()}")
    return FavardData(spec, zeta, a, b)


def phi_values(data: FavardData, E, n_max: int) -> list:
    """``Phi_0(E)..Phi_{n_max}(E)`` from the Favard recurrence (any numeric E)."""
    out = [E * 0 + 1]
    if n_max >= 1:
        out.append(E - data.a[0])
    for n in range(1, n_max):
        a = data.a[n] if n < len(data.a) else favard_a(data.spec, n, data.zeta ** 2)
        b = data.b[n] if n < len(data.b) else favard_b(data.spec, n, data.zeta ** 2)
        out.append((E - a) * out[n] - b * out[n - 1])
    return out[: n_max + 1]


# norms ---------------------------------------------------------------------

@dataclass(frozen=True)
class NormTable:
    spec: RecurrenceSpec
    zeta: Fraction
    values: tuple[Fraction, ...]

    def __getitem__(self, n: int) -> Fraction:
        return self.values[n]


def _poch(x: Fraction, n: int) -> Fraction:
    out = Fraction(1)
    for k in range(n):
        out *= x + k
    return out


def norm_closed_form(spec: RecurrenceSpec, zeta, n: int) -> Fraction:
    """Pochhammer form of the n-th squared norm (n >= 1; the zeroth norm is 1)."""
    if n == 0:
        return Fraction(1)
    t = Fraction(zeta) ** 2
    N = spec.N
    if spec.is_sine:
        return 4 ** n * t ** n * _poch(Fraction(3 - N, 2), n) * _poch(Fraction(3 + N, 2), n)
    return 2 ** (2 * n + 1) * t ** n * _poch(Fraction(1 - N, 2), n) * _poch(Fraction(1 + N, 2), n)


def norms(data: FavardData, n_max: Optional[int] = None) -> NormTable:
    """``N_n = b_n N_{n-1}``, ``N_0 = 1``, checked against the Pochhammer form."""
    top = data.K if n_max is None else n_max
    vals = [Fraction(1)]
    t = data.zeta ** 2
    for n in range(1, top + 1):
        b = data.b[n] if n < len(data.b) else favard_b(data.spec, n, t)
        vals.append(b * vals[-1])
    if not data.spec.pt_broken_everywhere:
        for n, v in enumerate(vals):
            if v != norm_closed_form(data.spec, data.zeta, n):
                raise ArithmeticError(f"norm {n} disagrees with its closed form")
    return NormTable(data.spec, data.zeta, tuple(vals))


# measure -------------------------------------------------------------------

@dataclass(frozen=True)
class DiscreteMeasure:
    """Roots and weights, kept both as doubles and at ``dps`` decimal digits."""

    spec: RecurrenceSpec
    zeta: Fraction
    roots: tuple[complex, ...]
    weights: tuple[complex, ...]
    condition: float = 1.0
    dps: int = DEFAULT_DPS
    roots_mp: tuple = ()
    weights_mp: tuple = ()

    def integrate(self, values: Sequence[complex]) -> complex:
        return functional(values, self)


@lru_cache(maxsize=64)
def _exceptional_zetas(spec: RecurrenceSpec) -> tuple[float, ...]:
    from .discriminant import qes_exceptional_points

    return tuple(p.zeta for p in qes_exceptional_points(spec))


def check_measure_distance(spec: RecurrenceSpec, zeta, distance: float = REFUSAL_DISTANCE) -> None:
    """Raise :class:`MeasureRefusal` when zeta lies within ``distance`` of an exceptional point."""
    if spec.K < 2:
        return
    z = abs(float(zeta))
    for z0 in _exceptional_zetas(spec):
        if abs(z - z0) < distance:
            roots = measure_roots(spec, zeta)
            i, j = min(((i, j) for i in range(len(roots)) for j in range(i + 1, len(roots))),
                       key=lambda ij: abs(roots[ij[0]] - roots[ij[1]]))
            raise MeasureRefusal((roots[i], roots[j]), abs(z - z0))


def measure_roots(spec: RecurrenceSpec, zeta) -> list[complex]:
    from .spectrum import energies

    return list(energies(spec, Fraction(zeta)).energies)


def _mp(x: Fraction):
    return mpmath.mpf(x.numerator) / x.denominator


def _polish(coeffs: list, z0: complex, steps: int = 60):
    z = mpmath.mpc(z0)
    eps = mpmath.mpf(10) ** (-mpmath.mp.dps + 5)
    for _ in range(steps):
        p = mpmath.mpc(0)
        dp = mpmath.mpc(0)
        for c in reversed(coeffs):
            dp = dp * z + p
            p = p * z + c
        if dp == 0:
            break
        step = p / dp
        z -= step
        if abs(step) <= eps * max(1, abs(z)):
            break
    return z


def measure(spec: RecurrenceSpec, zeta, distance: float = REFUSAL_DISTANCE,
            dps: int = DEFAULT_DPS) -> DiscreteMeasure:
    """Weights solving ``sum_k w_k Phi_n(E_k) = delta_{n0}`` for n < K.

    Roots are Newton-polished and the system solved at ``dps`` digits.
    """
    zeta = Fraction(zeta)
    check_measure_distance(spec, zeta, distance)
    roots = measure_roots(spec, zeta)
    K = spec.K
    if K == 0:
        return DiscreteMeasure(spec, zeta, (), (), dps=dps)
    data = favard_constants(spec, zeta)
    with mpmath.workdps(dps):
        pk = build_P_table(spec, K)[K].subs_t(zeta * zeta)
        cs = [_mp(Fraction(c)) for c in pk.coeffs]
        rmp = [_polish(cs, r) for r in roots]
        md = _mp_data(data)
        A = mpmath.matrix(K, K)
        for k, e in enumerate(rmp):
            for n, v in enumerate(phi_values(md, e, K - 1)):
                A[n, k] = v
        rhs = mpmath.matrix([1] + [0] * (K - 1))
        try:
            w = mpmath.lu_solve(A, rhs)
        except ZeroDivisionError as exc:
            raise NumericalFailure("measure system is singular") from exc
        cond = float(mpmath.mnorm(A, 1) * mpmath.mnorm(mpmath.inverse(A), 1))
        wmp = [w[k] for k in range(K)]
        return DiscreteMeasure(spec, zeta, tuple(complex(r) for r in rmp),
                               tuple(complex(x) for x in wmp), cond, dps,
                               tuple(rmp), tuple(wmp))


def _mp_data(data: FavardData) -> FavardData:
    return FavardData(data.spec, data.zeta, tuple(_mp(Fraction(x)) for x in data.a),
                      tuple(_mp(Fraction(x)) for x in data.b))


def christoffel_weights(spec: RecurrenceSpec, zeta) -> list[complex]:
    """Gauss-type weights ``N_{K-1} / (Phi_{K-1}(E_k) Phi_K'(E_k))`` (independent of the linear solve)."""
    zeta = Fraction(zeta)
    K = spec.K
    roots = measure_roots(spec, zeta)
    data = favard_constants(spec, zeta)
    nk1 = float(norms(data, K - 1)[K - 1])
    pk = build_P_table(spec, K)[K].subs_t(zeta * zeta)
    dpk = pk.derivative().to_float()
    fd = FavardData(spec, zeta, tuple(float(x) for x in data.a), tuple(float(x) for x in data.b))
    out = []
    for e in roots:
        d = sum(c * e ** i for i, c in enumerate(dpk))
        out.append(nk1 / (phi_values(fd, e, K - 1)[K - 1] * d))
    return out


def functional(values: Sequence[complex], m: DiscreteMeasure) -> complex:
    """``L(p) = sum_k w_k p(E_k)`` given ``p`` sampled at the roots."""
    if len(values) != len(m.weights):
        raise ValueError("one value per root expected")
    return complex(sum(w * v for w, v in zip(m.weights, values)))


def apply_functional(f: Callable, m: DiscreteMeasure) -> complex:
    """``L(f)`` with ``f`` evaluated at the extended-precision roots."""
    if not m.roots_mp:
        return functional([f(e) for e in m.roots], m)
    with mpmath.workdps(m.dps):
        return complex(mpmath.fsum(w * f(e) for e, w in zip(m.roots_mp, m.weights_mp)))


# moments -------------------------------------------------------------------

@dataclass(frozen=True)
class MomentTable:
    spec: RecurrenceSpec
    zeta: Optional[Fraction]
    values: tuple
    exact: bool

    def __getitem__(self, n: int):
        return self.values[n]


def _recursive(polys: Sequence[UniPoly], n_max: int, one) -> list:
    # Phi_n = E^n - sum nu_k E^k and L(Phi_n) = 0 for n >= 1, so mu_n = sum nu_k mu_k
    mu = [one]
    for n in range(1, n_max + 1):
        p = polys[n]
        acc = 0 * one
        for k in range(n):
            acc = acc + (-p[k]) * mu[k]
        mu.append(acc)
    return mu


def moments_recursive(spec: RecurrenceSpec, zeta, n_max: int) -> MomentTable:
    """Exact rational moments without any measure."""
    zeta = Fraction(zeta)
    t = zeta * zeta
    table = build_P_table(spec, n_max)
    polys = [UniPoly([Fraction(c) for c in table[n].subs_t(t).coeffs]) for n in range(n_max + 1)]
    return MomentTable(spec, zeta, tuple(_recursive(polys, n_max, Fraction(1))), True)


def moments_symbolic(spec: RecurrenceSpec, n_max: int) -> list[UniPoly]:
    """Moments as integer polynomials in t = zeta**2."""
    table = build_P_table(spec, n_max)
    polys = [table[n].as_poly_in_E() for n in range(n_max + 1)]
    return _recursive(polys, n_max, UniPoly([1]))


def moments_from_measure(m: DiscreteMeasure, n_max: int) -> MomentTable:
    vals = tuple(apply_functional(lambda e, n=n: e ** n, m) for n in range(n_max + 1))
    return MomentTable(m.spec, m.zeta, vals, False)


# Gram matrices -------------------------------------------------------------

def gram_matrix_exact(spec: RecurrenceSpec, zeta, n_max: int) -> list[list[Fraction]]:
    """``L(P_n P_m)`` in exact arithmetic from the recursive moments."""
    zeta = Fraction(zeta)
    t = zeta * zeta
    table = build_P_table(spec, n_max)
    polys = [table[n].subs_t(t) for n in range(n_max + 1)]
    mu = moments_recursive(spec, zeta, 2 * n_max).values

    def L(p: UniPoly) -> Fraction:
        return sum((Fraction(c) * mu[k] for k, c in enumerate(p.coeffs)), Fraction(0))

    return [[L(polys[i] * polys[j]) for j in range(n_max + 1)] for i in range(n_max + 1)]


def gram_matrix(spec: RecurrenceSpec, zeta, n_max: int, m: Optional[DiscreteMeasure] = None,
                shift: bool = False) -> np.ndarray:
    """``L(P_n P_m)`` (or ``L(E P_n P_{m-1})`` with ``shift``) through the measure."""
    m = m or measure(spec, zeta)
    data = favard_constants(spec, m.zeta, n_max + 1)
    G = np.zeros((n_max + 1, n_max + 1), dtype=complex)
    with mpmath.workdps(m.dps):
        md = _mp_data(data)
        vals = [phi_values(md, e, n_max) for e in m.roots_mp]
        for i in range(n_max + 1):
            for j in range(n_max + 1):
                if shift:
                    if j == 0:
                        continue
                    terms = (w * e * v[i] * v[j - 1] for e, w, v in zip(m.roots_mp, m.weights_mp, vals))
                else:
                    terms = (w * v[i] * v[j] for w, v in zip(m.weights_mp, vals))
                G[i, j] = complex(mpmath.fsum(terms))
    return G


# functional identities for the eigenfunctions -------------------------------

def wavefunction_functional_check(spec: RecurrenceSpec, zeta, thetas: Sequence[float],
                                  m: Optional[DiscreteMeasure] = None) -> float:
    """Largest deviation of ``L[psi(theta, .)]`` from its predicted value over the samples."""
    from .wavefunction import assemble, phase

    thetas = np.asarray(list(thetas), dtype=float)
    if thetas.size == 0:
        return 0.0
    m = m or measure(spec, zeta)
    total = np.zeros(thetas.shape, dtype=complex)
    for e, w in zip(m.roots, m.weights):
        total += w * assemble(spec, m.zeta, e, thetas).samples
    z = float(m.zeta)
    expected = phase(z, thetas)
    if spec.is_sine:
        expected = -np.sin(2 * thetas) * expected
    return float(np.max(np.abs(total - expected)))
