"""Coefficient polynomials of the trigonometric eigenfunction Ansatz.

Four equivalent descriptions are produced:

* raw Fourier coefficients ``sigma_n`` (sine) and ``c_n`` (cosine),
* their monic integral rescalings ``P_n``, ``Phat_n`` in (E, t = zeta**2),
* the canonical form ``s_{n+1} = s_n + gamma_n s_{n-1}`` (and ``q``, ``lambda``),
* the combinatorial form: sums over gap-2 index sets, built either as
  nested sums or as diagonals of a generalized Pascal triangle.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Iterator, Sequence

from .errors import ConfigError, PoleError
from .exactalg.bipoly import BiPoly, E, T
from .exactalg.poly import InexactDivisionError

Monomial = tuple[int, ...]


class Sector(str, enum.Enum):
    SINE = "s"
    COSINE = "c"

    @classmethod
    def parse(cls, x: "Sector | str") -> "Sector":
        if isinstance(x, Sector):
            return x
        key = str(x).strip().lower()
        for s in cls:
            if key in (s.value, s.name.lower()):
                return s
        raise ConfigError(f"unknown sector {x!r} (use 's' or 'c')")


@dataclass(frozen=True)
class RecurrenceSpec:
    """Quantization parameter N and sector.

    Even N is refused unless ``allow_even`` is set; it then has no
    truncation and the cutoffs are the formal ``(N-1)//2``, ``(N+1)//2``.
    """

    N: int
    sector: Sector = Sector.SINE
    allow_even: bool = False

    def __post_init__(self):
        object.__setattr__(self, "sector", Sector.parse(self.sector))
        if not isinstance(self.N, int) or isinstance(self.N, bool) or self.N < 1:
            raise ConfigError(f"N must be a positive integer, got {self.N!r}")
        if self.N % 2 == 0 and not self.allow_even:
            raise ConfigError(f"N={self.N} is even; pass allow_even to override")

    @property
    def M(self) -> int:
        return (self.N - 1) // 2

    @property
    def L(self) -> int:
        return (self.N + 1) // 2

    @property
    def K(self) -> int:
        """Cutoff index: degree of the quantization polynomial."""
        return self.M if self.sector is Sector.SINE else self.L

    @property
    def is_sine(self) -> bool:
        return self.sector is Sector.SINE

    @property
    def pt_broken_everywhere(self) -> bool:
        return self.N % 2 == 0

    def label(self) -> str:
        return f"N={self.N},{self.sector.value}"


@dataclass(frozen=True)
class CoefficientTable:
    """``P_n`` (sine) or ``Phat_n`` (cosine) for ``n = 0..n_max``."""

    spec: RecurrenceSpec
    polys: tuple[BiPoly, ...]

    def __getitem__(self, n: int) -> BiPoly:
        return self.polys[n]

    def __len__(self) -> int:
        return len(self.polys)

    @property
    def n_max(self) -> int:
        return len(self.polys) - 1

    def denominator(self, n: int) -> int:
        """Integer part of the scale linking the n-th raw coefficient to its polynomial."""
        N = self.spec.N
        d = 1
        if self.spec.is_sine:
            for k in range(1, n):
                d *= N + 1 + 2 * k
        else:
            for k in range(1, n + 1):
                d *= N + 2 * k - 1
        return d


def _sine_step(n: int, N: int) -> tuple[BiPoly, BiPoly]:
    # P_{n+1} = A P_n + B P_{n-1}
    return E - T - 4 * (n + 1) ** 2, T * (N * N - (1 + 2 * n) ** 2)


def _cosine_step(n: int, N: int) -> tuple[BiPoly, BiPoly]:
    if n == 1:
        return E - T - 4, T * (2 * (N * N - 1))
    return E - T - 4 * n * n, T * (N * N - (2 * n - 1) ** 2)


@lru_cache(maxsize=256)
def build_P_table(spec: RecurrenceSpec, n_max: int) -> CoefficientTable:
    """Monic integral polynomials ``P_0..P_{n_max}`` of the chosen sector."""
    if n_max < 0:
        raise ConfigError("n_max must be >= 0")
    N = spec.N
    one = BiPoly.const(1)
    if spec.is_sine:
        polys = [one]
        prev = BiPoly()
        for n in range(n_max):
            a, b = _sine_step(n, N)
            polys.append(a * polys[-1] + b * prev)
            prev = polys[-2]
    else:
        polys = [one, E - T][: n_max + 1]
        for n in range(1, n_max):
            a, b = _cosine_step(n, N)
            polys.append(a * polys[n] + b * polys[n - 1])
    return CoefficientTable(spec, tuple(polys))


def _require_zeta(zeta: Fraction) -> Fraction:
    zeta = Fraction(zeta)
    if zeta == 0:
        raise ConfigError("zeta = 0 leaves the raw coefficients undefined; use the P form")
    return zeta


def raw_coefficients(table: CoefficientTable, zeta: Fraction, E_val: Fraction, n: int) -> Fraction:
    """``sigma_n`` (sine, ``sigma_0 = 0``) or ``c_n`` (cosine) at rational (zeta, E)."""
    zeta = _require_zeta(zeta)
    t = zeta * zeta
    if table.spec.is_sine:
        if n == 0:
            return Fraction(0)
        if n - 1 > table.n_max:
            raise IndexError(f"table holds P_0..P_{table.n_max}; sigma_{n} needs P_{n - 1}")
        return Fraction(table[n - 1](Fraction(E_val), t)) / (zeta ** (n - 1) * table.denominator(n))
    if n > table.n_max:
        raise IndexError(f"table holds Phat_0..Phat_{table.n_max}")
    return Fraction(table[n](Fraction(E_val), t)) / (zeta ** n * table.denominator(n))


# canonical form --------------------------------------------------------------

def alpha(n: int, N: int, zeta: Fraction, E_val: Fraction) -> Fraction:
    return (E_val - zeta * zeta - 4 * n * n) / (zeta * (2 * n + N + 1))


def beta(n: int, N: int) -> Fraction:
    return Fraction(N + 1 - 2 * n, N + 1 + 2 * n)


@dataclass(frozen=True)
class CanonicalSequence:
    """Exact canonical-form data at one (E, zeta).

    ``mult[n]`` is gamma_n (sine) or lambda_n (cosine), ``mult[0]`` unused;
    ``values[n]`` is s_n or q_n.
    """

    spec: RecurrenceSpec
    zeta: Fraction
    E: Fraction
    alpha: tuple[Fraction, ...]
    beta: tuple[Fraction, ...]
    mult: tuple[Fraction, ...]
    values: tuple[Fraction, ...]

    @property
    def gamma(self) -> tuple[Fraction, ...]:
        return self.mult

    lam = gamma

    def coefficient(self, n: int) -> Fraction:
        """Raw coefficient rebuilt from the canonical form."""
        prod = Fraction(1)
        if self.spec.is_sine:
            if n == 0:
                return Fraction(0)
            for k in range(1, n):
                prod *= self.alpha[k]
            return self.values[n - 1] * prod
        for k in range(n):
            prod *= self.alpha[k]
        return self.values[n] * prod


def canonical_sequence(spec: RecurrenceSpec, zeta: Fraction, E_val: Fraction,
                       n_max: int) -> CanonicalSequence:
    """alpha, beta, gamma (or lambda) and s (or q) up to ``s_{n_max}``."""
    zeta = _require_zeta(zeta)
    E_val = Fraction(E_val)
    N = spec.N
    hi = max(n_max, 1) + 1
    al = [alpha(k, N, zeta, E_val) for k in range(hi + 1)]
    be = [beta(k, N) for k in range(hi + 1)]
    mult = [Fraction(0)] * max(n_max, 2)
    vals = [Fraction(1), Fraction(1)]
    lo_needed = 1 if spec.is_sine else 0
    for k in range(lo_needed, n_max + (1 if spec.is_sine else 0)):
        if al[k] == 0:
            raise PoleError(k)
    for n in range(1, n_max):
        if spec.is_sine:
            mult[n] = be[n + 1] / (al[n + 1] * al[n])
        elif n == 1:
            mult[n] = 2 * be[1] / (al[1] * al[0])
        else:
            mult[n] = be[n] / (al[n] * al[n - 1])
        vals.append(vals[n] + mult[n] * vals[n - 1])
    return CanonicalSequence(spec, zeta, E_val, tuple(al), tuple(be), tuple(mult),
                             tuple(vals[: n_max + 1]))


def canonical_values(mult: Sequence, n_max: int) -> list:
    """``s_0..s_{n_max}`` from ``s_{n+1} = s_n + mult[n] s_{n-1}``; ``mult[0]`` ignored."""
    vals = [1, 1]
    for n in range(1, n_max):
        vals.append(vals[n] + mult[n] * vals[n - 1])
    return vals[: n_max + 1]


# combinatorial form ----------------------------------------------------------

def gap_two_sets(upper: int, p: int, start: int = 1) -> Iterator[Monomial]:
    """Increasing index tuples ``k_1 < ... < k_p`` in ``[start, upper]`` with gaps >= 2."""
    if p == 0:
        yield ()
        return
    for k in range(start, upper - 2 * (p - 1) + 1):
        for rest in gap_two_sets(upper, p - 1, k + 2):
            yield (k,) + rest


def nested_sum(gamma: Sequence, upper: int, p: int):
    """The p-fold sum over gap-2 index sets with largest index at most ``upper``."""
    total = 0
    for ks in gap_two_sets(upper, p):
        term = 1
        for k in ks:
            term = term * gamma[k]
        total = total + term
    return total


def gonoskov_sum(gamma: Sequence, n: int):
    """``s_n = 1 + sum_{p=1}^{n//2} S(n-1, p)``; ``gamma[k]`` is gamma_k (``gamma[0]`` unused)."""
    if n < 0:
        raise ValueError("n must be >= 0")
    if n >= 2 and len(gamma) < n:
        raise ValueError(f"need gamma_1..gamma_{n - 1}")
    total = 1
    for p in range(1, n // 2 + 1):
        total = total + nested_sum(gamma, n - 1, p)
    return total


@lru_cache(maxsize=None)
def pascal_cell(i: int, j: int) -> frozenset[Monomial]:
    """``M_ij = M_{i-1,j} | gamma_{i+j-1} M_{i-1,j-1}``, ``M_00 = {1}``; other edge cells empty."""
    if i < 0 or j < 0 or (i == 0 and j > 0):
        return frozenset()
    if i == 0:
        return frozenset({()})
    new = i + j - 1
    return pascal_cell(i - 1, j) | frozenset(m + (new,) for m in pascal_cell(i - 1, j - 1))


def pascal_shallow_union(n: int) -> list[Monomial]:
    """Monomials of the n-th shallow union, sorted by (degree, indices)."""
    if n < 0:
        raise ValueError("n must be >= 0")
    out: set[Monomial] = set()
    for k in range((n + 1) // 2 + 1):
        out |= pascal_cell(n - k, k)
    return sorted(out, key=lambda m: (len(m), m))


def evaluate_monomials(monomials: Sequence[Monomial], gamma: Sequence):
    total = 0
    for m in monomials:
        term = 1
        for k in m:
            term = term * gamma[k]
        total = total + term
    return total


def fibonacci(n: int) -> int:
    a, b = 0, 1
    for _ in range(n):
        a, b = b, a + b
    return a


# factorization -------------------------------------------------------------

@dataclass(frozen=True)
class FactorQuotients:
    spec: RecurrenceSpec
    base_index: int
    quotients: tuple[BiPoly, ...] = field(default=())

    def __getitem__(self, k: int) -> BiPoly:
        return self.quotients[k]

    def __len__(self) -> int:
        return len(self.quotients)

    def hat_coefficient(self, n: int, zeta: Fraction, E_val: Fraction) -> Fraction:
        """sigma-hat_n (sine) or c-hat_n (cosine): the cofactor of the truncating coefficient."""
        zeta = _require_zeta(zeta)
        N, base = self.spec.N, self.base_index
        t = zeta * zeta
        if self.spec.is_sine:
            q = Fraction(self.quotients[n - 1](Fraction(E_val), t))
            den = 1
            for k in range(base + 1, base + n):
                den *= N + 1 + 2 * k
            return q / (zeta ** (n - 1) * den)
        q = Fraction(self.quotients[n](Fraction(E_val), t))
        den = 1
        for k in range(base + 1, base + n + 1):
            den *= N + 2 * k - 1
        return q / (zeta ** n * den)


def factor_quotients(table: CoefficientTable, k_max: int) -> FactorQuotients:
    """``Q_k = P_{K+k} / P_K`` for ``k = 0..k_max`` by exact division."""
    spec = table.spec
    if spec.pt_broken_everywhere:
        raise ConfigError("even N has no factorization")
    base = spec.K
    if table.n_max < base + k_max:
        table = build_P_table(spec, base + k_max)
    pk = table[base]
    qs = []
    for k in range(k_max + 1):
        try:
            qs.append(table[base + k].exact_divide(pk))
        except InexactDivisionError as exc:
            raise ArithmeticError(
                f"P_{base + k} is not divisible by P_{base} for {spec.label()}") from exc
    return FactorQuotients(spec, base, tuple(qs))
