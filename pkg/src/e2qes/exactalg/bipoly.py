"""Sparse bivariate polynomials in (E, t) with exact coefficients.

t stands for the squared coupling (zeta**2 or g**2); every polynomial the
package builds is even in the coupling, so working in t halves degrees and
keeps coefficients integral.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Any, Iterable, Mapping

from .poly import InexactDivisionError, UniPoly

Monomial = tuple[int, int]  # (degree in E, degree in t)


class BiPoly:
    """Immutable polynomial ``sum c[i, j] * E**i * t**j``; zero coefficients are never stored."""

    __slots__ = ("terms", "_hash")

    def __init__(self, terms: Mapping[Monomial, Any] | Iterable[tuple[Monomial, Any]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        clean: dict[Monomial, Any] = {}
        for (i, j), c in items:
            if i < 0 or j < 0:
                raise ValueError("negative exponent")
            if c:
                clean[(i, j)] = clean.get((i, j), 0) + c
                if not clean[(i, j)]:
                    del clean[(i, j)]
        self.terms: dict[Monomial, Any] = clean
        self._hash = None

    # constructors -------------------------------------------------------
    @classmethod
    def E(cls) -> "BiPoly":
        return cls({(1, 0): 1})

    @classmethod
    def t(cls) -> "BiPoly":
        return cls({(0, 1): 1})

    @classmethod
    def const(cls, c: Any) -> "BiPoly":
        return cls({(0, 0): c})

    @classmethod
    def from_E_poly(cls, p: UniPoly) -> "BiPoly":
        """From a polynomial in E whose coefficients are ints, rationals or polynomials in t."""
        terms: dict[Monomial, Any] = {}
        for i, c in enumerate(p.coeffs):
            if isinstance(c, UniPoly):
                for j, cj in enumerate(c.coeffs):
                    if cj:
                        terms[(i, j)] = cj
            elif c:
                terms[(i, 0)] = c
        return cls(terms)

    # properties ---------------------------------------------------------
    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    @property
    def degree_E(self) -> int:
        return max((i for i, _ in self.terms), default=-1)

    @property
    def degree_t(self) -> int:
        return max((j for _, j in self.terms), default=-1)

    def coeff(self, i: int, j: int) -> Any:
        return self.terms.get((i, j), 0)

    def is_integral(self) -> bool:
        return all(isinstance(c, int) or (isinstance(c, Fraction) and c.denominator == 1)
                   for c in self.terms.values())

    def __eq__(self, other: object) -> bool:
        if isinstance(other, BiPoly):
            return self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self.terms == ({(0, 0): other} if other else {})
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    def __repr__(self) -> str:
        return f"BiPoly({self.format()})"

    def format(self, e: str = "E", t: str = "t") -> str:
        if not self.terms:
            return "0"
        parts = []
        for (i, j) in sorted(self.terms, key=lambda m: (-m[0], -m[1])):
            c = self.terms[(i, j)]
            mono = "*".join(
                s for s in (
                    (e if i == 1 else f"{e}^{i}") if i else "",
                    (t if j == 1 else f"{t}^{j}") if j else "",
                ) if s
            )
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append("-" + mono)
            else:
                parts.append(f"{c}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")

    __str__ = format

    # ring operations ----------------------------------------------------
    @staticmethod
    def _coerce(other: Any) -> "BiPoly":
        if isinstance(other, BiPoly):
            return other
        if isinstance(other, (int, Fraction)):
            return BiPoly.const(other)
        return NotImplemented

    def __add__(self, other: Any) -> "BiPoly":
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        terms = dict(self.terms)
        for m, c in o.terms.items():
            terms[m] = terms.get(m, 0) + c
        return BiPoly(terms)

    __radd__ = __add__

    def __neg__(self) -> "BiPoly":
        return BiPoly({m: -c for m, c in self.terms.items()})

    def __sub__(self, other: Any) -> "BiPoly":
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other: Any) -> "BiPoly":
        return self._coerce(other) - self

    def __mul__(self, other: Any) -> "BiPoly":
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        out: dict[Monomial, Any] = {}
        for (i1, j1), c1 in self.terms.items():
            for (i2, j2), c2 in o.terms.items():
                key = (i1 + i2, j1 + j2)
                out[key] = out.get(key, 0) + c1 * c2
        return BiPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "BiPoly":
        out = BiPoly.const(1)
        for _ in range(n):
            out = out * self
        return out

    # evaluation ---------------------------------------------------------
    def __call__(self, E: Any, t: Any) -> Any:
        return self.evaluate(E, t)

    def evaluate(self, E: Any, t: Any) -> Any:
        """Value at (E, t); exact for rational inputs."""
        acc: Any = 0
        for i in range(self.degree_E, -1, -1):
            acc = acc * E + self.coeff_in_E(i)(t)
        return acc

    def coeff_in_E(self, i: int) -> UniPoly:
        """Coefficient of E**i as a polynomial in t."""
        cs: dict[int, Any] = {j: c for (ii, j), c in self.terms.items() if ii == i}
        if not cs:
            return UniPoly()
        return UniPoly([cs.get(j, 0) for j in range(max(cs) + 1)])

    def as_poly_in_E(self) -> UniPoly:
        """Polynomial in E with coefficients in Q[t]."""
        return UniPoly([self.coeff_in_E(i) for i in range(self.degree_E + 1)])

    def subs_t(self, t: Any) -> UniPoly:
        """Univariate polynomial in E after substituting a value for t."""
        return UniPoly([self.coeff_in_E(i)(t) for i in range(self.degree_E + 1)])

    def subs_E(self, E: Any) -> UniPoly:
        """Univariate polynomial in t after substituting a value for E."""
        out: dict[int, Any] = {}
        for (i, j), c in self.terms.items():
            out[j] = out.get(j, 0) + c * E ** i
        if not out:
            return UniPoly()
        return UniPoly([out.get(j, 0) for j in range(max(out) + 1)])

    # division -----------------------------------------------------------
    def _leading(self) -> tuple[Monomial, Any]:
        m = max(self.terms)  # lex order: E first, then t
        return m, self.terms[m]

    def exact_divide(self, other: "BiPoly") -> "BiPoly":
        """``q`` with ``self == q * other``; raises :class:`InexactDivisionError` otherwise."""
        if other.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        rem = dict(self.terms)
        (bi, bj), bc = other._leading()
        quo: dict[Monomial, Any] = {}
        while rem:
            (ri, rj) = max(rem)
            rc = rem[(ri, rj)]
            if ri < bi or rj < bj:
                raise InexactDivisionError(
                    f"{self.format()} is not divisible by {other.format()}")
            if isinstance(rc, int) and isinstance(bc, int) and rc % bc == 0:
                qc: Any = rc // bc
            else:
                qc = Fraction(rc) / bc
            qm = (ri - bi, rj - bj)
            quo[qm] = qc
            for (oi, oj), oc in other.terms.items():
                key = (oi + qm[0], oj + qm[1])
                v = rem.get(key, 0) - qc * oc
                if v:
                    rem[key] = v
                else:
                    rem.pop(key, None)
        return BiPoly(quo)

    __truediv__ = exact_divide
    exact_div = exact_divide


E = BiPoly.E()
T = BiPoly.t()
