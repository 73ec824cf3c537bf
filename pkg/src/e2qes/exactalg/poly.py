"""Dense univariate polynomials over exact rings.

Coefficients are stored low degree first.  The ring is whatever the
coefficients are: ``int``, :class:`~fractions.Fraction`, or another
:class:`UniPoly` (for polynomials in E with coefficients in Z[t]).
Field-only operations (``divmod``, ``gcd``, squarefree decomposition)
expect rational coefficients.
"""
from __future__ import annotations

import math
from fractions import Fraction
from typing import Any, Iterable, Sequence


class InexactDivisionError(ArithmeticError):
    """Raised when a division that must be exact leaves a remainder."""


def exact_quotient(a: Any, b: Any) -> Any:
    """Quotient of ``a`` by ``b`` in their common ring, refusing remainders."""
    if isinstance(a, UniPoly) or isinstance(b, UniPoly):
        a = a if isinstance(a, UniPoly) else UniPoly([a])
        b = b if isinstance(b, UniPoly) else UniPoly([b])
        return a.exact_div(b)
    if isinstance(a, int) and isinstance(b, int):
        q, r = divmod(a, b)
        if r:
            raise InexactDivisionError(f"{a} is not divisible by {b}")
        return q
    if hasattr(a, "exact_div"):
        return a.exact_div(b)
    return Fraction(a) / b


def _is_zero(c: Any) -> bool:
    return not c


class UniPoly:
    """Immutable dense polynomial ``sum(coeffs[k] * x**k)``."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Any] = ()):
        cs = list(coeffs)
        while cs and _is_zero(cs[-1]):
            cs.pop()
        self.coeffs: tuple = tuple(cs)

    # construction -----------------------------------------------------
    @classmethod
    def x(cls) -> "UniPoly":
        return cls([0, 1])

    @classmethod
    def constant(cls, c: Any) -> "UniPoly":
        return cls([c])

    @classmethod
    def from_roots(cls, roots: Iterable[Any]) -> "UniPoly":
        p = cls([1])
        for r in roots:
            p = p * cls([-r, 1])
        return p

    # basic properties -------------------------------------------------
    @property
    def degree(self) -> int:
        """Degree, with ``-1`` for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    @property
    def lc(self) -> Any:
        return self.coeffs[-1] if self.coeffs else 0

    def __len__(self) -> int:
        return len(self.coeffs)

    def __getitem__(self, k: int) -> Any:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def __eq__(self, other: object) -> bool:
        if isinstance(other, UniPoly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == ((other,) if other else ())
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"UniPoly({list(self.coeffs)!r})"

    def __str__(self) -> str:
        return self.format("x")

    def format(self, var: str = "x") -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for k in range(self.degree, -1, -1):
            c = self.coeffs[k]
            if _is_zero(c):
                continue
            cs = f"({c})" if isinstance(c, UniPoly) else str(c)
            mono = "" if k == 0 else (var if k == 1 else f"{var}^{k}")
            if mono and cs == "1":
                terms.append(mono)
            elif mono and cs == "-1":
                terms.append("-" + mono)
            else:
                terms.append(cs + ("*" + mono if mono else ""))
        return " + ".join(terms).replace("+ -", "- ")

    # ring operations --------------------------------------------------
    def _coerce(self, other: Any) -> "UniPoly":
        return other if isinstance(other, UniPoly) else UniPoly([other])

    def __add__(self, other: Any) -> "UniPoly":
        o = self._coerce(other)
        a, b = self.coeffs, o.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return UniPoly(out)

    __radd__ = __add__

    def __neg__(self) -> "UniPoly":
        return UniPoly([-c for c in self.coeffs])

    def __sub__(self, other: Any) -> "UniPoly":
        return self + (-self._coerce(other))

    def __rsub__(self, other: Any) -> "UniPoly":
        return self._coerce(other) - self

    def __mul__(self, other: Any) -> "UniPoly":
        if not isinstance(other, UniPoly):
            if _is_zero(other):
                return UniPoly()
            return UniPoly([c * other for c in self.coeffs])
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return UniPoly()
        out = [0] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if _is_zero(ai):
                continue
            for j, bj in enumerate(b):
                out[i + j] = out[i + j] + ai * bj
        return UniPoly(out)

    def __rmul__(self, other: Any) -> "UniPoly":
        return self * other

    def __pow__(self, n: int) -> "UniPoly":
        if n < 0:
            raise ValueError("negative power")
        out, base = UniPoly([1]), self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def scale(self, c: Any) -> "UniPoly":
        return self * c

    def shift_degree(self, k: int) -> "UniPoly":
        """Multiply by ``x**k``."""
        return UniPoly([0] * k + list(self.coeffs)) if self.coeffs else UniPoly()

    # evaluation -------------------------------------------------------
    def __call__(self, x: Any) -> Any:
        acc: Any = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    evaluate = __call__

    def eval_rational_sign(self, x: Fraction) -> int:
        """Sign of ``p(x)`` for integer/rational coefficients, computed homogeneously."""
        x = Fraction(x)
        p, q = x.numerator, x.denominator
        n = self.degree
        if n < 0:
            return 0
        acc = 0
        qpow = 1
        # acc = sum c_k p^k q^(n-k) = q^n p(x), same sign since q > 0
        for c in reversed(self.coeffs):
            acc = acc * p + c * qpow
            qpow *= q
        return (acc > 0) - (acc < 0)

    def derivative(self) -> "UniPoly":
        return UniPoly([k * c for k, c in enumerate(self.coeffs)][1:])

    def map_coeffs(self, fn) -> "UniPoly":
        return UniPoly([fn(c) for c in self.coeffs])

    def to_float(self) -> list[float]:
        return [float(c) for c in self.coeffs]

    # division ---------------------------------------------------------
    def exact_div(self, other: Any) -> "UniPoly":
        """Quotient ``q`` with ``self == q * other``; raises on a nonzero remainder."""
        b = self._coerce(other)
        if b.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        rem = list(self.coeffs)
        db = b.degree
        if len(rem) - 1 < db:
            if rem:
                raise InexactDivisionError("dividend degree below divisor degree")
            return UniPoly()
        quo = [0] * (len(rem) - db)
        blc = b.lc
        for k in range(len(rem) - 1 - db, -1, -1):
            c = rem[k + db]
            if _is_zero(c):
                continue
            qk = exact_quotient(c, blc)
            quo[k] = qk
            for j, bj in enumerate(b.coeffs):
                rem[k + j] = rem[k + j] - qk * bj
        if any(not _is_zero(c) for c in rem):
            raise InexactDivisionError("nonzero remainder in exact division")
        return UniPoly(quo)

    def __divmod__(self, other: Any) -> tuple["UniPoly", "UniPoly"]:
        b = self._coerce(other)
        if b.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        rem = [Fraction(c) for c in self.coeffs]
        db = b.degree
        if len(rem) - 1 < db:
            return UniPoly(), UniPoly(rem)
        quo = [Fraction(0)] * (len(rem) - db)
        inv = Fraction(1) / Fraction(b.lc)
        for k in range(len(rem) - 1 - db, -1, -1):
            qk = rem[k + db] * inv
            if qk:
                quo[k] = qk
                for j, bj in enumerate(b.coeffs):
                    rem[k + j] -= qk * bj
        return UniPoly(quo), UniPoly(rem[:db])

    def __mod__(self, other: Any) -> "UniPoly":
        return divmod(self, other)[1]

    def __floordiv__(self, other: Any) -> "UniPoly":
        return divmod(self, other)[0]

    def pseudo_rem(self, other: "UniPoly") -> "UniPoly":
        """``lc(other)**(deg self - deg other + 1) * self mod other``, over the integers."""
        b = other
        r = list(self.coeffs)
        db = b.degree
        if len(r) - 1 < db:
            return UniPoly(r)
        e = len(r) - 1 - db + 1
        blc = b.lc
        while len(r) - 1 >= db and r:
            c = r[-1]
            shift = len(r) - 1 - db
            r = [x * blc for x in r]
            for j, bj in enumerate(b.coeffs):
                r[shift + j] -= c * bj
            r.pop()
            while r and _is_zero(r[-1]):
                r.pop()
            e -= 1
        if e > 0:
            f = blc ** e
            r = [x * f for x in r]
        return UniPoly(r)

    # integer content ---------------------------------------------------
    def content(self) -> int:
        """Positive gcd of integer coefficients (0 for the zero polynomial)."""
        g = 0
        for c in self.coeffs:
            g = math.gcd(g, int(c))
        return g

    def primitive_part(self, positive_lc: bool = True) -> "UniPoly":
        if self.is_zero():
            return self
        p = self.clear_denominators()
        g = p.content()
        out = UniPoly([c // g for c in p.coeffs])
        if positive_lc and out.lc < 0:
            out = -out
        return out

    def clear_denominators(self) -> "UniPoly":
        """Integer multiple of a rational polynomial (scaled by the lcm of denominators)."""
        den = 1
        for c in self.coeffs:
            if isinstance(c, Fraction):
                den = den * c.denominator // math.gcd(den, c.denominator)
        return UniPoly([int(c * den) for c in self.coeffs])

    # field operations -------------------------------------------------
    def monic(self) -> "UniPoly":
        if self.is_zero():
            return self
        inv = Fraction(1) / Fraction(self.lc)
        return UniPoly([Fraction(c) * inv for c in self.coeffs])

    def gcd(self, other: "UniPoly") -> "UniPoly":
        a, b = self, other
        while not b.is_zero():
            a, b = b, a % b
        return a.monic()

    def squarefree_part(self) -> "UniPoly":
        if self.degree < 1:
            return self.monic()
        g = self.gcd(self.derivative())
        return (self // g).monic()

    def squarefree_decomposition(self) -> list[tuple["UniPoly", int]]:
        """Yun's algorithm: ``[(a_i, i)]`` with ``self ~ prod a_i**i``, ``a_i`` monic and squarefree."""
        if self.degree < 1:
            return []
        f = self.monic()
        df = f.derivative()
        a0 = f.gcd(df)
        b = f // a0
        c = df // a0
        d = c - b.derivative()
        out = []
        i = 1
        while b.degree > 0:
            a = b.gcd(d)
            b = b // a
            c = d // a
            d = c - b.derivative()
            if a.degree > 0:
                out.append((a, i))
            i += 1
        return out

    def sign_variations(self) -> int:
        signs = [c > 0 for c in self.coeffs if c]
        return sum(1 for s, t in zip(signs, signs[1:]) if s != t)


def poly_from_coeffs(coeffs: Sequence[Any]) -> UniPoly:
    return UniPoly(coeffs)
