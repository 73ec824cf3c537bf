"""Exact real-root isolation: Sturm sequences on the squarefree part, then bisection."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .poly import UniPoly
from .rational import to_decimal_string

DEFAULT_WIDTH = Fraction(1, 10**14)


@dataclass(frozen=True)
class IsolatedRoot:
    """A real root known to lie in ``(lo, hi]``, alone among the roots of the squarefree part."""

    lo: Fraction
    hi: Fraction
    multiplicity: int
    refined: float

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    @property
    def midpoint(self) -> Fraction:
        return (self.lo + self.hi) / 2

    def decimal(self, digits: int) -> str:
        return to_decimal_string(self.midpoint, digits)


def _integer_primitive(p: UniPoly) -> UniPoly:
    return p.primitive_part(positive_lc=False)


def sturm_sequence(p: UniPoly) -> list[UniPoly]:
    """Sturm chain of the squarefree part of ``p``, kept primitive over the integers.

    Only positive factors are removed from each remainder, so sign
    variation counts are those of the classical chain.
    """
    s0 = _integer_primitive(p.squarefree_part())
    chain = [s0]
    if s0.degree < 1:
        return chain
    chain.append(_integer_primitive(s0.derivative()))
    while chain[-1].degree > 0:
        a, b = chain[-2], chain[-1]
        delta = a.degree - b.degree
        r = a.pseudo_rem(b)
        if b.lc < 0 and (delta + 1) % 2 == 1:
            r = -r
        r = -r
        if r.is_zero():
            break
        g = r.content()
        chain.append(UniPoly([c // g for c in r.coeffs]))
    return chain


def _sign_at(p: UniPoly, x: Optional[Fraction], at_neg_inf: bool = False) -> int:
    if x is None:
        s = (p.lc > 0) - (p.lc < 0)
        if at_neg_inf and p.degree % 2 == 1:
            s = -s
        return s
    return p.eval_rational_sign(x)


def _variations(chain: list[UniPoly], x: Optional[Fraction], at_neg_inf: bool = False) -> int:
    signs = [s for s in (_sign_at(p, x, at_neg_inf) for p in chain) if s]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def sturm_count(p: UniPoly, lo: Optional[Fraction] = None, hi: Optional[Fraction] = None,
                chain: Optional[list[UniPoly]] = None) -> int:
    """Number of distinct real roots in ``(lo, hi]``; ``None`` means -inf / +inf."""
    chain = chain or sturm_sequence(p)
    return _variations(chain, lo, at_neg_inf=lo is None) - _variations(chain, hi)


def root_bound(p: UniPoly) -> Fraction:
    """Power of two strictly above every root modulus (Cauchy bound)."""
    lc = abs(Fraction(p.lc))
    m = max((abs(Fraction(c)) / lc for c in p.coeffs[:-1]), default=Fraction(0))
    b = 1 + m
    bound = Fraction(1)
    while bound <= b:
        bound *= 2
    return bound


def isolate_real_roots(p: UniPoly, interval: Optional[tuple[Fraction, Fraction]] = None,
                       width: Fraction = DEFAULT_WIDTH) -> list[IsolatedRoot]:
    """Isolate and refine every distinct real root of ``p`` in ``(lo, hi]``.

    Multiplicities come from the squarefree decomposition.  With no
    interval, all real roots are returned.
    """
    if p.is_zero():
        raise ValueError("the zero polynomial has no isolated roots")
    if p.degree < 1:
        return []
    p = UniPoly([Fraction(c) for c in p.coeffs])
    factors = p.squarefree_decomposition()
    chain = sturm_sequence(p)
    sqf = chain[0]
    if interval is None:
        b = root_bound(p)
        lo, hi = -b, b
    else:
        lo, hi = Fraction(interval[0]), Fraction(interval[1])
        if lo >= hi:
            return []

    isolated: list[tuple[Fraction, Fraction]] = []
    stack = [(lo, hi, sturm_count(sqf, lo, hi, chain))]
    while stack:
        a, b, n = stack.pop()
        if n == 0:
            continue
        if n == 1:
            isolated.append((a, b))
            continue
        m = (a + b) / 2
        stack.append((m, b, sturm_count(sqf, m, b, chain)))
        stack.append((a, m, sturm_count(sqf, a, m, chain)))
    isolated.sort()

    out = []
    for a, b in isolated:
        a, b = _refine(sqf, a, b, width)
        mult = 1
        for f, k in factors:
            fi = _integer_primitive(f)
            sb = fi.eval_rational_sign(b)
            if sb == 0 or sb != fi.eval_rational_sign(a) and sturm_count(fi, a, b) == 1:
                mult = k
                break
        out.append(IsolatedRoot(a, b, mult, _approx(sqf, a, b)))
    return out


def _approx(sqf: UniPoly, lo: Fraction, hi: Fraction) -> float:
    return float(hi) if sqf.eval_rational_sign(hi) == 0 else float((lo + hi) / 2)


def _refine(sqf: UniPoly, lo: Fraction, hi: Fraction, width: Fraction) -> tuple[Fraction, Fraction]:
    sh = sqf.eval_rational_sign(hi)
    if sh == 0:
        return max(lo, hi - width / 2), hi
    while hi - lo > width:
        m = (lo + hi) / 2
        sm = sqf.eval_rational_sign(m)
        if sm == 0:
            return max(lo, m - width / 2), m
        if sm == sh:
            hi = m
        else:
            lo = m
    return lo, hi


def refine_root(p: UniPoly, root: IsolatedRoot, width: Fraction) -> IsolatedRoot:
    sqf = sturm_sequence(p)[0]
    lo, hi = _refine(sqf, root.lo, root.hi, width)
    return IsolatedRoot(lo, hi, root.multiplicity, _approx(sqf, lo, hi))
