"""Exact rationals and their conversion to floating point.

``BigRat`` is :class:`fractions.Fraction`: arbitrary-precision, always in
lowest terms, positive denominator, zero stored as ``0/1``.
"""
from __future__ import annotations

import decimal
import re
from fractions import Fraction
from typing import Union

BigRat = Fraction
RationalLike = Union[int, Fraction, str]

_DECIMAL_RE = re.compile(r"^[+-]?(\d+(\.\d*)?|\.\d+)([eE][+-]?\d+)?$")


def parse_rational(text: str) -> Fraction:
    """Parse ``"p/q"``, an integer or a decimal literal without going through binary floats.

    >>> parse_rational("0.3")
    Fraction(3, 10)
    >>> parse_rational("-7/14")
    Fraction(-1, 2)
    """
    s = text.strip()
    if "/" in s:
        num, _, den = s.partition("/")
        try:
            q = Fraction(int(num.strip()), int(den.strip()))
        except (ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"not a rational number: {text!r}") from exc
        return q
    if not _DECIMAL_RE.match(s):
        raise ValueError(f"not a rational number: {text!r}")
    return Fraction(decimal.Decimal(s))


def as_rational(x: RationalLike) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return parse_rational(x)
    raise TypeError(f"expected an exact rational, got {type(x).__name__}")


def to_float(x: Fraction | int) -> float:
    """Round-to-nearest double (``Fraction.__float__`` is correctly rounded)."""
    return float(x)


def to_decimal_string(x: Fraction | int, digits: int) -> str:
    """Decimal expansion of ``x`` with ``digits`` significant digits, rounded half-even."""
    x = Fraction(x)
    with decimal.localcontext() as ctx:
        ctx.prec = max(digits, 1)
        d = decimal.Decimal(x.numerator) / decimal.Decimal(x.denominator)
    return format(d, "f") if abs(d.adjusted()) < 20 else str(d)


def rational_str(x: Fraction | int) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"
