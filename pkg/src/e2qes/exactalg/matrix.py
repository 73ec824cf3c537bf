"""Dense matrices over exact rings and fraction-free determinants."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Callable, Sequence

from .poly import UniPoly, exact_quotient


@dataclass(frozen=True)
class DenseMatrix:
    """Row-major rectangular matrix; entry type is whatever the caller puts in."""

    rows: tuple[tuple[Any, ...], ...]

    def __init__(self, rows: Sequence[Sequence[Any]]):
        rs = tuple(tuple(r) for r in rows)
        if rs and any(len(r) != len(rs[0]) for r in rs):
            raise ValueError("ragged rows")
        object.__setattr__(self, "rows", rs)

    @property
    def shape(self) -> tuple[int, int]:
        return (len(self.rows), len(self.rows[0]) if self.rows else 0)

    @property
    def nrows(self) -> int:
        return self.shape[0]

    @property
    def ncols(self) -> int:
        return self.shape[1]

    def __getitem__(self, ij: tuple[int, int]) -> Any:
        i, j = ij
        return self.rows[i][j]

    def map(self, fn: Callable[[Any], Any]) -> "DenseMatrix":
        return DenseMatrix([[fn(x) for x in r] for r in self.rows])

    @classmethod
    def identity(cls, n: int, one: Any = 1, zero: Any = 0) -> "DenseMatrix":
        return cls([[one if i == j else zero for j in range(n)] for i in range(n)])

    def to_numpy(self):
        import numpy as np

        return np.array([[complex(x) if isinstance(x, complex) else float(x) for x in r]
                         for r in self.rows])


def _row_content(row: list[Any]) -> int:
    import math

    g = 0
    for x in row:
        if isinstance(x, UniPoly):
            g = math.gcd(g, x.content()) if x else g
        elif isinstance(x, int):
            g = math.gcd(g, x)
        else:
            return 1
    return g or 1


def bareiss_det(m: DenseMatrix) -> Any:
    """Determinant by single-step Bareiss elimination.

    Works over any integral domain whose elements support ``+ - *`` and
    exact division (ints, integer-coefficient polynomials, nested
    polynomials).  No rational intermediates are formed: every division is
    by the previous pivot and is exact.  Integer content is stripped from
    each input row once and multiplied back at the end; stripping between
    elimination steps would break the exact-division invariant.
    """
    n, k = m.shape
    if n != k:
        raise ValueError(f"determinant of a non-square {n}x{k} matrix")
    if n == 0:
        return 1
    a = [list(r) for r in m.rows]
    scale = 1
    for r in a:
        c = _row_content(r)
        if c > 1:
            scale *= c
            for j in range(n):
                r[j] = exact_quotient(r[j], c)
    sign = 1
    prev: Any = 1
    for p in range(n - 1):
        if not a[p][p]:
            swap = next((i for i in range(p + 1, n) if a[i][p]), None)
            if swap is None:
                return _zero_like(a[0][0])
            a[p], a[swap] = a[swap], a[p]
            sign = -sign
        piv = a[p][p]
        rp = a[p]
        for i in range(p + 1, n):
            ri = a[i]
            aip = ri[p]
            for j in range(p + 1, n):
                num = piv * ri[j] - aip * rp[j]
                ri[j] = exact_quotient(num, prev) if prev != 1 else num
            ri[p] = _zero_like(aip)
        prev = piv
    det = a[n - 1][n - 1]
    if sign < 0:
        det = -det
    if scale != 1:
        det = det * scale
    return det


def _zero_like(x: Any) -> Any:
    return UniPoly() if isinstance(x, UniPoly) else 0


def cofactor_det(m: DenseMatrix) -> Any:
    """Laplace expansion along the first row.  Exponential cost; reference use only."""
    n, k = m.shape
    if n != k:
        raise ValueError("non-square")
    if n == 1:
        return m.rows[0][0]
    if n == 0:
        return 1
    total: Any = 0
    for j in range(n):
        minor = DenseMatrix([r[:j] + r[j + 1:] for r in m.rows[1:]])
        term = m.rows[0][j] * cofactor_det(minor)
        total = total + term if j % 2 == 0 else total - term
    return total
