"""Truncated complex-Mathieu operators, their exceptional points, and stabilization.

Xi acts on the sine coefficients (indices 1..l), Theta on the cosine ones
(indices 0..l-1).  Both have diagonal 4i^2, superdiagonal +g and
subdiagonal -g; Theta's (1, 0) entry is -2g.
"""
from __future__ import annotations

import enum
import os
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

import numpy as np

from .discriminant import discriminant_in_t, positive_coupling_roots
from .errors import CapExceeded, ConfigError
from .exactalg.bipoly import BiPoly, E, T
from .exactalg.matrix import DenseMatrix
from .exactalg.realroots import IsolatedRoot
from .linalg import eigvals_hessenberg

EXACT_CAP = 10
SCAN_STEP = 0.25
BISECT_TOL = 5e-7
STAB_TOL = 5e-6
REAL_TOL = 1e-9


class Kind(str, enum.Enum):
    XI = "xi"
    THETA = "theta"

    @classmethod
    def parse(cls, x: "Kind | str") -> "Kind":
        if isinstance(x, Kind):
            return x
        try:
            return cls(str(x).strip().lower())
        except ValueError:
            raise ConfigError(f"unknown operator kind {x!r} (use xi or theta)") from None


class Method(str, enum.Enum):
    EXACT = "exact"
    NUMERIC = "numeric"


@dataclass(frozen=True)
class TruncatedOperator:
    kind: Kind
    ell: int
    g: object = 0

    def __post_init__(self):
        object.__setattr__(self, "kind", Kind.parse(self.kind))
        if self.ell < 2:
            raise ConfigError(f"truncation must be >= 2, got {self.ell}")

    @property
    def indices(self) -> range:
        return range(1, self.ell + 1) if self.kind is Kind.XI else range(self.ell)

    @property
    def diagonal(self) -> list[int]:
        return [4 * i * i for i in self.indices]

    def entries(self, g) -> list[list]:
        n = self.ell
        rows = [[0] * n for _ in range(n)]
        for r, i in enumerate(self.indices):
            rows[r][r] = 4 * i * i
            if r + 1 < n:
                rows[r][r + 1] = g
            if r > 0:
                rows[r][r - 1] = -g
        if self.kind is Kind.THETA:
            rows[1][0] = -2 * g
        return rows

    def matrix(self) -> np.ndarray:
        return np.array(self.entries(float(self.g)), dtype=np.float64)

    def exact_matrix(self) -> DenseMatrix:
        return DenseMatrix(self.entries(Fraction(self.g)))


def build_operator(kind: Kind | str, ell: int, g=0) -> TruncatedOperator:
    return TruncatedOperator(Kind.parse(kind), ell, g)


def charpoly(kind: Kind | str, ell: int) -> BiPoly:
    """``det(E I - A)`` in (E, t = g**2) via the tridiagonal continuant."""
    op = TruncatedOperator(Kind.parse(kind), ell)
    d = op.diagonal
    prev2, prev = BiPoly.const(1), E - d[0]
    for k in range(1, ell):
        # sub*sup product is -t, except -2t for Theta's first pair
        w = 2 * T if (op.kind is Kind.THETA and k == 1) else T
        prev2, prev = prev, (E - d[k]) * prev + w * prev2
    return prev


def eigensolve(op: TruncatedOperator, balance: bool = True) -> np.ndarray:
    return eigvals_hessenberg(op.matrix(), balance)


@dataclass(frozen=True)
class MathieuExceptionalPoint:
    kind: Kind
    g0: float
    ell: int
    method: Method
    root: Optional[IsolatedRoot] = None
    ell_pair: Optional[tuple[int, int]] = None
    stabilized: bool = False
    onset: int = -2


def mathieu_discriminant(kind: Kind | str, ell: int):
    return discriminant_in_t(charpoly(kind, ell))


def exceptional_exact(kind: Kind | str, ell: int, cap: int = EXACT_CAP) -> list[MathieuExceptionalPoint]:
    """Positive real zeros g0 of the discriminant of the characteristic polynomial."""
    kind = Kind.parse(kind)
    if ell > cap:
        raise CapExceeded(f"exact path capped at l={cap}; use the numeric method for l={ell}")
    delta, _ = mathieu_discriminant(kind, ell)
    return [MathieuExceptionalPoint(kind, r.refined, ell, Method.EXACT, root=r)
            for r in positive_coupling_roots(delta)]


# numeric coalescence path ------------------------------------------------

def _worker_count() -> int:
    try:
        return max(1, int(os.environ.get("E2SPEC_THREADS", "1")))
    except ValueError:
        return 1


def real_count(kind: Kind, ell: int, g: float) -> int:
    w = eigensolve(TruncatedOperator(kind, ell, g))
    return int(np.sum(np.abs(w.imag) <= REAL_TOL * np.maximum(1.0, np.abs(w))))


def _counts(kind: Kind, ell: int, grid: Sequence[float]) -> list[int]:
    n = _worker_count()
    if n > 1 and len(grid) > 64:
        from concurrent.futures import ThreadPoolExecutor

        with ThreadPoolExecutor(n) as ex:
            return list(ex.map(lambda g: real_count(kind, ell, g), grid))
    return [real_count(kind, ell, g) for g in grid]


def exceptional_numeric(kind: Kind | str, ell: int, g_window: tuple[float, float] = (0.0, 600.0),
                        tol: float = BISECT_TOL, step: float = SCAN_STEP) -> list[MathieuExceptionalPoint]:
    """Scan g for changes in the number of real eigenvalues and bisect each change.

    A drop by two marks the onset of a complex pair (``onset=-2``); a rise
    marks a pair returning to the real axis.
    """
    kind = Kind.parse(kind)
    lo, hi = g_window
    if not (0 <= lo < hi) or tol <= 0 or step <= 0:
        raise ConfigError("need 0 <= lo < hi, tol > 0, step > 0")
    n = int(np.ceil((hi - lo) / step))
    grid = [lo + k * (hi - lo) / n for k in range(n + 1)]
    counts = _counts(kind, ell, grid)
    out: list[MathieuExceptionalPoint] = []
    for k in range(n):
        if counts[k] == counts[k + 1]:
            continue
        a, b, ca = grid[k], grid[k + 1], counts[k]
        while b - a > tol:
            m = 0.5 * (a + b)
            if real_count(kind, ell, m) == ca:
                a = m
            else:
                b = m
        g0 = 0.5 * (a + b)
        if out and abs(out[-1].g0 - g0) <= tol:
            continue
        out.append(MathieuExceptionalPoint(kind, g0, ell, Method.NUMERIC,
                                           onset=counts[k + 1] - counts[k]))
    return out


def stabilized_points(first: Sequence[MathieuExceptionalPoint], second: Sequence[MathieuExceptionalPoint],
                      stab_tol: float = STAB_TOL, relative: bool = True) -> list[MathieuExceptionalPoint]:
    """Points of ``second`` that reappear in ``first`` within the stabilization tolerance.

    With ``relative`` the tolerance scales with ``max(1, g0)``.
    """
    out = []
    for p in second:
        tol = stab_tol * (max(1.0, p.g0) if relative else 1.0)
        if any(abs(p.g0 - q.g0) <= tol for q in first):
            out.append(MathieuExceptionalPoint(p.kind, p.g0, p.ell, p.method, p.root,
                                               (first[0].ell if first else p.ell, p.ell), True, p.onset))
    return out


def stabilized_scan(kind: Kind | str, ell: int, ell2: int, g_window=(0.0, 600.0),
                    stab_tol: float = STAB_TOL) -> tuple[list[MathieuExceptionalPoint], list[MathieuExceptionalPoint], list[MathieuExceptionalPoint]]:
    """Numeric points at both truncations and their stabilized intersection."""
    if ell2 != ell + 1 and ell != ell2 + 1:
        raise ConfigError("stabilization compares consecutive truncations")
    a = exceptional_numeric(kind, ell, g_window)
    b = exceptional_numeric(kind, ell2, g_window)
    return a, b, stabilized_points(a, b, stab_tol)
