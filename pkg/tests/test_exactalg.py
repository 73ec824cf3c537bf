from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from e2qes.exactalg import (BiPoly, DenseMatrix, InexactDivisionError, UniPoly, bareiss_det,
                            cofactor_det, complex_roots, isolate_real_roots, parse_rational,
                            sturm_count)
from e2qes.exactalg.poly import exact_quotient
from e2qes.exactalg.realroots import refine_root

x = sympy.Symbol("x")
small = st.integers(-20, 20)


def to_sympy(p: UniPoly):
    return sympy.Poly(list(reversed([sympy.Rational(c) for c in p.coeffs])) or [0], x)


@pytest.mark.parametrize("text,want", [
    ("0.3", Fraction(3, 10)), ("-7/14", Fraction(-1, 2)), ("12", Fraction(12)),
    ("1e-3", Fraction(1, 1000)), (".5", Fraction(1, 2)),
])
def test_parse_rational_exact(text, want):
    assert parse_rational(text) == want


@pytest.mark.parametrize("bad", ["", "abc", "1/0", "0x10", "1.2.3"])
def test_parse_rational_rejects(bad):
    with pytest.raises(ValueError):
        parse_rational(bad)


def test_bareiss_integer_example():
    m = DenseMatrix([[2, -1, 0], [-1, 2, -1], [0, -1, 2]])
    assert bareiss_det(m) == 4


def test_bareiss_needs_pivoting():
    m = DenseMatrix([[0, 1, 2], [1, 0, 3], [4, -3, 8]])
    assert bareiss_det(m) == cofactor_det(m) == -2


def test_bareiss_polynomial_entries():
    t = UniPoly([0, 1])
    m = DenseMatrix([[t, UniPoly([1])], [UniPoly([1]), t]])
    assert bareiss_det(m) == UniPoly([-1, 0, 1])


def test_bareiss_singular():
    assert bareiss_det(DenseMatrix([[1, 2], [2, 4]])) == 0


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 5).flatmap(lambda n: st.lists(st.lists(small, min_size=n, max_size=n),
                                                     min_size=n, max_size=n)))
def test_bareiss_matches_cofactor_and_sympy(rows):
    m = DenseMatrix(rows)
    d = bareiss_det(m)
    assert d == cofactor_det(m)
    assert d == sympy.Matrix(rows).det()


@settings(max_examples=60, deadline=None)
@given(st.lists(small, min_size=1, max_size=5), st.lists(small, min_size=1, max_size=4))
def test_exact_divide_roundtrip(a, b):
    pa, pb = UniPoly(a), UniPoly(b)
    if pb.is_zero() or pa.is_zero():
        return
    assert (pa * pb).exact_div(pb) == pa


def test_inexact_division_raises():
    with pytest.raises(InexactDivisionError):
        UniPoly([1, 0, 1]).exact_div(UniPoly([1, 1]))
    with pytest.raises(InexactDivisionError):
        exact_quotient(7, 2)


@settings(max_examples=50, deadline=None)
@given(st.lists(small, min_size=2, max_size=7))
def test_sturm_count_matches_sympy(cs):
    p = UniPoly(cs)
    if p.degree < 1:
        return
    want = len(sympy.real_roots(to_sympy(p)))
    distinct = len(set(sympy.real_roots(to_sympy(p))))
    assert sturm_count(p) == distinct <= want


def test_isolation_with_double_root():
    # (x - 1)^2 (x + 2) (x - 1/3)
    p = UniPoly.from_roots([1, 1, -2, Fraction(1, 3)])
    roots = isolate_real_roots(p)
    assert [r.multiplicity for r in roots] == [1, 1, 2]
    assert [round(r.refined, 12) for r in roots] == [-2.0, round(1 / 3, 12), 1.0]
    for r in roots:
        assert r.lo < r.hi and r.width <= Fraction(1, 10 ** 14)


def test_isolation_exact_rational_root_reports_it():
    roots = isolate_real_roots(UniPoly([-6, 1]))
    assert roots[0].refined == 6.0


def test_refine_root_narrows():
    p = UniPoly([-2, 0, 1])
    r = isolate_real_roots(p, (Fraction(0), Fraction(4)), width=Fraction(1, 8))[0]
    r2 = refine_root(p, r, Fraction(1, 10 ** 20))
    assert r2.width <= Fraction(1, 10 ** 20)
    assert abs(r2.refined - 2 ** 0.5) < 1e-15


@settings(max_examples=40, deadline=None)
@given(st.lists(st.tuples(st.integers(-9, 9), st.integers(1, 9)), min_size=1, max_size=4, unique=True))
def test_complex_roots_of_products(pairs):
    # distinct conjugate pairs; repeated roots go through the exact squarefree split instead
    p = UniPoly([1])
    want = []
    for a, b in pairs:
        p = p * UniPoly([a * a + b * b, -2 * a, 1])
        want += [complex(a, b), complex(a, -b)]
    got = complex_roots([float(c) for c in p.coeffs])
    assert len(got) == len(want)
    tol = 1e-8 * max(1.0, max(abs(w) for w in want))
    for w in want:
        assert min(abs(g - w) for g in got) < tol


def test_complex_roots_conjugate_pairs_snapped():
    got = complex_roots([5.0, -2.0, 1.0])
    assert sorted(got, key=lambda z: z.imag) == [complex(1, -2), complex(1, 2)]


def test_bipoly_arithmetic_and_division():
    E, t = BiPoly.E(), BiPoly.t()
    a = E * E - 2 * E * t + t * t
    b = E - t
    assert a.exact_divide(b) == b
    assert a(Fraction(3), Fraction(1)) == 4
    with pytest.raises(InexactDivisionError):
        (E * E + t).exact_divide(E - 1)
