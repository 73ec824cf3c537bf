from fractions import Fraction

import pytest
import sympy

from e2qes import reference as ref
from e2qes.discriminant import (discriminant_in_t, qes_discriminant, qes_exceptional_points,
                                sylvester_matrix, table1_row)
from e2qes.exactalg import UniPoly, bareiss_det
from e2qes.recurrence import RecurrenceSpec
from e2qes.spectrum import quantization_polynomial


def desc(cs):
    return UniPoly(list(reversed(cs)))


@pytest.mark.parametrize("key", sorted(ref.DISCRIMINANTS))
def test_printed_discriminants(key):
    assert qes_discriminant(RecurrenceSpec(*key)).delta == desc(ref.DISCRIMINANTS[key])


def test_leading_terms_of_largest():
    d = qes_discriminant(RecurrenceSpec(11, "c")).delta
    lead = ref.DISCRIMINANT_LEADING[(11, "c")]
    assert [d[d.degree - k] for k in range(5)] == lead


@pytest.mark.parametrize("key", ref.TRIVIAL_DISCRIMINANTS)
def test_trivial_discriminants(key):
    assert qes_discriminant(RecurrenceSpec(*key)).delta == UniPoly([1])


def test_sylvester_against_sympy():
    x = sympy.Symbol("x")
    p = UniPoly([3, -1, 4, 1])
    raw = bareiss_det(sylvester_matrix(p))
    sp = sympy.Poly([1, 4, -1, 3], x)
    # det(S(p, p')) = (-1)^{n(n-1)/2} lc * disc
    assert raw == sympy.resultant(sp, sp.diff(x))
    assert abs(raw) == abs(sympy.discriminant(sp))


def test_sylvester_needs_degree_two():
    with pytest.raises(ValueError):
        sylvester_matrix(UniPoly([1, 1]))


@pytest.mark.parametrize("key", [(5, "c"), (7, "s"), (7, "c")])
def test_discriminant_matches_sympy(key):
    E, u = sympy.symbols("E u")
    q = quantization_polynomial(RecurrenceSpec(*key))
    expr = sum(c * E ** i * u ** j for (i, j), c in q.terms.items())
    d = sympy.Poly(sympy.discriminant(expr, E), u)
    cs = [int(c) for c in d.all_coeffs()]
    g = 0
    for c in cs:
        g = sympy.gcd(g, c)
    prim = [c // g for c in cs]
    if prim[0] < 0:
        prim = [-c for c in prim]
    assert qes_discriminant(RecurrenceSpec(*key)).delta == desc(prim)


def test_kappa_relates_raw_and_primitive():
    d = qes_discriminant(RecurrenceSpec(7, "s"))
    assert d.raw == d.delta.scale(d.kappa)


def test_exceptional_point_is_double_root():
    pts = qes_exceptional_points(RecurrenceSpec(5, "s"))
    assert len(pts) == 1 and pts[0].zeta == 1.5 and pts[0].scaled == 7.5


@pytest.mark.parametrize("N", [3, 5, 7, 9])
def test_table1_rows(N):
    got = [p.scaled for p in table1_row(N)]
    printed = ref.TABLE_QES[N]
    assert len(got) == len(printed)
    for g, p in zip(got, printed):
        assert ref.significant_match(g, p, 5), (g, p)


def test_table1_N11_against_own_discriminant():
    # the printed Delta_11^s is reproduced exactly; its roots fix the N=11 row
    delta = desc(ref.DISCRIMINANTS[(11, "s")])
    u = sympy.Symbol("u")
    roots = sorted(float(r) for r in sympy.Poly(list(reversed(delta.coeffs)), u).real_roots() if r > 0)
    scaled_s = sorted(11 * r ** 0.5 for r in roots)
    got = sorted(p.scaled for p in table1_row(11) if p.sector.value == "s")
    assert len(got) == len(scaled_s)
    for a, b in zip(got, scaled_s):
        assert abs(a - b) < 1e-9 * b
    # and that root is 32.6043, not the tabulated 32.5974
    assert any(abs(b - 32.604291) < 1e-5 for b in scaled_s)


def test_discriminant_in_t_of_linear_is_one():
    q = quantization_polynomial(RecurrenceSpec(3, "s"))
    assert discriminant_in_t(q) == (UniPoly([1]), UniPoly([1]))
