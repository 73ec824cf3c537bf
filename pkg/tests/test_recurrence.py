from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from e2qes.errors import ConfigError, PoleError
from e2qes.exactalg.bipoly import BiPoly
from e2qes.recurrence import (RecurrenceSpec, Sector, build_P_table, canonical_sequence,
                              evaluate_monomials, factor_quotients, fibonacci, gap_two_sets,
                              gonoskov_sum, pascal_cell, pascal_shallow_union, raw_coefficients)

E, t = BiPoly.E(), BiPoly.t()
rationals = st.fractions(min_value=-50, max_value=50, max_denominator=30)
couplings = st.fractions(min_value=Fraction(1, 20), max_value=5, max_denominator=30)


def test_cutoffs():
    s, c = RecurrenceSpec(7, "s"), RecurrenceSpec(7, "c")
    assert (s.M, s.K, c.L, c.K) == (3, 3, 4, 4)


def test_even_N_guard():
    with pytest.raises(ConfigError):
        RecurrenceSpec(4, "s")
    spec = RecurrenceSpec(4, "c", allow_even=True)
    assert spec.pt_broken_everywhere and spec.K == 2


def test_bad_sector():
    with pytest.raises(ConfigError):
        RecurrenceSpec(5, "x")


def test_first_polynomials_sine():
    tab = build_P_table(RecurrenceSpec(5, Sector.SINE), 2)
    assert tab[0] == BiPoly.const(1)
    assert tab[1] == E - t - 4
    # P2 = (E - t - 16) P1 + t (25 - 9)
    assert tab[2] == (E - t - 16) * (E - t - 4) + 16 * t


def test_first_polynomials_cosine():
    tab = build_P_table(RecurrenceSpec(5, Sector.COSINE), 2)
    assert tab[1] == E - t
    assert tab[2] == (E - t - 4) * (E - t) + 2 * t * 24


def test_sine_truncation_zero_coefficient():
    # on shell, the first coefficient past the cutoff vanishes: P_{K+1} is a multiple of P_K
    spec = RecurrenceSpec(9, Sector.SINE)
    tab = build_P_table(spec, spec.K + 1)
    q = tab[spec.K + 1].exact_divide(tab[spec.K])
    assert q * tab[spec.K] == tab[spec.K + 1]


@settings(max_examples=25, deadline=None)
@given(couplings, rationals)
def test_canonical_form_rebuilds_coefficients(z, e):
    for spec in (RecurrenceSpec(7, "s"), RecurrenceSpec(5, "c")):
        tab = build_P_table(spec, 10)
        try:
            cs = canonical_sequence(spec, z, e, 9)
        except PoleError:
            return
        for n in range(10):
            assert cs.coefficient(n) == raw_coefficients(tab, z, e, n)


def test_pole_detected():
    # alpha_2 vanishes at E = zeta^2 + 16
    z = Fraction(1, 2)
    with pytest.raises(PoleError) as info:
        canonical_sequence(RecurrenceSpec(7, "s"), z, z * z + 16, 5)
    assert info.value.index == 2


def test_zero_coupling_rejected():
    with pytest.raises(ConfigError):
        raw_coefficients(build_P_table(RecurrenceSpec(3, "s"), 2), Fraction(0), Fraction(1), 1)


def test_gap_two_sets():
    assert list(gap_two_sets(5, 2)) == [(1, 3), (1, 4), (1, 5), (2, 4), (2, 5), (3, 5)]
    assert list(gap_two_sets(4, 3)) == []


def test_small_shallow_unions():
    assert pascal_shallow_union(0) == [()]
    assert pascal_shallow_union(2) == [(), (1,)]
    assert pascal_shallow_union(3) == [(), (1,), (2,)]
    assert pascal_shallow_union(4) == [(), (1,), (2,), (3,), (1, 3)]
    assert pascal_cell(0, 1) == frozenset()


@pytest.mark.parametrize("n", range(16))
def test_shallow_union_sizes_are_fibonacci(n):
    assert len(pascal_shallow_union(n)) == fibonacci(n + 1)


@settings(max_examples=20, deadline=None)
@given(st.lists(rationals, min_size=15, max_size=15))
def test_gonoskov_and_pascal_agree_with_recurrence(g):
    gamma = [Fraction(0)] + g
    s = [Fraction(1), Fraction(1)]
    for n in range(1, 15):
        s.append(s[n] + gamma[n] * s[n - 1])
    for n in range(16):
        assert gonoskov_sum(gamma, n) == s[n]
        assert evaluate_monomials(pascal_shallow_union(n), gamma) == s[n]


def test_factor_quotients_and_hat_coefficients(sine7):
    tab = build_P_table(sine7, 6)
    fq = factor_quotients(tab, 3)
    for k in range(4):
        assert fq[k] * tab[3] == tab[3 + k]
    assert fq[0] == BiPoly.const(1)


def test_even_N_has_no_factorization():
    spec = RecurrenceSpec(6, "s", allow_even=True)
    with pytest.raises(ConfigError):
        factor_quotients(build_P_table(spec, 4), 1)
