from fractions import Fraction

import numpy as np
import pytest

from e2qes.orthopoly import wavefunction_functional_check
from e2qes.recurrence import RecurrenceSpec
from e2qes.spectrum import energies
from e2qes.wavefunction import assemble, fourier_coefficients, pt3_defect, residual

GRID = np.linspace(0, np.pi, 64, endpoint=False)


@pytest.mark.parametrize("key,zeta", [((7, "s"), Fraction(1, 2)), ((5, "c"), Fraction(1, 3)),
                                      ((9, "c"), Fraction(4, 3)), ((11, "s"), Fraction(1, 5))])
def test_residuals_on_shell(key, zeta):
    spec = RecurrenceSpec(*key)
    for e in energies(spec, zeta).energies:
        assert residual(assemble(spec, zeta, e, GRID)) < 1e-9 * max(1.0, abs(e))


def test_E3s_exact():
    spec = RecurrenceSpec(3, "s")
    cs = fourier_coefficients(spec, Fraction(1), Fraction(5), 3)
    assert cs == [0, 1, 0, 0]
    f = assemble(spec, Fraction(1), 5, GRID)
    assert residual(f) < 1e-14
    # psi = i * phase * i sin(2 theta) = -phase * sin(2 theta)
    want = -np.exp(0.5j * np.cos(2 * GRID)) * np.sin(2 * GRID)
    assert np.allclose(f.samples, want, atol=1e-15)


def test_off_shell_warns_and_fails():
    spec = RecurrenceSpec(7, "s")
    with pytest.warns(UserWarning, match="off shell"):
        f = assemble(spec, Fraction(1, 2), 5.0, GRID)
    assert residual(f) > 1e-3


def test_pt3_symmetry_for_real_levels():
    spec = RecurrenceSpec(7, "s")
    for e in energies(spec, Fraction(1, 2)).energies:
        f = assemble(spec, Fraction(1, 2), e, GRID)
        assert pt3_defect(f) < 1e-12 * max(1.0, float(np.max(np.abs(f.samples))))


def test_complex_pair_breaks_pt3():
    spec = RecurrenceSpec(5, "c")
    es = energies(spec, Fraction(1, 3)).energies
    broken = [e for e in es if abs(e.imag) > 1e-6]
    assert broken
    assert pt3_defect(assemble(spec, Fraction(1, 3), broken[0], GRID)) > 1e-3


@pytest.mark.parametrize("key,zeta", [((7, "s"), Fraction(1, 2)), ((5, "c"), Fraction(1, 3)),
                                      ((9, "s"), Fraction(3, 2))])
def test_functional_identity(key, zeta):
    assert wavefunction_functional_check(RecurrenceSpec(*key), zeta, GRID) < 1e-8


def test_fourier_coefficients_reject_zero_coupling():
    with pytest.raises(ValueError):
        fourier_coefficients(RecurrenceSpec(3, "s"), 0, 1, 2)
