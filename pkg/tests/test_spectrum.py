from fractions import Fraction

import pytest

from e2qes import reference as ref
from e2qes.recurrence import RecurrenceSpec
from e2qes.spectrum import energies, is_broken, match_branches, sweep


def test_E3s():
    res = energies(RecurrenceSpec(3, "s"), Fraction(1))
    assert res.energies == (5 + 0j,)
    assert res.pt_status.all_real


@pytest.mark.parametrize("zeta", [Fraction(1, 10), Fraction(1, 3), Fraction(3, 2), Fraction(5, 2)])
@pytest.mark.parametrize("N,sec", [(5, "s"), (7, "s"), (3, "c"), (5, "c")])
def test_closed_forms(N, sec, zeta):
    got = energies(RecurrenceSpec(N, sec), zeta).energies
    want = ref.closed_form_energies(N, sec, float(zeta))
    assert ref.multiset_distance(got, want) < 1e-10 * max(1.0, max(map(abs, want)))


def test_pt_breaking_after_exceptional_point():
    # N=5 sine: real below zeta = 3/2, a complex pair above
    spec = RecurrenceSpec(5, "s")
    assert energies(spec, Fraction(1)).pt_status.all_real
    res = energies(spec, Fraction(2))
    assert res.pt_status.broken_pairs == 1
    assert all(is_broken(e) for e in res.energies)


def test_double_root_at_exceptional_point():
    res = energies(RecurrenceSpec(5, "s"), Fraction(3, 2))
    assert res.multiplicities == (2, 2)
    assert res.energies[0] == res.energies[1] == complex(10 + Fraction(9, 4))


def test_conjugate_symmetry_of_spectrum():
    es = energies(RecurrenceSpec(9, "c"), Fraction(7, 3)).energies
    for e in es:
        assert min(abs(e.conjugate() - f) for f in es) < 1e-9 * abs(e)


def test_match_branches_follows_nearest():
    prev = [1 + 0j, 5 + 0j]
    assert match_branches(prev, [5.1 + 0j, 0.9 + 0j]) == [0.9 + 0j, 5.1 + 0j]


def test_sweep_rows_and_columns():
    grid = [Fraction(k, 10) for k in range(1, 6)]
    rows = sweep(RecurrenceSpec(7, "s"), grid)
    assert len(rows) == 5 and len(rows[0].columns()) == 1 + 2 * 3
    with pytest.raises(ValueError):
        sweep(RecurrenceSpec(7, "s"), grid[::-1])


def test_cosine5_cardano_branch_labels():
    z = 0.7
    roots = [ref.energy_cosine5(z, l) for l in (-2, 2, 0)]
    got = energies(RecurrenceSpec(5, "c"), Fraction(7, 10)).energies
    for r in roots:
        assert min(abs(r - g) for g in got) < 1e-10
    assert roots[2].imag == pytest.approx(0, abs=1e-12)
