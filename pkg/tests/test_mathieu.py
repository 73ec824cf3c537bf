from fractions import Fraction

import numpy as np
import pytest

from e2qes import reference as ref
from e2qes.errors import CapExceeded, ConfigError
from e2qes.mathieu import (Kind, MathieuExceptionalPoint, Method, build_operator, charpoly,
                           eigensolve, exceptional_exact, exceptional_numeric, mathieu_discriminant,
                           stabilized_points, stabilized_scan)
from e2qes.wavefunction import mathieu_residual


def test_operator_conventions():
    xi = build_operator("xi", 3, 2.0).matrix()
    th = build_operator("theta", 3, 2.0).matrix()
    assert np.array_equal(xi, [[4, 2, 0], [-2, 16, 2], [0, -2, 36]])
    assert np.array_equal(th, [[0, 2, 0], [-4, 4, 2], [0, -2, 16]])


@pytest.mark.parametrize("kind", ["xi", "theta"])
@pytest.mark.parametrize("ell", [2, 5, 9, 12])
def test_charpoly_roots_match_eigensolve(kind, ell):
    g = Fraction(37, 10)
    p = charpoly(kind, ell).subs_t(g * g)
    roots = np.roots([float(c) for c in reversed(p.coeffs)])
    w = eigensolve(build_operator(kind, ell, g))
    for r in roots:
        assert np.min(np.abs(w - r)) < 1e-8 * max(1.0, abs(r))


@pytest.mark.parametrize("kind", ["xi", "theta"])
def test_eigensolve_against_numpy(kind):
    op = build_operator(kind, 27, 123.4)
    w = eigensolve(op)
    ref_w = np.sort_complex(np.linalg.eigvals(op.matrix()))
    assert np.allclose(np.sort_complex(w), ref_w, rtol=1e-9, atol=1e-9)
    # real matrix: conjugation symmetric
    assert np.allclose(np.sort_complex(w), np.sort_complex(w.conj()))


def test_smallest_exact_values():
    assert exceptional_exact("xi", 2)[0].g0 == 6.0
    assert abs(exceptional_exact("theta", 2)[0].g0 - 2 ** 0.5) < 1e-14


@pytest.mark.parametrize("ell", range(2, 7))
def test_discriminant_degree(ell):
    for kind in ("xi", "theta"):
        delta, _ = mathieu_discriminant(kind, ell)
        assert 2 * delta.degree == ell * (ell - 1)


@pytest.mark.parametrize("kind,table", [("xi", ref.TABLE_XI), ("theta", ref.TABLE_THETA)])
def test_tables_small_ell(kind, table):
    for ell in range(2, 7):
        got = [p.g0 for p in exceptional_exact(kind, ell)]
        assert len(got) == len(table[ell])
        assert all(ref.decimal_match(g, p) for g, p in zip(got, table[ell]))


def test_exact_cap():
    with pytest.raises(CapExceeded):
        exceptional_exact("xi", 11)
    assert len(exceptional_exact("xi", 3, cap=3)) == 1


def test_bad_truncation_and_kind():
    with pytest.raises(ConfigError):
        build_operator("xi", 1)
    with pytest.raises(ConfigError):
        build_operator("psi", 3)


@pytest.mark.parametrize("kind", ["xi", "theta"])
@pytest.mark.parametrize("ell", [4, 6])
def test_exact_and_numeric_agree(kind, ell):
    ex = [p.g0 for p in exceptional_exact(kind, ell)]
    nu = [p.g0 for p in exceptional_numeric(kind, ell, (0.0, 100.0))]
    assert len(ex) == len(nu)
    for a, b in zip(ex, nu):
        assert abs(a - b) < 1e-6


def test_stabilized_points_disjoint_is_empty():
    a = [MathieuExceptionalPoint(Kind.XI, 1.0, 3, Method.NUMERIC)]
    b = [MathieuExceptionalPoint(Kind.XI, 2.0, 4, Method.NUMERIC)]
    assert stabilized_points(a, b) == []


def test_stabilize_requires_neighbours():
    with pytest.raises(ConfigError):
        stabilized_scan("xi", 10, 12)


@pytest.mark.parametrize("kind,full,bold", [
    ("xi", ref.FULL_XI, ref.STABLE_XI), ("theta", ref.FULL_THETA, ref.STABLE_THETA)])
def test_full_lists_at_26_and_27(kind, full, bold):
    a, b, stable = stabilized_scan(kind, 26, 27)
    for pts, ell in ((a, 26), (b, 27)):
        got = [p.g0 for p in pts]
        assert len(got) == len(full[ell])
        for g, p in zip(got, full[ell]):
            assert abs(g - float(p)) <= 5e-5 * float(p)
    st = [p.g0 for p in stable]
    assert len(st) == len(bold)
    for g, p in zip(st, bold):
        assert abs(g - float(p)) <= 5e-5 * float(p)
    # the stabilized lowest points are the scaling limits of the QES table
    assert abs(st[0] - float(ref.TABLE_QES_LIMIT[0 if kind == "theta" else 1])) < 5e-6 * st[0] + 5e-6


def test_thread_count_does_not_change_results(monkeypatch):
    base = [p.g0 for p in exceptional_numeric("theta", 12, (0.0, 60.0))]
    monkeypatch.setenv("E2SPEC_THREADS", "4")
    assert [p.g0 for p in exceptional_numeric("theta", 12, (0.0, 60.0))] == base


@pytest.mark.parametrize("kind", ["xi", "theta"])
def test_fourier_map_gives_mathieu_solution(kind):
    g = 1.0
    op = build_operator(kind, 27, g)
    w, v = np.linalg.eig(op.matrix())
    k = int(np.argmin(w.real))
    th = np.linspace(0, np.pi, 50)
    assert mathieu_residual(kind, g, w[k], v[:, k], th) < 1e-8
