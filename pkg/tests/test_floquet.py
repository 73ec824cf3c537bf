import numpy as np
import pytest

from e2qes.floquet import (critical_coupling, floquet_periodic_eigenvalues, monodromy,
                           trace_function)
from e2qes.mathieu import build_operator, eigensolve
from e2qes.wavefunction import mathieu_residual


def test_free_levels():
    r = floquet_periodic_eigenvalues(0.0, (-0.5, 16.5))
    got = np.array(r.eigenvalues)
    assert np.allclose(got, [0, 4, 4, 16, 16], atol=1e-6)


@pytest.mark.parametrize("g,E", [(0.0, 1.0), (1.3, 7.7), (1.46877, 2.0), (20.0, -3.0)])
def test_monodromy_is_unimodular(g, E):
    m = monodromy(g, [E])[0]
    # det cancels products of size |m00 m11|; that sets the floor once solutions grow
    scale = max(1.0, abs(m[0, 0] * m[1, 1]))
    assert abs(np.linalg.det(m) - 1) < 1e-8 * scale


def test_full_period_factorization():
    es = np.linspace(-0.5, 20, 9)
    m = monodromy(0.7, es)
    tp = np.trace(m, axis1=1, axis2=2)
    assert np.allclose(trace_function(0.7, es), (tp * tp - 2).real - 2)


def test_agrees_with_truncated_operators():
    # pi-periodic Floquet levels are the Xi and Theta eigenvalues
    g = 1.0
    fl = floquet_periodic_eigenvalues(g, (-0.5, 20.0)).eigenvalues
    ops = np.concatenate([eigensolve(build_operator(k, 27, g)) for k in ("xi", "theta")])
    ops = np.sort(ops.real[(ops.real < 20) & (np.abs(ops.imag) < 1e-9)])
    assert np.allclose(fl, ops, atol=1e-6)


def test_pair_collides_at_critical_value():
    below = floquet_periodic_eigenvalues(1.46, full_period=True).eigenvalues
    above = floquet_periodic_eigenvalues(1.48, full_period=True).eigenvalues
    assert len(below) == 2 and abs(below[1] - below[0]) < 1.0
    assert above == ()


def test_critical_coupling():
    assert abs(critical_coupling() - 1.46877) < 1e-5


def test_floquet_pair_solves_equation():
    g = 1.0
    op = build_operator("theta", 27, g)
    w, v = np.linalg.eig(op.matrix())
    E = floquet_periodic_eigenvalues(g).eigenvalues[0]
    k = int(np.argmin(np.abs(w - E)))
    assert abs(w[k] - E) < 1e-7
    assert mathieu_residual("theta", g, E, v[:, k], np.linspace(0, np.pi, 40)) < 1e-6
