import numpy as np
import pytest

import toepsys as ts
from toepsys.metric import connes_via_dual

from conftest import random_palindromic, random_state


def n2_state(w):
    a1 = (w[0] + 1j * w[1]) / 2
    return ts.state_from_density(ts.fr_from_coeffs([np.conj(a1), 1.0, a1]))


def test_dirac_commutator_coefficients():
    eye = ts.compress_symbol({0: 1.0}, 3)
    assert np.abs(ts.dirac_commutator(eye).t).max() == 0
    tau1 = ts.compress_symbol({1: 1.0}, 3)
    assert np.allclose(ts.dirac_commutator(tau1).t,
                       (1j * tau1).t)


def test_commutator_matches_dense_bracket(rng):
    n = 5
    half = rng.normal(size=n - 1) + 1j * rng.normal(size=n - 1)
    T = ts.toeplitz_from_coeffs(
        np.concatenate([np.conj(half[::-1]), [0.3 + 0j], half]))
    D = ts.DiracTruncation(n).dense()
    assert np.allclose(ts.dirac_commutator(T).dense(),
                       1j * (D @ T.dense() - T.dense() @ D))


def test_n2_commutator_norm():
    # n=2: || d([[u, a-ib],[a+ib, u]]) || = sqrt(a^2 + b^2)
    a, b = 0.3, -0.7
    T = ts.toeplitz_from_coeffs([a - 1j * b, 1.2, a + 1j * b])
    nrm = ts.operator_norm(ts.dirac_commutator(T))
    assert nrm == pytest.approx(np.hypot(a, b), abs=1e-12)


def test_primitive_round_trip(rng):
    b = random_palindromic(4, rng)
    coeffs = b.a.copy()
    coeffs[3] = 0.0
    b = ts.fr_from_coeffs(coeffs)
    B = ts.primitive(b)
    k = np.arange(-3, 4)
    assert np.allclose(1j * k * B.a, b.a)
    with pytest.raises(ValueError):
        ts.primitive(ts.fr_delta(0, 3))


def test_distance_of_state_with_itself(rng):
    s = random_state(3, rng)
    r = ts.connes_distance(s, s)
    assert r.value == pytest.approx(0.0, abs=1e-9)


def test_n2_closed_form(rng):
    for _ in range(25):
        w = rng.uniform(-0.6, 0.6, 2)
        wp = rng.uniform(-0.6, 0.6, 2)
        r = ts.connes_distance(n2_state(w), n2_state(wp))
        assert r.upper - r.lower <= 1e-6 + 1e-12
        assert r.value == pytest.approx(float(np.linalg.norm(w - wp)),
                                        abs=2e-6)


def test_certificates_and_feasibility(rng):
    phi, psi = random_state(4, rng), random_state(4, rng)
    r = ts.connes_distance(phi, psi)
    assert r.lower <= r.value <= r.upper
    assert r.upper - r.lower <= 1e-6 + 1e-12
    assert ts.operator_norm(ts.dirac_commutator(r.optimizer)) <= 1 + 1e-9
    # the optimizer certifies the lower bound
    attained = ts.evaluate(phi, r.optimizer) - ts.evaluate(psi, r.optimizer)
    assert attained == pytest.approx(r.value, abs=1e-9)


def test_symmetry_and_triangle(rng):
    gap = 1e-6
    a, b, c = (random_state(3, rng) for _ in range(3))
    dab = ts.connes_distance(a, b, gap).value
    dba = ts.connes_distance(b, a, gap).value
    dac = ts.connes_distance(a, c, gap).value
    dcb = ts.connes_distance(c, b, gap).value
    assert abs(dab - dba) <= 2 * gap
    assert dab <= dac + dcb + 2 * gap


def test_dual_norm_dominates_l1(rng):
    # || b ||_* >= circle L1 norm of b
    for _ in range(5):
        b = random_palindromic(3, rng)
        r = ts.dual_norm(b)
        theta = np.linspace(0, 2 * np.pi, 4096, endpoint=False)
        l1 = float(np.mean(np.abs(b(theta))))
        assert r.value >= l1 - 1e-4
        assert ts.operator_norm(r.optimizer) <= 1 + 1e-9
    assert ts.dual_norm(ts.fr_from_coeffs([0, 0, 0])).value == 0.0


def test_dual_route_matches_primal(rng):
    gap = 1e-6
    for n in (2, 3, 4):
        phi, psi = random_state(n, rng), random_state(n, rng)
        primal = ts.connes_distance(phi, psi, gap).value
        dual, _ = connes_via_dual(phi, psi, gap)
        assert abs(primal - dual) <= 2 * gap


def test_kantorovich_oracle():
    uniform = ts.trace_state(2)
    onecos = ts.state_from_density(ts.fr_from_coeffs([0.5, 1.0, 0.5]))
    assert ts.kantorovich(uniform, onecos) == pytest.approx(2 / np.pi,
                                                            abs=1e-8)


def test_kantorovich_basic_properties(rng):
    s = random_state(4, rng)
    assert ts.kantorovich(s, s) == 0.0
    # translation covariance
    phi, psi = random_state(3, rng), random_state(3, rng)
    alpha = 1.1
    k = np.arange(-2, 3)
    rot = np.exp(1j * k * alpha)
    phir = ts.state_from_density(ts.fr_from_coeffs(phi.density.a * rot))
    psir = ts.state_from_density(ts.fr_from_coeffs(psi.density.a * rot))
    assert ts.kantorovich(phir, psir) == pytest.approx(
        ts.kantorovich(phi, psi), abs=1e-8)


def test_connes_dominates_kantorovich(rng):
    for _ in range(10):
        n = int(rng.integers(2, 9))
        phi, psi = random_state(n, rng), random_state(n, rng)
        c = ts.connes_distance(phi, psi)
        k = ts.kantorovich(phi, psi)
        assert c.value >= k - (1e-6 + 1e-8)
