import numpy as np
import pytest

import toepsys as ts

from conftest import random_hermitian_toeplitz, random_state


def test_trace_state():
    s = ts.trace_state(3)
    eye = ts.compress_symbol({0: 1.0}, 3)
    assert ts.evaluate(s, eye) == pytest.approx(1.0)
    G = ts.extreme_ray(np.exp(0.4j), 3)
    assert ts.evaluate(s, G) == pytest.approx(1.0 / 3)


def test_state_normalization():
    a = ts.fr_from_coeffs([0, 2.0, 0])
    s = ts.state_from_density(a)
    assert s.density.coeff(0) == pytest.approx(1.0)


def test_invalid_densities_rejected():
    with pytest.raises(ValueError):
        ts.state_from_density(ts.fr_from_coeffs([0.8, 1.0, 0.8]))
    with pytest.raises(ValueError):
        ts.state_from_density(ts.fr_from_coeffs([0.5, -1.0, 0.5]))
    with pytest.raises(ValueError):
        ts.state_from_density(ts.fr_from_coeffs([1.0, 1.0, 0.5]))


def test_states_positive_on_positive(rng):
    for _ in range(30):
        n = int(rng.integers(2, 8))
        s = random_state(n, rng)
        G = ts.extreme_ray(np.exp(1j * rng.uniform(0, 2 * np.pi)), n)
        assert ts.evaluate(s, G) >= -1e-12


def test_pure_state_known_vectors():
    ps = ts.pure_state_from_angles([0.0, 0.0])
    assert np.allclose(ps.xi, np.array([1, 2, 1]) / np.sqrt(6))
    ps = ts.pure_state_from_angles([np.pi])
    assert np.allclose(ps.xi, np.array([1, -1]) / np.sqrt(2))


def test_pure_state_closed_form(rng):
    # xi = (1, e^{ix} + e^{iy}, e^{i(x+y)}) / sqrt(4 + 2 cos(x-y))
    for _ in range(20):
        x, y = rng.uniform(0, 2 * np.pi, 2)
        ps = ts.pure_state_from_angles([x, y])
        ref = np.array([1, np.exp(1j * x) + np.exp(1j * y),
                        np.exp(1j * (x + y))])
        ref /= np.sqrt(4 + 2 * np.cos(x - y))
        assert np.allclose(ps.xi, ref)


def test_pure_state_permutation_invariance(rng):
    ang = rng.uniform(0, 2 * np.pi, 4)
    a = ts.pure_state_from_angles(ang).state().density.a
    b = ts.pure_state_from_angles(ang[::-1]).state().density.a
    assert np.allclose(a, b)


def test_vector_state_is_quadratic_form(rng):
    for _ in range(20):
        n = int(rng.integers(2, 8))
        xi = rng.normal(size=n) + 1j * rng.normal(size=n)
        T = random_hermitian_toeplitz(n, rng)
        s = ts.vector_state(xi)
        u = xi / np.linalg.norm(xi)
        assert ts.evaluate(s, T) == pytest.approx(
            float(np.real(np.vdot(u, T.dense() @ u))), abs=1e-11)


def test_rotation_equivariance(rng):
    ang = rng.uniform(0, 2 * np.pi, 3)
    alpha = 0.613
    d0 = ts.pure_state_from_angles(ang).state().density
    d1 = ts.pure_state_from_angles(ang + alpha).state().density
    k = np.arange(-d0.n + 1, d0.n)
    assert np.allclose(d1.a, d0.a * np.exp(1j * k * alpha))


def test_is_pure_conventions(rng):
    assert not ts.is_pure(ts.trace_state(3))
    assert ts.is_pure(ts.pure_state_from_angles([0.0, 0.0]).state())
    # degenerate density: 1 + cos theta viewed in n = 3 misses two roots
    onecos = ts.state_from_density(ts.fr_from_coeffs([0, 0.5, 1, 0.5, 0]))
    assert not ts.is_pure(onecos)
    for _ in range(30):
        n = int(rng.integers(2, 8))
        s = ts.pure_state_from_angles(rng.uniform(0, 2 * np.pi, n - 1)).state()
        assert ts.is_pure(s)
        assert not ts.is_pure(random_state(n, rng))


def test_pure_states_nonnegative_on_rays(rng):
    for _ in range(20):
        n = int(rng.integers(2, 7))
        ps = ts.pure_state_from_angles(rng.uniform(0, 2 * np.pi, n - 1))
        lam = np.exp(1j * rng.uniform(0, 2 * np.pi))
        val = ts.evaluate(ps.state(), ts.extreme_ray(lam, n))
        f = ts.fourier_vector(lam, n)
        assert val == pytest.approx(abs(np.vdot(f, ps.xi)) ** 2, abs=1e-11)
        assert val >= -1e-12
