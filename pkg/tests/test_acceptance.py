"""
Acceptance gate: ten independently checkable criteria, each printing a
single PASS/FAIL line (bypassing capture so the line always shows in the
test log).
"""

import sys
import time

import numpy as np

import toepsys as ts
from toepsys import geometry3 as g3
from toepsys.metric import connes_via_dual

import conftest
from conftest import (random_positive_fr, random_positive_toeplitz,
                      random_state, rays_toeplitz, separated_angles)

GAP = 1e-6
QUAD_TOL = 1e-8


def report(num, name, ok, detail=""):
    line = "criterion %2d %-28s %s" % (num, name, "PASS" if ok else "FAIL")
    if detail:
        line += "  (%s)" % detail
    print(line, file=sys.__stdout__, flush=True)
    conftest.acceptance_lines.append(line)
    assert ok, line


def test_criterion_01_fejer_riesz():
    rng = np.random.default_rng(101)
    t0 = time.time()
    worst = 0.0
    for _ in range(500):
        n = int(rng.integers(2, 17))
        a = random_positive_fr(n, rng)
        f = ts.fejer_riesz_factorize(a)
        worst = max(worst,
                    ts.factorization_residual(a, f) / np.abs(a.a).sum())
    elapsed = time.time() - t0
    report(1, "spectral factorization", worst <= 1e-8 and elapsed < 5.0,
           "worst rel residual %.2e, %.2fs" % (worst, elapsed))


def test_criterion_02_vandermonde():
    rng = np.random.default_rng(102)
    worst = 0.0
    node_dev = 0.0
    for i in range(500):
        n = int(rng.integers(2, 13))
        r = int(rng.integers(1, n + 2))
        T = random_positive_toeplitz(n, r, rng)
        scale = ts.operator_norm(T)
        vd = ts.vandermonde_decompose(T)
        R = ts.reconstruct(vd, n)
        worst = max(worst, float(np.abs(R.t - T.t).max()) / scale)
    # uniqueness below full rank: nodes recovered twice, from T and from its
    # reconstruction, must agree; resolvable (separated) nodes are used since
    # coalescing nodes make the node map ill conditioned for any algorithm
    for i in range(200):
        n = int(rng.integers(3, 13))
        r = int(rng.integers(1, n))
        T = rays_toeplitz(n, separated_angles(r, rng),
                          rng.uniform(0.2, 2.0, r))
        vd1 = ts.vandermonde_decompose(T)
        vd2 = ts.vandermonde_decompose(ts.reconstruct(vd1, n))
        same_rank = vd1.rank == r and vd2.rank == r
        dev = float(np.abs((vd1.angles - vd2.angles + np.pi) % (2 * np.pi)
                           - np.pi).max()) if same_rank else np.inf
        node_dev = max(node_dev, dev)
    report(2, "vandermonde decomposition",
           worst <= 1e-8 and node_dev <= 1e-6,
           "worst rel err %.2e, node dev %.2e" % (worst, node_dev))


def test_criterion_03_stratification():
    rng = np.random.default_rng(103)
    bad = 0
    for _ in range(200):
        n = int(rng.integers(2, 7))
        r = int(rng.integers(1, n))
        T = rays_toeplitz(n, separated_angles(r, rng),
                          rng.uniform(0.2, 2.0, r))
        if ts.det_multiplicity(T) + r != n:
            bad += 1
    report(3, "boundary stratification", bad == 0,
           "%d mismatches of multiplicity + rank = n" % bad)


def test_criterion_04_propagation():
    t0 = time.time()
    ok = all(ts.propagation_number(ts.toeplitz_system(n)) == 2
             for n in range(2, 9))
    ok = ok and all(ts.propagation_number(ts.circulant_system(m)) == 1
                    for m in (3, 5, 8))
    elapsed = time.time() - t0
    report(4, "propagation numbers", ok and elapsed < 10.0,
           "%.2fs" % elapsed)


def _n2_state(w):
    a1 = (w[0] + 1j * w[1]) / 2
    return ts.state_from_density(ts.fr_from_coeffs([np.conj(a1), 1.0, a1]))


def test_criterion_05_n2_closed_form():
    rng = np.random.default_rng(105)
    worst = 0.0
    for _ in range(100):
        w = rng.uniform(-0.6, 0.6, 2)
        wp = rng.uniform(-0.6, 0.6, 2)
        r = ts.connes_distance(_n2_state(w), _n2_state(wp), GAP)
        worst = max(worst, abs(r.value - float(np.linalg.norm(w - wp))))
    report(5, "n=2 distance closed form", worst <= 1e-6,
           "worst abs err %.2e" % worst)


def test_criterion_06_distance_inequality():
    rng = np.random.default_rng(106)
    margin = np.inf
    for _ in range(100):
        n = int(rng.integers(2, 9))
        phi, psi = random_state(n, rng), random_state(n, rng)
        c = ts.connes_distance(phi, psi, GAP)
        k = ts.kantorovich(phi, psi, QUAD_TOL)
        margin = min(margin, c.value - k)
    dual_dev = 0.0
    for _ in range(10):
        n = int(rng.integers(2, 5))
        phi, psi = random_state(n, rng), random_state(n, rng)
        primal = ts.connes_distance(phi, psi, GAP).value
        dual, _ = connes_via_dual(phi, psi, GAP)
        dual_dev = max(dual_dev, abs(primal - dual))
    ok = margin >= -(GAP + QUAD_TOL) and dual_dev <= 2 * GAP
    report(6, "distance inequality + dual",
           ok, "min(connes-kant) %.2e, dual dev %.2e" % (margin, dual_dev))


def test_criterion_07_kantorovich_oracle():
    uniform = ts.trace_state(2)
    onecos = ts.state_from_density(ts.fr_from_coeffs([0.5, 1.0, 0.5]))
    val = ts.kantorovich(uniform, onecos, QUAD_TOL)
    err = abs(val - 2 / np.pi)
    report(7, "kantorovich oracle 2/pi", err <= 1e-6, "abs err %.2e" % err)


def test_criterion_08_geometry3():
    t0 = time.time()
    out = g3.run_checks()
    elapsed = time.time() - t0
    report(8, "n=3 boundary geometry", out["ok"] and elapsed < 5.0,
           "%.2fs" % elapsed)


def test_criterion_09_circulant():
    rng = np.random.default_rng(109)
    ok = True
    for n in (2, 3, 4):
        half = rng.normal(size=n - 1) + 1j * rng.normal(size=n - 1)
        T = ts.toeplitz_from_coeffs(
            np.concatenate([np.conj(half[::-1]), [rng.normal() + 0j], half]))
        for m in (2 * n - 1, 2 * n, 3 * n):
            C = ts.complete_toeplitz(T, m)
            ok = ok and np.abs(ts.compress_circulant(C, n).t - T.t).max() == 0
    from toepsys.circulant import CirculantMatrix, diagonalizer
    resid = 0.0
    for m in (3, 17, 64):
        c = rng.normal(size=m) + 1j * rng.normal(size=m)
        C = CirculantMatrix(c)
        U = diagonalizer(m)
        D = U.conj().T @ C.dense() @ U
        resid = max(resid,
                    float(np.abs(D - np.diag(C.eigenvalues())).max()))
    ranks_ok = all(ts.tensor_map_rank(n) == (2 * n - 1) ** 2
                   for n in (2, 3, 4, 6, 7))
    report(9, "circulant structure", ok and resid <= 1e-10 and ranks_ok,
           "diag resid %.2e" % resid)


def test_criterion_10_duality():
    rng = np.random.default_rng(110)
    probes = 0
    bad = 0
    while probes < 10 ** 4:
        n = int(rng.integers(2, 9))
        half = rng.normal(size=n - 1) + 1j * rng.normal(size=n - 1)
        T = ts.toeplitz_from_coeffs(
            np.concatenate([np.conj(half[::-1]), [rng.normal() + 0j], half]))
        ok, lam_min = ts.is_positive(T, tol=1e-12)
        M = T.dense()
        scale = ts.operator_norm(T)
        if ok:
            # every vector probe must be nonnegative
            for _ in range(4):
                xi = rng.normal(size=n) + 1j * rng.normal(size=n)
                xi /= np.linalg.norm(xi)
                dens = ts.vector_state(xi).density
                if np.real(ts.pairing(T, dens)) < -1e-10 * scale:
                    bad += 1
                probes += 1
        else:
            # a witness probe must detect non-positivity
            w, V = np.linalg.eigh(M)
            xi = V[:, 0]
            dens = ts.vector_state(xi).density
            if np.real(ts.pairing(T, dens)) >= -1e-10 * scale:
                bad += 1
            probes += 1
    report(10, "positivity duality", bad == 0,
           "%d probes, %d counterexamples" % (probes, bad))
