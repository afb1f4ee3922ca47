"""
States on the truncated-circle system, stored through duality as
probability densities on the circle.

A state is a positive unital functional on the n x n Toeplitz matrices.
Through the pairing sum_k a_k t_{-k} it is represented by a palindromic
nonnegative sequence with a_0 = 1, i.e. a trigonometric probability density
with respect to d theta / 2 pi.  Pure states come from unit vectors xi whose
polynomial has all roots on the circle; they are parametrized, up to
permutation, by n-1 node angles through elementary symmetric polynomials.
"""

import numpy as np

from .core import (CIRCLE_TOL, FRElement, fr_convolve, fr_is_positive,
                   pairing)
from .factor import laurent_roots


class State:
    """A state stored as its density sequence (palindromic, positive, a_0 = 1)."""

    def __init__(self, density):
        self.density = density

    @property
    def n(self):
        return self.density.n

    def __repr__(self):
        return "State(density=%r)" % (self.density,)


class PureStateVector:
    """
    Unit vector xi together with the node angles it was built from.

    The induced state evaluates Toeplitz matrices as <xi, T xi>; its density
    is the autocorrelation xi* conv xi.
    """

    def __init__(self, xi, root_angles):
        self.xi = np.asarray(xi, dtype=complex).ravel()
        self.root_angles = np.asarray(root_angles, dtype=float)

    @property
    def n(self):
        return self.xi.size

    def state(self):
        return vector_state(self.xi)


def state_from_density(a, tol=1e-9):
    """
    Wrap a palindromic positive sequence as a state, rescaling to a_0 = 1.

    Raises ValueError when the sequence is not a valid (unnormalized)
    density: non-palindromic, a_0 <= 0, or not nonnegative on the circle.
    """
    if not a.palindromic:
        raise ValueError("a state density must be palindromic")
    a0 = a.coeff(0).real
    if a0 <= tol:
        raise ValueError("a state density needs a_0 > 0, got %g" % a0)
    a = a * (1.0 / a0)
    if not fr_is_positive(a, tol=max(tol, 1e-9)):
        raise ValueError("a state density must be nonnegative on the circle")
    return State(a)


def trace_state(n):
    """The normalized-trace state T -> t_0."""
    a = np.zeros(2 * n - 1, dtype=complex)
    a[n - 1] = 1.0
    return State(FRElement(a))


def vector_state(xi):
    """The state T -> <xi, T xi> of a unit vector xi supported in 0..n-1."""
    xi = np.asarray(xi, dtype=complex).ravel()
    nrm = np.linalg.norm(xi)
    if nrm == 0:
        raise ValueError("zero vector")
    xi = xi / nrm
    f = FRElement(np.concatenate([np.zeros(xi.size - 1), xi]))
    # the autocorrelation is supported in (-n, n); drop the zero padding
    return State(fr_convolve(f.involution(), f).resize(xi.size))


def evaluate(state, T):
    """Value of the state on a hermitian Toeplitz matrix (guaranteed real)."""
    if state.n != T.n:
        raise ValueError("size mismatch")
    if not T.hermitian:
        raise ValueError("states are evaluated on hermitian matrices")
    return float(np.real(pairing(T, state.density)))


def pure_state_from_angles(angles):
    """
    The pure state of the n x n system with prescribed circle nodes,
    n = len(angles) + 1.

    The vector is (1, e_1, e_2, ..., e_{n-1}) normalized, where e_k is the
    k-th elementary symmetric polynomial of the unit numbers e^{i angle}.
    Invariant under permutations of the angles.
    """
    angles = np.asarray(angles, dtype=float).ravel()
    lam = np.exp(1j * angles)
    # np.poly gives prod (z - lam_k) = sum (-1)^k e_k z^{deg-k}
    coeffs = np.poly(lam) if lam.size else np.array([1.0 + 0j])
    signs = (-1.0) ** np.arange(coeffs.size)
    xi = signs * coeffs
    xi = xi / np.linalg.norm(xi)
    return PureStateVector(xi, angles)


def is_pure(state, tol=1e-6):
    """
    Extremality test: a state is pure iff its density's Laurent polynomial
    carries the full complement of 2(n-1) roots and all of them lie on the
    unit circle.  Densities whose polynomial degree drops (vanishing leading
    coefficients) are classified not pure.

    A root of multiplicity m is computed as a cluster of m simple roots
    scattered around it at distance of order eps^(1/m), far beyond any fixed
    circle tolerance.  The scatter is symmetric, so the mean log-modulus of
    each cluster cancels it; that mean is what is tested against ``tol``.
    """
    try:
        roots = laurent_roots(state.density)
    except ValueError:
        return False
    if roots.size != 2 * (state.n - 1):
        return False
    if roots.size == 0:
        return True
    remaining = list(roots)
    while remaining:
        z = remaining.pop(0)
        cluster = [z]
        rest = []
        for w in remaining:
            if abs(w - z) <= 2e-2:
                cluster.append(w)
            else:
                rest.append(w)
        remaining = rest
        mean_log = float(np.mean(np.log(np.abs(cluster))))
        if abs(mean_log) > max(tol, CIRCLE_TOL):
            return False
    return True
