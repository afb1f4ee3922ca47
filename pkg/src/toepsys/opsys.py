"""
Concrete operator systems inside a matrix algebra: spans of products and
the propagation number.

A system is given by a spanning set of N x N matrices; the span must be
self-adjoint and contain the identity.  The propagation number is the
smallest k for which the span of products of at most k elements is an
algebra.
"""

import numpy as np

from .core import ToeplitzMatrix

#: relative singular-value threshold for span-dimension decisions
RANK_TOL = 1e-9


class MatrixSystem:
    """A spanning set of N x N matrices for a self-adjoint unital subspace."""

    def __init__(self, basis):
        self.basis = [np.asarray(B, dtype=complex) for B in basis]
        if not self.basis:
            raise ValueError("empty system")
        self.N = self.basis[0].shape[0]
        for B in self.basis:
            if B.shape != (self.N, self.N):
                raise ValueError("basis matrices must share one square shape")
        self._check_selfadjoint_unital()

    def _check_selfadjoint_unital(self):
        flat = np.array([B.ravel() for B in self.basis])
        adj = np.array([B.conj().T.ravel() for B in self.basis])
        eye = np.eye(self.N, dtype=complex).ravel()
        d = np.linalg.matrix_rank(flat, tol=None)
        if np.linalg.matrix_rank(np.vstack([flat, adj])) != d:
            raise ValueError("span is not self-adjoint")
        if np.linalg.matrix_rank(np.vstack([flat, eye[None, :]])) != d:
            raise ValueError("span does not contain the identity")


def toeplitz_system(n):
    """The n x n Toeplitz matrices as a system, spanned by the 2n-1 diagonals."""
    basis = []
    for j in range(-n + 1, n):
        t = np.zeros(2 * n - 1, dtype=complex)
        t[j + n - 1] = 1.0
        basis.append(ToeplitzMatrix(t).dense())
    return MatrixSystem(basis)


def circulant_system(m):
    """The m x m circulants, spanned by the powers of the cyclic shift."""
    S = np.zeros((m, m))
    S[np.arange(m), (np.arange(m) - 1) % m] = 1.0
    return MatrixSystem([np.linalg.matrix_power(S, k) for k in range(m)])


def _orthonormal_span(vectors):
    """Orthonormal rows spanning the same space, via singular vectors."""
    A = np.array(vectors)
    u, s, vh = np.linalg.svd(A, full_matrices=False)
    keep = s > RANK_TOL * (s[0] if s.size else 1.0)
    return vh[keep]


def _span_of_products(sys, k):
    """Orthonormal basis (flattened) of span{products of <= k elements}."""
    flats = [B.ravel() for B in sys.basis]
    Q = _orthonormal_span(flats)
    for _ in range(1, k):
        mats = [q.reshape(sys.N, sys.N) for q in Q]
        new = list(Q)
        for M in mats:
            for B in sys.basis:
                new.append((M @ B).ravel())
        Q2 = _orthonormal_span(new)
        if Q2.shape[0] == Q.shape[0]:
            return Q2
        Q = Q2
    return Q


def _is_algebra(Q, N):
    mats = [q.reshape(N, N) for q in Q]
    probe = list(Q)
    for A in mats:
        for B in mats:
            probe.append((A @ B).ravel())
    return _orthonormal_span(probe).shape[0] == Q.shape[0]


def product_span_dim(sys, k):
    """Complex dimension of the span of products of at most k elements."""
    if k < 1:
        raise ValueError("need k >= 1")
    return int(_span_of_products(sys, k).shape[0])


def propagation_number(sys, max_k=8):
    """
    The smallest k <= max_k such that the span of products of at most k
    elements is an algebra (equivalently, adding one more factor does not
    enlarge it and it is closed under multiplication).

    Returns max_k + 1 when no such k is found.
    """
    if max_k < 1:
        raise ValueError("need max_k >= 1")
    for k in range(1, max_k + 1):
        Q = _span_of_products(sys, k)
        Q1 = _span_of_products(sys, k + 1)
        if Q1.shape[0] == Q.shape[0] and _is_algebra(Q, sys.N):
            return k
    return max_k + 1
