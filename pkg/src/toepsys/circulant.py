"""
Circulant matrices, the finite Fourier transform, and the relation between
circulants and their Toeplitz compressions.

Conventions: zeta = exp(2 pi i / m), xi = conj(zeta).  The transform is
F(f)(k) = sum_l f_l xi^{kl}, which coincides with numpy's fft; m^{-1/2} F is
unitary and diagonalizes every circulant.
"""

import numpy as np

from .core import ToeplitzMatrix


class CirculantMatrix:
    """
    An m x m matrix with dense entry (k, l) = c_{(k-l) mod m}.

    Linear combinations of powers of the cyclic shift; simultaneously
    diagonalized by the finite Fourier transform.
    """

    def __init__(self, c):
        self.c = np.asarray(c, dtype=complex).ravel()
        self.m = self.c.size
        if self.m == 0:
            raise ValueError("empty circulant")

    def dense(self):
        idx = np.arange(self.m)
        return self.c[(idx[:, None] - idx[None, :]) % self.m]

    def eigenvalues(self):
        """The values sum_l c_l xi^{kl}, k = 0..m-1 (Fourier transform of c)."""
        return np.fft.fft(self.c)

    @property
    def hermitian(self):
        return bool(np.allclose(self.c, np.conj(np.roll(self.c[::-1], 1)),
                                atol=1e-13 * (1 + np.abs(self.c).max())))

    def __repr__(self):
        return "CirculantMatrix(m=%d, c=%r)" % (self.m, list(self.c))


def fourier_transform(f):
    """F(f)(k) = sum_l f_l conj(zeta)^{kl} with zeta = exp(2 pi i / m)."""
    f = np.asarray(f, dtype=complex).ravel()
    if f.size == 0:
        raise ValueError("empty sequence")
    return np.fft.fft(f)


def fourier_matrix(m):
    """The m x m matrix F with entries conj(zeta)^{kl}."""
    k = np.arange(m)
    zeta = np.exp(2j * np.pi / m)
    return np.conj(zeta) ** np.outer(k, k)


def diagonalizer(m):
    """
    The unitary U with U* C U diagonal, eigenvalues in the order returned by
    ``CirculantMatrix.eigenvalues``.  Equals m^{-1/2} times the conjugate
    Fourier matrix: the eigenvector for eigenvalue sum_l c_l xi^{kl} has
    entries zeta^{kl}.
    """
    return np.conj(fourier_matrix(m)) / np.sqrt(m)


def group_pairing(f, g):
    """The cyclic pairing (f star g)(0) = sum_l f_l g_{(-l) mod m}."""
    f = np.asarray(f, dtype=complex).ravel()
    g = np.asarray(g, dtype=complex).ravel()
    if f.size != g.size:
        raise ValueError("size mismatch: %d vs %d" % (f.size, g.size))
    m = f.size
    return complex(np.sum(f * g[(-np.arange(m)) % m]))


def complete_toeplitz(T, m):
    """
    The m x m circulant whose upper-left n x n corner is T.

    Requires m >= 2n - 1 so the wrapped coefficients do not collide; the
    free coefficients are zero-filled.
    """
    n = T.n
    if m < 2 * n - 1:
        raise ValueError("need m >= 2n-1 = %d, got m = %d" % (2 * n - 1, m))
    c = np.zeros(m, dtype=complex)
    for k in range(n):
        c[k] = T.coeff(k)
    for k in range(1, n):
        c[m - k] = T.coeff(-k)
    return CirculantMatrix(c)


def compress_circulant(C, n):
    """The Toeplitz compression P_n C P_n (upper-left n x n corner)."""
    if n > C.m:
        raise ValueError("compression size %d exceeds circulant size %d" % (n, C.m))
    t = np.zeros(2 * n - 1, dtype=complex)
    for k in range(n):
        t[n - 1 + k] = C.c[k % C.m]
        t[n - 1 - k] = C.c[(-k) % C.m]
    return ToeplitzMatrix(t)


def _shift(m):
    S = np.zeros((m, m))
    S[np.arange(m), (np.arange(m) - 1) % m] = 1.0
    return S


def tensor_map_rank(n):
    """
    Rank of the map sending f tensor T, for f on the cyclic group of order
    m = 2n-1 and T an n x n Toeplitz matrix, to
    sum_k f_k S^k (T + 0_{n-1}) S^{-k} inside the m x m matrices.

    The rank equals m^2 exactly when the map is bijective; this holds for
    prime m.
    """
    if n < 2:
        raise ValueError("need n >= 2")
    m = 2 * n - 1
    S = _shift(m)
    Sk = [np.linalg.matrix_power(S, k) for k in range(m)]
    cols = []
    for k in range(m):
        for j in range(-n + 1, n):
            tau = np.zeros(2 * n - 1, dtype=complex)
            tau[j + n - 1] = 1.0
            emb = np.zeros((m, m), dtype=complex)
            emb[:n, :n] = ToeplitzMatrix(tau).dense()
            cols.append((Sk[k] @ emb @ Sk[k].T).ravel())
    A = np.array(cols).T
    return int(np.linalg.matrix_rank(A, tol=1e-9 * np.linalg.norm(A, 2)))


def circulant_to_json(C):
    """JSON-ready dict {"m": ..., "c": [[re, im], ...]}."""
    return {"m": C.m, "c": [[float(z.real), float(z.imag)] for z in C.c]}


def circulant_from_json(obj):
    c = np.array([complex(re, im) for re, im in obj["c"]])
    C = CirculantMatrix(c)
    if C.m != int(obj["m"]):
        raise ValueError("inconsistent size: m=%s but %d coefficients" % (obj["m"], c.size))
    return C
