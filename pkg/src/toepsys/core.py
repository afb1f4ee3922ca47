"""
Core data types: finite Toeplitz matrices, finitely supported Laurent
coefficient sequences, and the duality pairing between them.

Coefficient ordering is ascending everywhere: a sequence of length 2n-1
stores the coefficients for k = -n+1, ..., n-1.  The dense realization of
a Toeplitz matrix has entry (k, l) equal to ``t[k - l]``.
"""

import numpy as np

#: relative tolerance for accepting a node/root as lying on the unit circle
CIRCLE_TOL = 1e-8


def _as_coeffs(seq):
    a = np.asarray(seq, dtype=complex).ravel()
    if a.size % 2 == 0:
        raise ValueError("coefficient sequence must have odd length, got %d" % a.size)
    return a


class ToeplitzMatrix:
    """
    An n x n constant-diagonal matrix stored by its 2n-1 diagonal values.

    Parameters
    ----------
    t : array-like, odd length 2n-1
        Diagonal values in ascending order of the diagonal index
        k = -n+1, ..., n-1.  Entry (k, l) of the dense matrix is t[k-l].
    """

    def __init__(self, t):
        self.t = _as_coeffs(t)
        self.n = (self.t.size + 1) // 2

    def coeff(self, k):
        """Diagonal value t_k for ``|k| <= n-1``."""
        if abs(k) >= self.n:
            raise IndexError("diagonal index %d out of range for n=%d" % (k, self.n))
        return self.t[k + self.n - 1]

    def dense(self):
        """Dense n x n realization with M[k, l] = t[k-l]."""
        n = self.n
        idx = np.arange(n)
        return self.t[(idx[:, None] - idx[None, :]) + n - 1]

    @property
    def hermitian(self):
        """True when t_{-k} = conj(t_k) for all k."""
        return bool(np.allclose(self.t[::-1], np.conj(self.t), atol=1e-14 * (1 + np.abs(self.t).max())))

    def conj_transpose(self):
        return ToeplitzMatrix(np.conj(self.t[::-1]))

    def __add__(self, other):
        if self.n != other.n:
            raise ValueError("size mismatch")
        return ToeplitzMatrix(self.t + other.t)

    def __sub__(self, other):
        if self.n != other.n:
            raise ValueError("size mismatch")
        return ToeplitzMatrix(self.t - other.t)

    def __mul__(self, scalar):
        return ToeplitzMatrix(self.t * scalar)

    __rmul__ = __mul__

    def __repr__(self):
        return "ToeplitzMatrix(n=%d, t=%r)" % (self.n, list(self.t))


class FRElement:
    """
    A finitely supported Laurent coefficient sequence, the dual-side element.

    The sequence a_k is supported in the open interval (-n, n) and stands for
    the function theta -> sum_k a_k exp(i k theta) on the circle.
    """

    def __init__(self, a):
        self.a = _as_coeffs(a)
        self.n = (self.a.size + 1) // 2

    def coeff(self, k):
        if abs(k) >= self.n:
            return 0j
        return self.a[k + self.n - 1]

    def involution(self):
        """The adjoint sequence (a*)_k = conj(a_{-k})."""
        return FRElement(np.conj(self.a[::-1]))

    @property
    def palindromic(self):
        """True when a = a*, i.e. the circle function is real-valued."""
        return bool(np.allclose(self.a, np.conj(self.a[::-1]),
                                atol=1e-13 * (1 + np.abs(self.a).max())))

    def __call__(self, theta):
        """Evaluate sum_k a_k exp(i k theta) pointwise."""
        theta = np.asarray(theta, dtype=float)
        k = np.arange(-self.n + 1, self.n)
        return np.tensordot(np.exp(1j * np.multiply.outer(theta, k)), self.a, axes=([-1], [0]))

    def resize(self, n):
        """Re-embed with support bound n >= current support of the sequence."""
        pad = n - self.n
        if pad < 0:
            body = self.a[-pad:pad]
            clipped = np.concatenate([self.a[:-pad], self.a[pad:]])
            if not np.allclose(clipped, 0, atol=1e-300):
                raise ValueError("cannot shrink support below nonzero coefficients")
            return FRElement(body)
        return FRElement(np.pad(self.a, pad))

    def __add__(self, other):
        n = max(self.n, other.n)
        return FRElement(self.resize(n).a + other.resize(n).a)

    def __sub__(self, other):
        n = max(self.n, other.n)
        return FRElement(self.resize(n).a - other.resize(n).a)

    def __mul__(self, scalar):
        return FRElement(self.a * scalar)

    __rmul__ = __mul__

    def __repr__(self):
        return "FRElement(n=%d, a=%r)" % (self.n, list(self.a))


class FourierVector:
    """Unit column (1, z, ..., z^{n-1}) / sqrt(n) used for rank-one rays."""

    def __init__(self, z, n):
        self.z = complex(z)
        self.n = int(n)
        self.v = self.z ** np.arange(self.n) / np.sqrt(self.n)


def toeplitz_from_coeffs(t):
    """Build a ToeplitzMatrix from an odd-length ascending coefficient sequence."""
    return ToeplitzMatrix(t)


def fr_from_coeffs(a):
    """Build an FRElement from an odd-length ascending coefficient sequence."""
    return FRElement(a)


def fr_delta(k, n, value=1.0):
    """The sequence with a single nonzero coefficient ``value`` at index k."""
    a = np.zeros(2 * n - 1, dtype=complex)
    a[k + n - 1] = value
    return FRElement(a)


def compress_symbol(fourier_coeffs, n):
    """
    Truncate a circle function to its n x n Toeplitz compression.

    Parameters
    ----------
    fourier_coeffs : mapping int -> complex
        Fourier coefficients a_k of the function; entries with |k| >= n are
        ignored.
    n : int
        Truncation size.
    """
    t = np.zeros(2 * n - 1, dtype=complex)
    for k, v in fourier_coeffs.items():
        if abs(k) <= n - 1:
            t[k + n - 1] = v
    return ToeplitzMatrix(t)


def operator_norm(T):
    """Largest singular value of the dense realization."""
    return float(np.linalg.norm(T.dense(), 2))


def is_positive(T, tol=1e-9):
    """
    Decide positive semidefiniteness of a hermitian Toeplitz matrix.

    Returns ``(ok, lambda_min)`` where ``ok`` is true iff the smallest
    eigenvalue is >= -tol * ||T||.  The tolerance is relative so the test is
    scale invariant.
    """
    if not T.hermitian:
        raise ValueError("is_positive requires a hermitian Toeplitz matrix")
    w = np.linalg.eigvalsh(T.dense())
    lam_min = float(w[0])
    scale = float(np.abs(w).max()) if w.size else 0.0
    return lam_min >= -tol * scale, lam_min


def pairing(T, a):
    """
    The duality pairing sum_k a_k t_{-k}.

    For positive T and positive a the value is real and nonnegative; for
    hermitian T and palindromic a it is real.
    """
    if T.n != a.n:
        raise ValueError("size mismatch: Toeplitz n=%d vs sequence n=%d" % (T.n, a.n))
    return complex(np.dot(a.a, T.t[::-1]))


def fr_convolve(a, b):
    """
    Convolution (a * b)_j = sum_k a_k b_{j-k}; the support bound grows to
    the sum of the factors' support bounds.
    """
    return FRElement(np.convolve(a.a, b.a))


def trig_minimum(a, refine=True):
    """
    Minimum over theta of the real circle function of a palindromic sequence.

    The minimum is located through the stationary points, i.e. the on-circle
    roots of the derivative sequence k -> i k a_k, rather than a grid search.
    Returns ``(min_value, argmin_theta)``.
    """
    n = a.n
    k = np.arange(-n + 1, n)
    thetas = [0.0]
    deriv = 1j * k * a.a
    if np.abs(deriv).max() > 0:
        # roots of z^{n-1} * a'(z); stationary angles are the on-circle ones
        c = np.trim_zeros(deriv)
        if c.size > 1:
            roots = np.roots(c[::-1])
            on_circle = roots[np.abs(np.log(np.abs(roots) + 1e-300)) < 1e-6]
            thetas.extend(np.angle(on_circle).tolist())
    # coarse fallback samples guard against missed stationary points
    thetas.extend(np.linspace(0.0, 2 * np.pi, 2 * n, endpoint=False).tolist())
    vals = np.real(a(np.asarray(thetas)))
    i = int(np.argmin(vals))
    return float(vals[i]), float(thetas[i])


def fr_is_positive(a, tol=1e-9):
    """
    True iff the circle function of the palindromic sequence ``a`` satisfies
    min_theta a(theta) >= -tol * ||a||.
    """
    if not a.palindromic:
        raise ValueError("positivity is only defined for palindromic sequences")
    m, _ = trig_minimum(a)
    scale = float(np.abs(a.a).sum())
    return m >= -tol * scale


def fourier_vector(z, n):
    """The unit vector (1, z, ..., z^{n-1}) / sqrt(n) as a numpy array."""
    return FourierVector(z, n).v


def extreme_ray(lam, n):
    """
    The trace-one rank-one positive Toeplitz matrix with entries
    lam^{k-l} / n, for lam on the unit circle.
    """
    lam = complex(lam)
    if abs(abs(lam) - 1.0) > 1e-12:
        raise ValueError("extreme rays require |lam| = 1, got |lam| = %g" % abs(lam))
    lam = lam / abs(lam)
    k = np.arange(-n + 1, n)
    return ToeplitzMatrix(lam ** k / n)


def toeplitz_to_json(T):
    """JSON-ready dict {"n": ..., "t": [[re, im], ...]} in ascending order."""
    return {"n": T.n, "t": [[float(z.real), float(z.imag)] for z in T.t]}


def toeplitz_from_json(obj):
    t = np.array([complex(re, im) for re, im in obj["t"]])
    T = ToeplitzMatrix(t)
    if T.n != int(obj["n"]):
        raise ValueError("inconsistent size: n=%s but %d coefficients" % (obj["n"], t.size))
    return T


def fr_to_json(a):
    """JSON-ready dict {"n": ..., "a": [[re, im], ...]} in ascending order."""
    return {"n": a.n, "a": [[float(z.real), float(z.imag)] for z in a.a]}


def fr_from_json(obj):
    a = np.array([complex(re, im) for re, im in obj["a"]])
    el = FRElement(a)
    if el.n != int(obj["n"]):
        raise ValueError("inconsistent size: n=%s but %d coefficients" % (obj["n"], a.size))
    return el
