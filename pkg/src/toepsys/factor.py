"""
Spectral factorization of nonnegative trigonometric polynomials.

A palindromic sequence a with a(theta) >= 0 on the circle factors as
a(theta) = |q(e^{i theta})|^2 for a polynomial q supported in 0..n-1.  The
factor is computed from the root pattern of the associated Laurent
polynomial: roots pair up as (z, 1/conj(z)) and the inside-disc member of
each pair goes to q, while on-circle roots occur with even multiplicity and
contribute half of it.
"""

import numpy as np
from scipy.optimize import least_squares

from .core import FRElement, fr_convolve, fr_is_positive

#: clustering radius used when splitting the even multiplicity of circle roots
ROOT_CLUSTER_TOL = 1e-6


class SpectralFactor:
    """
    Polynomial factor q with |q(zeta)|^2 = a(zeta) on the unit circle.

    The minimum-phase convention is used: q has no roots strictly outside
    the closed unit disc, and the constant coefficient q_0 is real >= 0.
    """

    def __init__(self, q):
        self.q = np.asarray(q, dtype=complex).ravel()

    def __call__(self, z):
        return np.polyval(self.q[::-1], z)

    def squared_modulus(self):
        """The palindromic sequence of |q|^2, i.e. the convolution q* conv q."""
        m = self.q.size
        qfr = FRElement(np.concatenate([np.zeros(m - 1), self.q]))
        return fr_convolve(qfr.involution(), qfr)

    def __repr__(self):
        return "SpectralFactor(q=%r)" % (list(self.q),)


def laurent_roots(a):
    """
    Roots, with multiplicity, of the Laurent polynomial of ``a`` after
    clearing the lowest power of z.

    The support of ``a`` is trimmed first, so a constant sequence has no
    roots and artificial roots at the origin are not introduced.  Computed
    as companion-matrix eigenvalues (numpy.roots).
    """
    c = np.trim_zeros(a.a)
    if c.size == 0:
        raise ValueError("laurent_roots of the zero sequence")
    if c.size == 1:
        return np.array([], dtype=complex)
    return np.roots(c[::-1])


def _cluster_roots(roots, radius):
    """Greedy clustering of complex roots; returns list of (center, count)."""
    remaining = list(roots)
    clusters = []
    while remaining:
        z = remaining.pop(0)
        members = [z]
        rest = []
        for w in remaining:
            if abs(w - z) <= radius:
                members.append(w)
            else:
                rest.append(w)
        remaining = rest
        clusters.append((np.mean(members), len(members)))
    return clusters


def _polish(q, a):
    """
    Least-squares refinement of the factor coefficients.

    Root extraction loses accuracy at circle roots of high multiplicity
    (the companion eigenvalues scatter like eps**(1/mult)); minimizing the
    coefficient residual of q* conv q - a restores it.  The refined q is
    kept only when it improves the residual.
    """
    m = q.size
    target = a.resize(m).a

    def conv_coeffs(qq):
        f = FRElement(np.concatenate([np.zeros(m - 1), qq]))
        full = fr_convolve(f.involution(), f).a
        # central 2m-1 entries; the outer ones vanish identically
        return full[m - 1:3 * m - 2]

    def residual(x):
        qq = x[:m] + 1j * x[m:]
        d = conv_coeffs(qq) - target
        return np.concatenate([d.real, d.imag])

    x0 = np.concatenate([q.real, q.imag])
    r0 = np.linalg.norm(residual(x0))
    if r0 <= 1e-13 * max(1.0, float(np.abs(target).max())):
        return q
    sol = least_squares(residual, x0, xtol=1e-15, ftol=1e-15, gtol=1e-15)
    if np.linalg.norm(sol.fun) < r0:
        return sol.x[:m] + 1j * sol.x[m:]
    return q


def fejer_riesz_factorize(a, tol=1e-9):
    """
    Factor a nonnegative palindromic sequence as a(theta) = |q(e^{i theta})|^2.

    Parameters
    ----------
    a : FRElement
        Palindromic sequence whose circle function is >= 0.
    tol : float
        Relative tolerance used for the positivity precondition and the
        circle classification of roots.

    Returns
    -------
    SpectralFactor

    Raises
    ------
    ValueError
        If ``a`` is not (numerically) nonnegative, or if a circle root has
        odd multiplicity beyond tolerance, which signals the same defect.
    """
    if not fr_is_positive(a, tol=max(tol, 1e-9)):
        raise ValueError("factorization requires a nonnegative sequence")
    roots = laurent_roots(a)
    if roots.size == 0:
        a0 = a.coeff(0)
        if a0.real < 0:
            raise ValueError("negative constant sequence")
        return SpectralFactor([np.sqrt(a0.real)])

    # classify roots relative to the unit circle
    circle_band = 1e-7
    inside = roots[np.abs(roots) < 1 - circle_band]
    on_circle = roots[np.abs(np.abs(roots) - 1) <= circle_band]

    q_roots = list(inside)
    for center, count in _cluster_roots(on_circle, ROOT_CLUSTER_TOL):
        if count % 2 != 0:
            raise ValueError(
                "circle root %r has odd multiplicity %d; input is numerically "
                "not nonnegative" % (center, count))
        q_roots.extend([center / abs(center)] * (count // 2))

    q = np.poly(q_roots)[::-1] if q_roots else np.array([1.0 + 0j])
    # scale so that q* conv q reproduces a (least squares over coefficients)
    b = fr_convolve(FRElement(np.concatenate([np.zeros(len(q) - 1), q])).involution(),
                    FRElement(np.concatenate([np.zeros(len(q) - 1), q])))
    aa = a.resize(b.n).a
    s = float(np.real(np.vdot(b.a, aa) / np.vdot(b.a, b.a)))
    if s < 0:
        raise ValueError("negative scale in factorization; input not nonnegative")
    q = _polish(q * np.sqrt(s), a)
    # fix the global phase: q_0 real >= 0
    phase = q[0] / abs(q[0]) if abs(q[0]) > 0 else 1.0
    return SpectralFactor(q / phase)


def factorization_residual(a, factor):
    """Sup over the circle of |a - |q|^2|, estimated on a dense grid."""
    b = factor.squared_modulus()
    n = max(a.n, b.n)
    diff = a.resize(n) - b.resize(n)
    theta = np.linspace(0, 2 * np.pi, 8 * n + 1)
    return float(np.abs(diff(theta)).max())
