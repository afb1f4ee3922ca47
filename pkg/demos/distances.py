"""
Spectral distance between states of the truncated system, compared with
the classical transport distance between their circle densities.

Run:

    python3 demos/distances.py
"""

import numpy as np

import toepsys as ts
from toepsys.metric import connes_via_dual


def main():
    # n = 2: states are points of a disc and the distance is euclidean
    w = np.array([0.3, -0.2])
    wp = np.array([-0.1, 0.4])

    def disc_state(v):
        a1 = (v[0] + 1j * v[1]) / 2
        return ts.state_from_density(
            ts.fr_from_coeffs([np.conj(a1), 1.0, a1]))

    phi, psi = disc_state(w), disc_state(wp)
    res = ts.connes_distance(phi, psi, gap=1e-7)
    print("n=2 certified distance: %.10f  (+/- %.1e)"
          % (res.value, res.upper - res.lower))
    print("euclidean |w - w'|:     %.10f" % np.linalg.norm(w - wp))

    # the same value through the one-parameter dual reduction
    dual, c = connes_via_dual(phi, psi, gap=1e-6)
    print("dual route:             %.10f  (at offset c = %.6f)" % (dual, c))

    # n = 3: the truncated distance dominates the transport distance
    rng = np.random.default_rng(11)
    xi = rng.normal(size=3) + 1j * rng.normal(size=3)
    phi3 = ts.vector_state(xi / np.linalg.norm(xi))
    psi3 = ts.trace_state(3)
    d3 = ts.connes_distance(phi3, psi3, gap=1e-7).value
    k3 = ts.kantorovich(phi3, psi3, quad_tol=1e-9)
    print("\nn=3 pair: connes %.8f >= kantorovich %.8f" % (d3, k3))

    # the classical benchmark: uniform vs 1 + cos has transport cost 2/pi
    uniform = ts.trace_state(2)
    onecos = ts.state_from_density(ts.fr_from_coeffs([0.5, 1.0, 0.5]))
    k = ts.kantorovich(uniform, onecos, quad_tol=1e-10)
    print("\nuniform vs 1+cos: %.15f  (2/pi = %.15f)" % (k, 2 / np.pi))


if __name__ == "__main__":
    main()
