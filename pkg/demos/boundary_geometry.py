"""
The explicit algebraic geometry of the 3x3 positive Toeplitz cone: the
determinant surface, its singular curve of extreme rays, and the dual
picture for states.

Run:

    python3 demos/boundary_geometry.py
"""

import numpy as np

from toepsys import geometry3 as g3


def main():
    out = g3.run_checks(samples=500)
    print("identity checks over 500 random samples:")
    for key, val in out.items():
        if key == "ok":
            continue
        print("  %-28s %.2e" % (key, val))
    print("all identities hold:", out["ok"])

    # the boundary of the cone slice is ruled by secants of a closed curve
    x, y, s = 0.7, 2.4, 0.3
    p = g3.sigma(x, y, s)
    print("\nsecant point on the boundary surface:")
    print("  coords  ", np.round(p.as_tuple(), 6))
    print("  delta   %.2e" % g3.delta(p))

    # extreme states sit on a sextic singular locus of the dual boundary
    e = g3.epsilon_state(x, y)
    print("\nextreme state for the same angle pair:")
    print("  coords  ", np.round(e.as_tuple(), 6))
    print("  discriminant        %.2e" % g3.discriminant(e))
    print("  gradient sup norm   %.2e"
          % np.abs(g3.grad_discriminant(e)).max())
    print("  quartic surface     %.2e" % g3.surface_residual(e.X, e.Y, e.Z))

    header, rows = g3.sample_surfaces("state-surface", 5, seed=3)
    print("\nsample points on the state surface (%s):" % ",".join(header))
    for row in rows:
        print("  ", np.round(row, 6))


if __name__ == "__main__":
    main()
