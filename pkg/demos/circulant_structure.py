"""
Circulant completions of Toeplitz matrices, finite Fourier
diagonalization, and the propagation number separating the truncated
system from the algebras around it.

Run:

    python3 demos/circulant_structure.py
"""

import numpy as np

import toepsys as ts
from toepsys.circulant import diagonalizer


def main():
    rng = np.random.default_rng(23)
    n = 3
    half = rng.normal(size=n - 1) + 1j * rng.normal(size=n - 1)
    T = ts.toeplitz_from_coeffs(
        np.concatenate([np.conj(half[::-1]), [2.0 + 0j], half]))

    m = 2 * n - 1
    C = ts.complete_toeplitz(T, m)
    print("circulant completion of a 3x3 Toeplitz matrix into size %d:" % m)
    print(np.round(C.dense(), 3))
    back = ts.compress_circulant(C, n)
    print("compression recovers T exactly:",
          bool(np.abs(back.t - T.t).max() == 0))

    U = diagonalizer(m)
    D = U.conj().T @ C.dense() @ U
    print("\nFourier diagonalization off-diagonal sup: %.2e"
          % np.abs(D - np.diag(np.diag(D))).max())
    print("eigenvalues match the transform of the symbol: %.2e"
          % np.abs(np.diag(D) - C.eigenvalues()).max())

    print("\ntensor-square ranks of the compression (full = (2n-1)^2):")
    for k in (2, 3, 4):
        print("  n=%d  rank %d of %d" % (k, ts.tensor_map_rank(k),
                                         (2 * k - 1) ** 2))

    print("\npropagation numbers:")
    for k in range(2, 7):
        print("  toeplitz n=%d : %d" % (k, ts.propagation_number(
            ts.toeplitz_system(k))))
    print("  circulant m=5: %d" % ts.propagation_number(
        ts.circulant_system(5)))


if __name__ == "__main__":
    main()
