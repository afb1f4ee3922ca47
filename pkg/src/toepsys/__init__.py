"""
Numerical toolkit for the Toeplitz operator system of the truncated circle:
positivity and duality, spectral factorization, node decompositions, pure
states, spectral and transport distances, circulant completions, and the
explicit 3 x 3 boundary geometry.
"""

from .circulant import (CirculantMatrix, complete_toeplitz, compress_circulant,
                        fourier_transform, group_pairing, tensor_map_rank)
from .core import (FRElement, ToeplitzMatrix, compress_symbol, extreme_ray,
                   fourier_vector, fr_convolve, fr_delta, fr_from_coeffs,
                   fr_is_positive, is_positive, operator_norm, pairing,
                   toeplitz_from_coeffs, trig_minimum)
from .decompose import (VandermondeDecomposition, det_multiplicity,
                        kernel_roots, reconstruct, vandermonde_decompose)
from .factor import (SpectralFactor, factorization_residual,
                     fejer_riesz_factorize, laurent_roots)
from .metric import (ConvexProgramResult, DiracTruncation, connes_distance,
                     connes_via_dual, dirac_commutator, dual_norm,
                     kantorovich, primitive)
from .opsys import (MatrixSystem, circulant_system, product_span_dim,
                    propagation_number, toeplitz_system)
from .states import (PureStateVector, State, evaluate, is_pure,
                     pure_state_from_angles, state_from_density, trace_state,
                     vector_state)

__version__ = "0.1.0"
