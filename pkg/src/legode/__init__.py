"""legode: spectral solution of scalar non-autonomous linear ODEs.

The initial value problem du/dt = f(t) u(t), u = 1 at the interval start,
is reduced to one banded linear solve: expansion coefficients of f build a
numerically banded matrix F in the orthonormal Legendre product basis, and
the Legendre coefficients of the solution are T (I - F)^{-1} phi(-1) with
T the tridiagonal Heaviside-kernel matrix.
"""
from .analysis import (DecayProfile, conjecture_check, err_c, err_f, fov_extent,
                       numerical_radius_bound, numerical_radius_estimate,
                       predicted_accurate_entries, resolvent_decay_profile,
                       trailing_block_bandwidth)
from .banded import BandedMatrix
from .basis import (StructuredBasisFactors, basis_matrix_dense,
                    basis_matrix_inf_norm_bound, basis_matrix_structured,
                    theta_matrix)
from .chop import chop_series
from .coeff import (CoeffMatrix, assemble, bandwidth_for_tolerance,
                    truncation_tail_bound, underline_theta, underline_truncate)
from .errors import ConvergenceError, LegodeError, SingularSystemError
from .kernels import BACKEND
from .legendre import (EvalGrid, LegendreSeries, eval_legendre, eval_series,
                       expand_function, gauss_legendre_rule, phi_vector)
from .problems import (expression_problem, nmr_problem, polynomial_problem,
                       toy_problem)
from .solver import (OdeProblem, SolveReport, auto_size, rescale_to_reference,
                     solve_ode, solve_system)
from .tripleprod import (hankel_entry, toeplitz_entry, triple_product,
                         triple_product_normalized)

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "BandedMatrix",
    "CoeffMatrix",
    "ConvergenceError",
    "DecayProfile",
    "EvalGrid",
    "LegendreSeries",
    "LegodeError",
    "OdeProblem",
    "SingularSystemError",
    "SolveReport",
    "StructuredBasisFactors",
    "assemble",
    "auto_size",
    "bandwidth_for_tolerance",
    "basis_matrix_dense",
    "basis_matrix_inf_norm_bound",
    "basis_matrix_structured",
    "chop_series",
    "conjecture_check",
    "err_c",
    "err_f",
    "eval_legendre",
    "eval_series",
    "expand_function",
    "expression_problem",
    "fov_extent",
    "gauss_legendre_rule",
    "hankel_entry",
    "nmr_problem",
    "numerical_radius_bound",
    "numerical_radius_estimate",
    "phi_vector",
    "polynomial_problem",
    "predicted_accurate_entries",
    "rescale_to_reference",
    "resolvent_decay_profile",
    "solve_ode",
    "solve_system",
    "theta_matrix",
    "toeplitz_entry",
    "toy_problem",
    "trailing_block_bandwidth",
    "triple_product",
    "triple_product_normalized",
    "truncation_tail_bound",
    "underline_theta",
    "underline_truncate",
]
