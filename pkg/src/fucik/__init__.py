"""Certified Riesz-basis analysis of asymmetric-oscillation systems on (0, pi).

The package builds the piecewise-sine profiles attached to the spectrum
curves of -u'' = alpha u+ - beta u-, evaluates their Fourier data in closed
form, bounds the deviation of a whole system from the sine basis by an
explicit envelope, and certifies the Riesz-basis property through a
Paley-Wiener-style perturbation criterion with independent quadrature and
Gram-matrix cross-checks.
"""

from .certify import (
    Certificate,
    InputError,
    SystemSpec,
    certify_system,
    combined_criterion,
    defect_details,
    deviation_budget,
    deviation_cap,
    optimal_scaling,
    parse_system,
    projection_defect,
    projection_defect_bound,
    zeta,
)
from .eigenfunction import (
    SUP_NORM,
    Bump,
    JunctionError,
    PiecewiseEigenfunction,
    build,
    evaluate,
    ode_residual,
    to_record,
)
from .envelope import (
    GAMMA_MAX,
    EnvelopeEval,
    coefficient_bound,
    envelope,
    envelope_root,
    envelope_tail_series,
    envelope_value,
    inverse_quadratic_sum,
)
from .fourier import (
    CoefficientQuery,
    apply_dilation,
    coefficient,
    dilation_norm_bound,
    quadrature_coefficient,
)
from .gram import GramWitness, extremal_eigenvalues, gram_matrix, gram_witness
from .quadrature import QuadratureError, integrate
from .spectrum import (
    MEMBERSHIP_TOL,
    FucikPoint,
    ReflectedCurveError,
    SpectrumError,
    curve_residual,
    dilation_parameter,
    is_diagonal,
    point_from_gamma,
    solve_alpha,
    solve_beta,
    validate_point,
)

__version__ = "0.1.0"

__all__ = [
    "Bump",
    "Certificate",
    "CoefficientQuery",
    "EnvelopeEval",
    "FucikPoint",
    "GAMMA_MAX",
    "GramWitness",
    "InputError",
    "JunctionError",
    "MEMBERSHIP_TOL",
    "PiecewiseEigenfunction",
    "QuadratureError",
    "ReflectedCurveError",
    "SUP_NORM",
    "SpectrumError",
    "SystemSpec",
    "apply_dilation",
    "build",
    "certify_system",
    "coefficient",
    "coefficient_bound",
    "combined_criterion",
    "curve_residual",
    "defect_details",
    "deviation_budget",
    "deviation_cap",
    "dilation_norm_bound",
    "dilation_parameter",
    "envelope",
    "envelope_root",
    "envelope_tail_series",
    "envelope_value",
    "evaluate",
    "extremal_eigenvalues",
    "gram_matrix",
    "gram_witness",
    "integrate",
    "inverse_quadratic_sum",
    "is_diagonal",
    "ode_residual",
    "optimal_scaling",
    "parse_system",
    "point_from_gamma",
    "projection_defect",
    "projection_defect_bound",
    "quadrature_coefficient",
    "solve_alpha",
    "solve_beta",
    "to_record",
    "validate_point",
    "zeta",
    "__version__",
]
