"""Sharp hyperbolic sup-norm bounds for Schwarzian derivatives over
subordination-defined convex function classes.

The package computes the sharp bound N(phi) for a generator phi, builds the
extremal functions that witness sharpness, and numerically verifies the
coefficient lemmas and inequalities behind the closed-form constants
(2 alpha for the strongly convex classes, 8/pi^2 for the uniformly convex
class, 8a(1-a) for half-plane curvature classes).
"""

from .errors import (
    BranchPointError,
    CompositionDomainError,
    CriticalPointError,
    DegenerateOrderError,
    DomainError,
    FileFormatError,
    NonInvertibleError,
    NumericError,
    SchwarznormError,
)
from .series import (
    DEFAULT_ORDER,
    ComplexSeries,
    add,
    compose,
    derivative,
    evaluate,
    exp_series,
    integrate,
    log_series,
    mul,
    pad,
    pow_series,
    read_coeff_file,
    reciprocal,
    schwarzian,
    truncate,
    write_coeff_file,
)
from .generators import (
    GeneratorSpec,
    Kind,
    crossing_bracket,
    crossing_curve,
    custom,
    custom_from_file,
    figure1_crossing,
    g_eval,
    g_series,
    gamma_inverse,
    gamma_of_beta,
    half_plane,
    phi_eval,
    phi_prime_eval,
    phi_series,
    q_series,
    strongly_convex,
    uniformly_convex,
)
from .estimator import (
    NormEstimate,
    RadialBound,
    circle_sup,
    f_closed_form,
    f_value,
    hyperbolic_norm,
    n_phi,
)
from .extremal import ExtremalFunction, build_extremal, verify_subordination_ode
from . import verify

__version__ = "1.0.0"

__all__ = [
    "BranchPointError",
    "ComplexSeries",
    "CompositionDomainError",
    "CriticalPointError",
    "DEFAULT_ORDER",
    "DegenerateOrderError",
    "DomainError",
    "ExtremalFunction",
    "FileFormatError",
    "GeneratorSpec",
    "Kind",
    "NonInvertibleError",
    "NormEstimate",
    "NumericError",
    "RadialBound",
    "SchwarznormError",
    "add",
    "build_extremal",
    "circle_sup",
    "compose",
    "crossing_bracket",
    "crossing_curve",
    "custom",
    "custom_from_file",
    "derivative",
    "evaluate",
    "exp_series",
    "f_closed_form",
    "f_value",
    "figure1_crossing",
    "g_eval",
    "g_series",
    "gamma_inverse",
    "gamma_of_beta",
    "half_plane",
    "hyperbolic_norm",
    "integrate",
    "log_series",
    "mul",
    "n_phi",
    "pad",
    "phi_eval",
    "phi_prime_eval",
    "phi_series",
    "pow_series",
    "q_series",
    "read_coeff_file",
    "reciprocal",
    "schwarzian",
    "strongly_convex",
    "truncate",
    "uniformly_convex",
    "verify",
    "verify_subordination_ode",
    "write_coeff_file",
]
