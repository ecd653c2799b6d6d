"""Generator functions defining the subordination classes, and the order map.

A generator phi is an analytic function on the unit disk with phi(0) = 1;
the associated class collects the normalized functions f whose curvature
transform 1 + z f''/f' is subordinate to phi.  Four kinds are supported:

* strongly convex of order alpha: phi(z) = ((1+z)/(1-z))**alpha,
* uniformly convex: phi(z) = 1 + (8/pi^2) z G(z)^2 with G(z) = sum z^n/(2n+1),
* half plane of order a: phi(z) = (1 + (1-2a) z)/(1 - z), mapping onto Re w > a,
* custom: an explicit coefficient list with constant term 1.

The module also carries the Mocanu order map gamma(beta) relating strongly
convex and strongly starlike orders, its bisection inverse, and the crossing
point of sin(pi gamma^{-1}(alpha)/2) - alpha used by the ``figure1`` report.
"""

from __future__ import annotations

import cmath
import enum
import math
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .errors import DomainError, FileFormatError, NumericError
from .series import ComplexSeries, derivative, evaluate, exp_series, mul, pad, read_coeff_file, truncate

PI_SQ = math.pi**2

# Summation controls for g_eval.
_G_TERM_TOL = 1e-16
_G_TERM_CAP = 100_000

_BISECT_CAP = 200


class Kind(enum.Enum):
    STRONGLY_CONVEX = "kalpha"
    UNIFORMLY_CONVEX = "ucv"
    HALF_PLANE = "halfplane"
    CUSTOM = "custom"


@dataclass(frozen=True)
class GeneratorSpec:
    """Which generator phi defines the class under study.

    ``alpha`` is the strongly convex order in (0, 1]; ``a`` is the half-plane
    order in [0, 1); ``custom_coeffs`` holds an explicit Taylor expansion with
    constant term exactly 1.
    """

    kind: Kind
    alpha: float | None = None
    a: float | None = None
    custom_coeffs: ComplexSeries | None = None

    def __post_init__(self) -> None:
        if self.kind is Kind.STRONGLY_CONVEX:
            if self.alpha is None or not 0.0 < self.alpha <= 1.0:
                raise DomainError("strongly convex order must satisfy 0 < alpha <= 1")
        elif self.kind is Kind.HALF_PLANE:
            if self.a is None or not 0.0 <= self.a < 1.0:
                raise DomainError("half-plane order must satisfy 0 <= a < 1")
        elif self.kind is Kind.CUSTOM:
            if self.custom_coeffs is None:
                raise DomainError("custom generator needs a coefficient series")
            if complex(self.custom_coeffs.coeffs[0]) != 1.0 + 0.0j:
                raise DomainError("a generator must have phi(0) = 1")

    @property
    def real_coefficients(self) -> bool:
        """True when all Taylor coefficients of phi are real (conjugation symmetry)."""
        if self.kind is Kind.CUSTOM:
            return bool(np.all(self.custom_coeffs.coeffs.imag == 0.0))
        return True

    def describe(self) -> str:
        if self.kind is Kind.STRONGLY_CONVEX:
            return f"strongly convex, alpha={self.alpha}"
        if self.kind is Kind.UNIFORMLY_CONVEX:
            return "uniformly convex"
        if self.kind is Kind.HALF_PLANE:
            return f"half plane, a={self.a}"
        return f"custom, order {self.custom_coeffs.order}"


def strongly_convex(alpha: float) -> GeneratorSpec:
    return GeneratorSpec(Kind.STRONGLY_CONVEX, alpha=alpha)


def uniformly_convex() -> GeneratorSpec:
    return GeneratorSpec(Kind.UNIFORMLY_CONVEX)


def half_plane(a: float) -> GeneratorSpec:
    return GeneratorSpec(Kind.HALF_PLANE, a=a)


def custom(coeffs: ComplexSeries) -> GeneratorSpec:
    return GeneratorSpec(Kind.CUSTOM, custom_coeffs=coeffs)


def custom_from_file(path: str | Path) -> GeneratorSpec:
    """Load a custom generator; the file's first coefficient line must be "1 0"."""
    coeffs = read_coeff_file(path)
    if complex(coeffs.coeffs[0]) != 1.0 + 0.0j:
        raise FileFormatError(f"{path}: line 0 must be '1 0' so that phi(0) = 1")
    return custom(coeffs)


# ---------------------------------------------------------------------------
# Point evaluation


def _g_closed(z: complex) -> complex:
    # G(z) = atanh(sqrt(z))/sqrt(z) is even in sqrt(z), hence single valued;
    # a short Taylor start avoids the 0/0 at the origin.
    w = cmath.sqrt(z)
    if abs(w) < 1e-4:
        return 1.0 + z * (1.0 / 3.0 + z * (0.2 + z / 7.0))
    return cmath.atanh(w) / w


def _pair_scalar(spec: GeneratorSpec, z: complex) -> tuple[complex, complex]:
    """(phi(z), phi'(z)) without domain checks; scalar fast path."""
    if spec.kind is Kind.STRONGLY_CONVEX:
        al = spec.alpha
        p = ((1 + z) / (1 - z)) ** al
        return p, 2 * al * p / (1 - z * z)
    if spec.kind is Kind.UNIFORMLY_CONVEX:
        g = _g_closed(z)
        return 1 + 8 / PI_SQ * z * g * g, 8 * g / (PI_SQ * (1 - z))
    if spec.kind is Kind.HALF_PLANE:
        a = spec.a
        return (1 + (1 - 2 * a) * z) / (1 - z), (2 - 2 * a) / (1 - z) ** 2
    coeffs = spec.custom_coeffs
    if coeffs.order == 0:
        return complex(coeffs.coeffs[0]), 0j
    return evaluate(coeffs, z), evaluate(derivative(coeffs), z)


def _pair_array(spec: GeneratorSpec, z: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Vectorized (phi, phi') over an array of points inside the disk."""
    if spec.kind is Kind.STRONGLY_CONVEX:
        al = spec.alpha
        p = ((1 + z) / (1 - z)) ** al
        return p, 2 * al * p / (1 - z * z)
    if spec.kind is Kind.UNIFORMLY_CONVEX:
        w = np.sqrt(z.astype(np.complex128))
        small = np.abs(w) < 1e-4
        wsafe = np.where(small, 0.5, w)
        g = np.arctanh(wsafe) / wsafe
        if np.any(small):
            g = np.where(small, 1.0 + z * (1.0 / 3.0 + z * (0.2 + z / 7.0)), g)
        return 1 + 8 / PI_SQ * z * g * g, 8 * g / (PI_SQ * (1 - z))
    if spec.kind is Kind.HALF_PLANE:
        a = spec.a
        return (1 + (1 - 2 * a) * z) / (1 - z), (2 - 2 * a) / (1 - z) ** 2
    coeffs = spec.custom_coeffs.coeffs
    p = np.polynomial.polynomial.polyval(z, coeffs)
    if coeffs.size == 1:
        return p, np.zeros_like(z)
    dp = np.polynomial.polynomial.polyval(z, coeffs[1:] * np.arange(1, coeffs.size))
    return p, dp


def _check_disk(z: complex) -> None:
    if abs(z) >= 1.0:
        raise DomainError(f"point {z!r} lies outside the open unit disk")


def phi_eval(spec: GeneratorSpec, z: complex) -> complex:
    """Value of the generator at a point of the open unit disk."""
    _check_disk(z)
    return _pair_scalar(spec, complex(z))[0]


def phi_prime_eval(spec: GeneratorSpec, z: complex) -> complex:
    """Derivative of the generator at a point of the open unit disk.

    Closed forms are used throughout: the strongly convex generator satisfies
    phi' = 2 alpha phi/(1 - z^2), the uniformly convex one
    phi'(z) = 8 G(z) / (pi^2 (1 - z)).
    """
    _check_disk(z)
    return _pair_scalar(spec, complex(z))[1]


def g_eval(z: complex) -> complex:
    """Sum of z^n/(2n+1), accumulated until the term drops below 1e-16."""
    _check_disk(z)
    total = 0j
    zn = 1.0 + 0j
    for n in range(_G_TERM_CAP):
        term = zn / (2 * n + 1)
        total += term
        if abs(term) < _G_TERM_TOL:
            break
        zn *= z
    return total


# ---------------------------------------------------------------------------
# Series expansions


def _log_ratio_series(order: int) -> ComplexSeries:
    # log((1+z)/(1-z)) = 2 z + 2 z^3/3 + 2 z^5/5 + ...; exact coefficients.
    out = np.zeros(order + 1, dtype=np.complex128)
    out[1::2] = 2.0 / np.arange(1, order + 1, 2)
    return ComplexSeries(out)


def g_series(order: int) -> ComplexSeries:
    """Series with coefficients exactly 1/(2n+1)."""
    return ComplexSeries(1.0 / (2.0 * np.arange(order + 1) + 1.0))


def phi_series(spec: GeneratorSpec, order: int) -> ComplexSeries:
    """Taylor expansion of the generator to the requested order."""
    if order < 1:
        raise DomainError("generator series order must be at least 1")
    if spec.kind is Kind.STRONGLY_CONVEX:
        # exp of a non-negative series keeps every coefficient non-negative,
        # exactly as the recurrence multiplies and adds non-negative terms.
        return exp_series(_log_ratio_series(order) * spec.alpha)
    if spec.kind is Kind.UNIFORMLY_CONVEX:
        g2 = mul(g_series(order), g_series(order))
        out = np.zeros(order + 1, dtype=np.complex128)
        out[1:] = 8 / PI_SQ * g2.coeffs[:order]
        out[0] = 1.0
        return ComplexSeries(out)
    if spec.kind is Kind.HALF_PLANE:
        out = np.full(order + 1, 2.0 - 2.0 * spec.a, dtype=np.complex128)
        out[0] = 1.0
        return ComplexSeries(out)
    coeffs = spec.custom_coeffs
    if coeffs.order >= order:
        return truncate(coeffs, order)
    return pad(coeffs, order)  # a custom generator is a polynomial; its tail is zero


def q_series(spec: GeneratorSpec, order: int) -> ComplexSeries:
    """Series of 2 z phi'(z) + 1 - phi(z)^2 to the requested order.

    The coefficient of z^n in 2 z phi' is just 2 n p_n, so the expansion is
    assembled without a separate differentiation step.
    """
    if order < 2:
        raise DomainError("q_series needs order at least 2")
    p = phi_series(spec, order)
    out = 2.0 * np.arange(order + 1) * p.coeffs - mul(p, p).coeffs
    out = out.copy()
    out[0] += 1.0
    return ComplexSeries(out)


# ---------------------------------------------------------------------------
# The order map gamma and its inverse


def gamma_of_beta(beta: float) -> float:
    """Order map linking strongly convex and strongly starlike orders.

    gamma(beta) = (2/pi) arctan[ tan(pi beta/2)
        + beta / ((1+beta)^((1+beta)/2) (1-beta)^((1-beta)/2) cos(pi beta/2)) ],
    strictly increasing from 0 to 1 on (0, 1).
    """
    if not 0.0 < beta < 1.0:
        raise DomainError("gamma is defined for 0 < beta < 1")
    denom = (1 + beta) ** ((1 + beta) / 2) * (1 - beta) ** ((1 - beta) / 2)
    arg = math.tan(math.pi * beta / 2) + beta / (denom * math.cos(math.pi * beta / 2))
    return (2 / math.pi) * math.atan(arg)


def gamma_inverse(alpha: float, tol: float = 1e-12) -> float:
    """Bisection inverse of the monotone order map.

    Returns beta with |gamma(beta) - alpha| <= tol.
    """
    if not 0.0 < alpha < 1.0:
        raise DomainError("gamma_inverse is defined for 0 < alpha < 1")
    if tol <= 0.0:
        raise DomainError("tolerance must be positive")
    lo, hi = 1e-15, 1.0 - 1e-15
    for _ in range(_BISECT_CAP):
        mid = 0.5 * (lo + hi)
        g = gamma_of_beta(mid)
        if abs(g - alpha) <= tol:
            return mid
        if g < alpha:
            lo = mid
        else:
            hi = mid
    raise NumericError(f"gamma_inverse({alpha}) did not converge to tol={tol}")


def _qc_gain(alpha: float, inner_tol: float) -> float:
    return math.sin(math.pi * gamma_inverse(alpha, inner_tol) / 2) - alpha


def crossing_bracket(tol: float = 1e-6) -> tuple[float, float, float]:
    """Root of sin(pi gamma^{-1}(alpha)/2) - alpha on (0.1, 0.9), with bracket.

    Returns (root, lo, hi) where the sign changes across [lo, hi] and the
    expression at the root is within tol of zero.
    """
    if tol <= 0.0:
        raise DomainError("tolerance must be positive")
    inner = min(tol * 1e-3, 1e-12)
    lo, hi = 0.1, 0.9
    flo, fhi = _qc_gain(lo, inner), _qc_gain(hi, inner)
    if not flo < 0.0 < fhi:
        raise NumericError("no sign change on the (0.1, 0.9) bracket")
    for _ in range(_BISECT_CAP):
        mid = 0.5 * (lo + hi)
        fmid = _qc_gain(mid, inner)
        if abs(fmid) <= tol:
            return mid, lo, hi
        if fmid < 0.0:
            lo = mid
        else:
            hi = mid
    raise NumericError(f"crossing search did not converge to tol={tol}")


def figure1_crossing(tol: float = 1e-6) -> float:
    """The alpha where sin(pi gamma^{-1}(alpha)/2) - alpha changes sign."""
    return crossing_bracket(tol)[0]


def crossing_curve(step: float) -> tuple[np.ndarray, np.ndarray]:
    """Sample sin(pi gamma^{-1}(alpha)/2) - alpha on the grid step, 2*step, ..., 1-step."""
    if step <= 0.0 or step >= 0.5:
        raise DomainError("step must lie in (0, 0.5)")
    alphas = np.arange(step, 1.0 - step + 1e-12, step)
    values = np.array([_qc_gain(float(a), 1e-12) for a in alphas])
    return alphas, values
