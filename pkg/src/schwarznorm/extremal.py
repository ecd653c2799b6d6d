"""Extremal functions built from the defining subordination identity.

Given a generator phi and an exponent k >= 1, the function f determined by

    1 + z f''(z)/f'(z) = phi(z^k),      f(0) = 0, f'(0) = 1,

belongs to the class of phi (z^k is a self-map of the disk fixing 0) and,
for k = 2, realizes the sharp Schwarzian bound of the classical generators
at the origin.  The construction integrates the identity twice in the
series ring: with h(z) = (phi(z^k) - 1)/z one has f' = exp(integral of h)
and f = integral of f'.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DomainError
from .generators import GeneratorSpec, phi_series
from .series import (
    ComplexSeries,
    compose,
    derivative,
    exp_series,
    integrate,
    mul,
    reciprocal,
    truncate,
)


@dataclass(frozen=True)
class ExtremalFunction:
    """A constructed class member: series, generator, and the omega exponent."""

    f: ComplexSeries
    spec: GeneratorSpec
    omega_exponent: int


def _monomial(k: int, order: int) -> ComplexSeries:
    out = np.zeros(order + 1, dtype=np.complex128)
    out[k] = 1.0
    return ComplexSeries(out)


def _phi_of_zk(spec: GeneratorSpec, k: int, order: int) -> ComplexSeries:
    if k > order:
        out = np.zeros(order + 1, dtype=np.complex128)
        out[0] = 1.0
        return ComplexSeries(out)
    return compose(phi_series(spec, order), _monomial(k, order))


def build_extremal(spec: GeneratorSpec, k: int, order: int) -> ExtremalFunction:
    """Construct the extremal series for omega(z) = z^k to the given order.

    Intermediates are carried at order + 2 so that the two integrations land
    exactly on the requested order.
    """
    if k < 1:
        raise DomainError("omega exponent k must be at least 1")
    if order < 7:
        raise DomainError("order must be at least 7")
    work = order + 2
    pz = _phi_of_zk(spec, k, work)
    # phi(0) = 1 exactly, so (phi(z^k) - 1)/z is a plain coefficient shift
    h = ComplexSeries(pz.coeffs[1:])
    fprime = exp_series(integrate(h))
    f = integrate(fprime)
    return ExtremalFunction(f=truncate(f, order), spec=spec, omega_exponent=k)


def verify_subordination_ode(e: ExtremalFunction) -> float:
    """Largest coefficient mismatch between 1 + z f''/f' and phi(z^k).

    Both sides are expanded as series and compared through order(f) - 2;
    a correctly constructed extremal gives mismatch at rounding level.
    """
    f = e.f
    fp = derivative(f)
    u = mul(derivative(fp), reciprocal(fp))  # f''/f', order(f) - 2
    lhs = np.zeros(u.order + 2, dtype=np.complex128)
    lhs[0] = 1.0
    lhs[1:] = u.coeffs
    rhs = _phi_of_zk(e.spec, e.omega_exponent, f.order - 1).coeffs
    n = f.order - 1  # compare coefficients 0 .. order(f) - 2
    return float(np.max(np.abs(lhs[:n] - rhs[:n])))
