"""Supremum machinery for the sharp Schwarzian-norm bound.

For a generator phi, the two circle suprema

    A(s) = sup_{|z|=s} |2 z phi'(z) + 1 - phi(z)^2|,
    B(s) = sup_{|z|=s} |phi'(z)|,

combine into the two-variable functional

    F(s, t) = (1-t^2)^2/(2 t^2) A(s) + (1-t^2)(1 - s^2/t^2) B(s),

whose supremum over 0 < s < t < 1 is the sharp bound N(phi) on the
hyperbolic sup-norm of the Schwarzian derivative over the class of phi.
This module estimates N(phi) by sampling, and also estimates the
hyperbolic sup-norm (1-|z|^2)^2 |S_f(z)| of a concrete series.

Sampling always produces a certified lower bound of a supremum, never an
upper bound; estimates are reported with ``is_lower_bound`` set.

All routines are deterministic: fixed grids, golden-section refinement,
no randomness.  Grid cells are evaluated independently, so the work could
be fanned out in parallel without changing any result; the implementation
here is single threaded and vectorizes over circles instead.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .errors import DomainError
from .generators import GeneratorSpec, Kind, _pair_array, _pair_scalar, q_series
from .series import ComplexSeries, evaluate, schwarzian

_INV_GOLDEN = (math.sqrt(5.0) - 1.0) / 2.0

# The supremum region 0 < s < t < 1 is sampled in coordinates (lambda, t)
# with s = lambda * t, so that both degenerate corners (t -> 0 and
# s = t -> 1) are reachable by a rectangular grid.
_T_MIN = 1e-4
_T_MAX = 1.0 - 1e-4
_LAMBDA_CAP = 1.0 - 1e-9

# Below this radius the direct form of 2 z phi' + 1 - phi^2 loses all its
# significant digits to cancellation (the quantity is O(z^2) while the
# summands are O(1)); a Taylor polynomial of the same quantity is used
# instead.
_SMALL_CIRCLE = 0.05
_Q_TAYLOR_ORDER = 48

_LINE_SCAN = 33
_GOLDEN_STEPS = 60

# Angular resolution used only to locate the best grid cell; the located
# cell and every refinement step are re-evaluated at full fidelity.
_LOCATOR_SAMPLES = 128

_polyval = np.polynomial.polynomial.polyval


@dataclass(frozen=True)
class RadialBound:
    """Circle suprema at radius s with the angles where they were attained."""

    s: float
    a_value: float
    b_value: float
    a_arg: float
    b_arg: float


@dataclass(frozen=True)
class NormEstimate:
    """A sampled supremum together with its witness point.

    ``witness`` is an (s, t) pair for N(phi) estimates and a complex point
    for hyperbolic-norm estimates.  ``value`` always equals the objective
    re-evaluated at the witness; sampling only ever certifies a lower bound
    of the true supremum, hence ``is_lower_bound``.
    """

    value: float
    witness: tuple | complex
    grid_resolution: int
    refinement_steps: int
    is_lower_bound: bool = True


def _golden_max(f: Callable[[float], float], lo: float, hi: float, iters: int) -> tuple[float, float]:
    """Golden-section maximization on [lo, hi]; endpoints are candidates too."""
    a, b = lo, hi
    x1 = b - _INV_GOLDEN * (b - a)
    x2 = a + _INV_GOLDEN * (b - a)
    f1, f2 = f(x1), f(x2)
    best_x, best_v = (x1, f1) if f1 >= f2 else (x2, f2)
    for _ in range(iters):
        if f1 < f2:
            a = x1
            x1, f1 = x2, f2
            x2 = a + _INV_GOLDEN * (b - a)
            f2 = f(x2)
            if f2 > best_v:
                best_x, best_v = x2, f2
        else:
            b = x2
            x2, f2 = x1, f1
            x1 = b - _INV_GOLDEN * (b - a)
            f1 = f(x1)
            if f1 > best_v:
                best_x, best_v = x1, f1
    for x in (lo, hi):
        v = f(x)
        if v > best_v:
            best_x, best_v = x, v
    return best_x, best_v


class _CircleContext:
    """Per-generator state shared by the circle-supremum evaluations."""

    def __init__(self, spec: GeneratorSpec):
        self.spec = spec
        if spec.kind is Kind.CUSTOM:
            # for a polynomial generator the Taylor form of the objective is exact
            q_order = max(4, 2 * spec.custom_coeffs.order)
        else:
            q_order = _Q_TAYLOR_ORDER
        self.q_coeffs = q_series(spec, q_order).coeffs
        self.real_sym = spec.real_coefficients

    def theta_grid(self, samples: int) -> np.ndarray:
        # conjugation symmetry of real-coefficient generators halves the circle
        if self.real_sym:
            return np.linspace(0.0, math.pi, samples)
        return np.linspace(0.0, 2.0 * math.pi, samples, endpoint=False)

    def a_arrays(self, z: np.ndarray, s: float) -> np.ndarray:
        if s <= _SMALL_CIRCLE:
            return np.abs(_polyval(z, self.q_coeffs))
        p, dp = _pair_array(self.spec, z)
        return np.abs(2.0 * z * dp + 1.0 - p * p)

    def b_arrays(self, z: np.ndarray) -> np.ndarray:
        return np.abs(_pair_array(self.spec, z)[1])

    def a_at(self, s: float, theta: float) -> float:
        z = s * cmath.exp(1j * theta)
        if s <= _SMALL_CIRCLE:
            total = 0j
            for c in self.q_coeffs[::-1]:
                total = total * z + c
            return abs(total)
        p, dp = _pair_scalar(self.spec, z)
        return abs(2.0 * z * dp + 1.0 - p * p)

    def b_at(self, s: float, theta: float) -> float:
        z = s * cmath.exp(1j * theta)
        return abs(_pair_scalar(self.spec, z)[1])


def circle_sup(
    spec: GeneratorSpec,
    s: float,
    samples: int = 512,
    refine_iters: int = 40,
) -> RadialBound:
    """Suprema of |2 z phi' + 1 - phi^2| and |phi'| on the circle |z| = s.

    Uniform angular sampling locates the maxima; golden-section refinement
    around the best samples sharpens them.  At s = 0 the normalization
    phi(0) = 1 forces A(0) = 0 and B(0) = |phi'(0)| exactly.
    """
    if not 0.0 <= s < 1.0:
        raise DomainError("circle radius must satisfy 0 <= s < 1")
    if samples < 8:
        raise DomainError("need at least 8 circle samples")
    return _circle_sup_ctx(_CircleContext(spec), s, samples, refine_iters)


def _circle_sup_ctx(ctx: _CircleContext, s: float, samples: int, refine_iters: int) -> RadialBound:
    if s == 0.0:
        b0 = abs(_pair_scalar(ctx.spec, 0j)[1])
        return RadialBound(0.0, 0.0, b0, 0.0, 0.0)
    theta = ctx.theta_grid(samples)
    z = s * np.exp(1j * theta)
    arrays = (ctx.a_arrays(z, s), ctx.b_arrays(z))
    funcs = (lambda th: ctx.a_at(s, th), lambda th: ctx.b_at(s, th))
    out = []
    for values, func in zip(arrays, funcs):
        i = int(np.argmax(values))
        best_v, best_th = float(values[i]), float(theta[i])
        if ctx.real_sym:
            lo = float(theta[max(i - 1, 0)])
            hi = float(theta[min(i + 1, samples - 1)])
        else:
            step = 2.0 * math.pi / samples
            lo, hi = best_th - step, best_th + step  # periodic, no clamping needed
        gx, gv = _golden_max(func, lo, hi, refine_iters)
        if gv > best_v:
            best_v, best_th = gv, gx
        out.append((best_v, best_th % (2.0 * math.pi)))
    (a_val, a_arg), (b_val, b_arg) = out
    return RadialBound(s, a_val, b_val, a_arg, b_arg)


def _check_region(s: float, t: float) -> None:
    if s < 0.0:
        raise DomainError("s must be non-negative")
    if t <= s or t >= 1.0:
        raise DomainError("need 0 <= s < t < 1")


def f_value(spec: GeneratorSpec, s: float, t: float, radial: RadialBound) -> float:
    """The bound functional F(s, t) assembled from precomputed circle suprema.

    s = 0 is allowed as the continuous boundary extension, where
    F(0, t) = (1 - t^2) |phi'(0)|.
    """
    _check_region(s, t)
    x = 1.0 - t * t
    return x * x / (2.0 * t * t) * radial.a_value + x * (1.0 - (s * s) / (t * t)) * radial.b_value


def f_closed_form(spec: GeneratorSpec, s: float, t: float) -> float:
    """F(s, t) evaluated from phi(s), phi'(s) on the positive real axis.

    Valid whenever the circle maxima sit at z = s, which holds when the
    generator and its curvature defect 2 z phi' + 1 - phi^2 both have
    non-negative Taylor coefficients (the strongly convex, uniformly
    convex, and half-plane generators all qualify).
    """
    _check_region(s, t)
    p, dp = _pair_scalar(spec, complex(s))
    x = 1.0 - t * t
    val = x * x / (2.0 * t * t) * (1.0 - p * p) + x * (1.0 - s) * (s + t * t) / (t * t) * dp
    return float(val.real)


def n_phi(
    spec: GeneratorSpec,
    grid: int = 256,
    refine_iters: int = 40,
    *,
    samples: int = 512,
    circle_refine_iters: int = 40,
) -> NormEstimate:
    """Sampled supremum of F(s, t) over 0 < s < t < 1.

    A uniform (lambda, t) grid with s = lambda t covers the region,
    including the lambda = 0 edge and t down to 1e-4 where the supremum of
    the classical generators lives.  Alternating single-coordinate line
    searches (coarse scan plus golden section, accepting improvements
    only) then refine the best cell.  The returned value is the sampled
    maximum, a lower bound of the true supremum, and equals F evaluated at
    the returned (s, t) witness.
    """
    if grid < 16:
        raise DomainError("grid must be at least 16")
    if refine_iters < 0:
        raise DomainError("refine_iters must be non-negative")
    ctx = _CircleContext(spec)
    lam = np.linspace(0.0, _LAMBDA_CAP, grid)
    ts = np.linspace(_T_MIN, _T_MAX, grid)
    theta = ctx.theta_grid(min(samples, _LOCATOR_SAMPLES))
    phases = np.exp(1j * theta)

    best_val, best_lam, best_t = -math.inf, 0.0, float(ts[0])
    for t in ts:
        t = float(t)
        s_vec = lam * t
        z = s_vec[:, None] * phases[None, :]
        p, dp = _pair_array(spec, z)
        qa = np.abs(2.0 * z * dp + 1.0 - p * p).max(axis=1)
        qb = np.abs(dp).max(axis=1)
        small = s_vec <= _SMALL_CIRCLE
        if np.any(small):
            qa[small] = np.abs(_polyval(z[small], ctx.q_coeffs)).max(axis=1)
        x = 1.0 - t * t
        F = x * x / (2.0 * t * t) * qa + x * (1.0 - (s_vec * s_vec) / (t * t)) * qb
        i = int(np.argmax(F))
        if F[i] > best_val:  # ties keep the smaller t, then the smaller s
            best_val, best_lam, best_t = float(F[i]), float(lam[i]), t

    radial_cache: dict[float, RadialBound] = {}

    def full(lam_: float, t_: float) -> float:
        s_ = lam_ * t_
        rb = radial_cache.get(s_)
        if rb is None:
            rb = _circle_sup_ctx(ctx, s_, samples, circle_refine_iters)
            radial_cache[s_] = rb
        return f_value(spec, s_, t_, rb)

    cur_lam, cur_t = best_lam, best_t
    value = full(cur_lam, cur_t)
    for it in range(refine_iters):
        if it % 2 == 0:
            seg = (0.0, _LAMBDA_CAP)
            obj = lambda x_: full(x_, cur_t)
        else:
            seg = (_T_MIN, _T_MAX)
            obj = lambda x_: full(cur_lam, x_)
        xs = np.linspace(seg[0], seg[1], _LINE_SCAN)
        vals = [obj(float(x_)) for x_ in xs]
        j = int(np.argmax(vals))
        lo = float(xs[max(j - 1, 0)])
        hi = float(xs[min(j + 1, _LINE_SCAN - 1)])
        gx, gv = _golden_max(obj, lo, hi, _GOLDEN_STEPS)
        cand_v, cand_x = max((float(vals[j]), float(xs[j])), (gv, gx))
        if cand_v > value:
            value = cand_v
            if it % 2 == 0:
                cur_lam = cand_x
            else:
                cur_t = cand_x
    return NormEstimate(
        value=value,
        witness=(cur_lam * cur_t, cur_t),
        grid_resolution=grid,
        refinement_steps=refine_iters,
    )


def hyperbolic_norm(
    f: ComplexSeries,
    radial_samples: int = 256,
    angular_samples: int = 256,
    *,
    r_max: float = 0.8,
    refine_iters: int = 40,
) -> NormEstimate:
    """Sampled hyperbolic sup-norm (1 - |z|^2)^2 |S_f(z)| of a series.

    The Schwarzian is computed once as a series, then maximized over a
    polar grid with the radius capped at ``r_max`` (truncation corrupts the
    series near |z| = 1; for the extremal witnesses the supremum sits at the
    origin, so the cap costs nothing), followed by the same coordinate
    line-search refinement as :func:`n_phi`.
    """
    if radial_samples < 2 or angular_samples < 4:
        raise DomainError("need at least 2 radial and 4 angular samples")
    if not 0.0 < r_max < 1.0:
        raise DomainError("r_max must lie in (0, 1)")
    if refine_iters < 0:
        raise DomainError("refine_iters must be non-negative")
    sw = schwarzian(f)
    real_sym = bool(np.all(f.coeffs.imag == 0.0))
    rs = np.linspace(0.0, r_max, radial_samples)
    theta_hi = math.pi if real_sym else 2.0 * math.pi
    if real_sym:
        thetas = np.linspace(0.0, theta_hi, angular_samples)
    else:
        thetas = np.linspace(0.0, theta_hi, angular_samples, endpoint=False)
    zgrid = rs[:, None] * np.exp(1j * thetas)[None, :]
    vals = (1.0 - np.abs(zgrid) ** 2) ** 2 * np.abs(_polyval(zgrid, sw.coeffs))
    i, j = np.unravel_index(int(np.argmax(vals)), vals.shape)

    def obj_polar(r: float, th: float) -> float:
        z = r * cmath.exp(1j * th)
        return (1.0 - r * r) ** 2 * abs(evaluate(sw, z))

    cur_r, cur_th = float(rs[i]), float(thetas[j])
    value = obj_polar(cur_r, cur_th)
    for it in range(refine_iters):
        if it % 2 == 0:
            xs = np.linspace(0.0, r_max, _LINE_SCAN)
            obj = lambda x_: obj_polar(x_, cur_th)
        else:
            xs = np.linspace(0.0, theta_hi, _LINE_SCAN)
            obj = lambda x_: obj_polar(cur_r, x_)
        scan = [obj(float(x_)) for x_ in xs]
        j = int(np.argmax(scan))
        lo = float(xs[max(j - 1, 0)])
        hi = float(xs[min(j + 1, _LINE_SCAN - 1)])
        gx, gv = _golden_max(obj, lo, hi, _GOLDEN_STEPS)
        cand_v, cand_x = max((float(scan[j]), float(xs[j])), (gv, gx))
        if cand_v > value:
            value = cand_v
            if it % 2 == 0:
                cur_r = cand_x
            else:
                cur_th = cand_x
    return NormEstimate(
        value=value,
        witness=cur_r * cmath.exp(1j * cur_th),
        grid_resolution=radial_samples,
        refinement_steps=refine_iters,
    )
