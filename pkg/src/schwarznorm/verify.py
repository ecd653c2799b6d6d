"""Numerical oracles for the coefficient lemmas and bound inequalities.

Every inequality the sharp-bound proofs rest on is re-checked by direct
computation: the triple and double reciprocal-odd sums, coefficient
non-negativity of the generators and of their curvature defects
2 z phi' + 1 - phi^2, the convexity coefficient cap, monotonicity of the
discriminant function h, the lower bound on G, grid sweeps of F against
the closed-form sharp values, and the half-plane cross-check against
8 a (1 - a).

Checks return :class:`VerificationReport` records instead of raising, so a
failing sweep reports where it first went wrong.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np

from .errors import DomainError
from .estimator import circle_sup, f_closed_form, f_value, n_phi
from .generators import (
    GeneratorSpec,
    g_eval,
    half_plane,
    phi_eval,
    phi_series,
    q_series,
    strongly_convex,
    uniformly_convex,
)

# Rounding slack for quantities that are provably non-negative but assembled
# from floating-point Cauchy products; genuine sign violations are O(1).
NONNEG_TOL = -1e-12

_ALPHA_SWEEP = (0.1, 0.25, 0.5, 0.75, 0.9, 1.0)
_LOEWNER_ALPHAS = (0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 1.0)
_H_ALPHAS = (0.25, 0.5, 0.75)
_F_BOUND_ALPHAS = (0.25, 0.5, 0.75, 1.0)
_SUITA_ORDERS = (0.5, 0.6, 0.75)


@dataclass(frozen=True)
class VerificationReport:
    """Outcome of one check: the worst margin found and where it occurred."""

    name: str
    passed: bool
    worst_value: float
    worst_location: object
    range_tested: str

    def to_dict(self) -> dict:
        loc = self.worst_location
        if isinstance(loc, np.integer):
            loc = int(loc)
        elif isinstance(loc, np.floating):
            loc = float(loc)
        elif isinstance(loc, tuple):
            loc = [x if isinstance(x, str) else float(x) for x in loc]
        return {
            "name": self.name,
            "passed": bool(self.passed),
            "worst_value": float(self.worst_value),
            "worst_location": loc,
            "range_tested": self.range_tested,
        }


# ---------------------------------------------------------------------------
# Reciprocal-odd sums


def sum_a(n: int) -> float:
    """Brute-force triple sum of 1/((2k+1)(2l+1)(2m+1)) over k+l+m = n."""
    if n < 0:
        raise DomainError("index must be non-negative")
    total = 0.0
    for k in range(n + 1):
        for l in range(n - k + 1):
            m = n - k - l
            total += 1.0 / ((2 * k + 1) * (2 * l + 1) * (2 * m + 1))
    return total


def sum_a_sweep(max_n: int) -> np.ndarray:
    """All triple sums up to max_n at once.

    The same triple sum as :func:`sum_a`, arranged as an iterated
    convolution of the 1/(2n+1) sequence.
    """
    if max_n < 0:
        raise DomainError("index must be non-negative")
    g = 1.0 / (2.0 * np.arange(max_n + 1) + 1.0)
    return np.convolve(np.convolve(g, g)[: max_n + 1], g)[: max_n + 1]


def sum_b(n: int) -> float:
    """Double sum of 1/((2k+1)(2l+1)) over k+l = n, via its partial-fraction form."""
    if n < 0:
        raise DomainError("index must be non-negative")
    return float(np.sum(1.0 / (2.0 * np.arange(n + 1) + 1.0))) / (n + 1)


def sum_b_direct(n: int) -> float:
    """The same double sum evaluated term by term (cross-check oracle)."""
    if n < 0:
        raise DomainError("index must be non-negative")
    k = np.arange(n + 1)
    return float(np.sum(1.0 / ((2.0 * k + 1.0) * (2.0 * (n - k) + 1.0))))


# ---------------------------------------------------------------------------
# Pointwise quantities


def h_eval(alpha: float, s: float) -> float:
    """Discriminant function of the strongly convex bound proof.

    h(s) = alpha ((1-alpha) P(s)^2 + (2 alpha (1-s)/(1+s)) P(s) - (1+alpha))
    with P the strongly convex generator; h(0) = 0 and h increases on (0, 1).
    """
    if not 0.0 < alpha < 1.0:
        raise DomainError("h is defined for 0 < alpha < 1")
    if not 0.0 <= s < 1.0:
        raise DomainError("h is defined for 0 <= s < 1")
    p = phi_eval(strongly_convex(alpha), complex(s)).real
    return alpha * ((1 - alpha) * p * p + 2 * alpha * (1 - s) / (1 + s) * p - (1 + alpha))


def check_eq_last(s: float) -> tuple[float, float]:
    """The G lower bound: (G(s), pi (sqrt((1-s)^2 + 16 s/pi) - 1 + s)/(8 s)).

    The first component exceeds 1 and the second stays below 1 on (0, 1),
    which is what the uniformly convex bound proof needs.
    """
    if not 0.0 < s < 1.0:
        raise DomainError("the bound is stated for 0 < s < 1")
    lhs = g_eval(complex(s)).real
    rhs = math.pi * (math.sqrt((1 - s) ** 2 + 16 * s / math.pi) - 1 + s) / (8 * s)
    return lhs, rhs


def check_nonneg_coeffs(name: str, coeffs: Sequence[complex] | np.ndarray,
                        range_tested: str, tol: float = NONNEG_TOL) -> VerificationReport:
    """Report whether real parts stay above tol and imaginary parts vanish."""
    arr = np.asarray(coeffs, dtype=np.complex128)
    re = arr.real
    idx = int(np.argmin(re))
    worst = float(re[idx])
    imag_ok = bool(np.all(np.abs(arr.imag) <= 1e-15))
    return VerificationReport(
        name=name,
        passed=bool(worst >= tol) and imag_ok,
        worst_value=worst,
        worst_location=idx,
        range_tested=range_tested,
    )


def suita_check(a: float, tol: float = 1e-3, *, grid: int = 256,
                refine_iters: int = 40) -> VerificationReport:
    """Compare the sampled half-plane bound with the closed form 8 a (1 - a)."""
    if not 0.5 <= a < 1.0:
        raise DomainError("the half-plane comparison is stated for 1/2 <= a < 1")
    est = n_phi(half_plane(a), grid=grid, refine_iters=refine_iters)
    sharp = 8.0 * a * (1.0 - a)
    gap = est.value - sharp
    return VerificationReport(
        name=f"suita_half_plane_a={a}",
        passed=bool(abs(gap) <= tol),
        worst_value=float(gap),
        worst_location=est.witness,
        range_tested=f"n_phi(half_plane({a})) grid={grid} vs 8a(1-a)={sharp}",
    )


# ---------------------------------------------------------------------------
# Aggregated sweeps


def _check_triple_sum(max_n: int, grid: int) -> VerificationReport:
    a = sum_a_sweep(max_n)
    idx = int(np.argmax(a))
    return VerificationReport("triple_sum_bound", bool(a[idx] <= 1.0 + 1e-12),
                              float(a[idx]), idx, f"A_n <= 1 for 0 <= n <= {max_n}")


def _check_pair_sum(max_n: int, grid: int) -> VerificationReport:
    hi = 10 * max_n
    if hi < 1:
        return VerificationReport("pair_sum_bound", True, 0.0, None, "empty range (max_n=0)")
    partial = np.cumsum(1.0 / (2.0 * np.arange(hi + 1) + 1.0))
    b = partial / np.arange(1.0, hi + 2.0)
    idx = 1 + int(np.argmax(b[1:]))
    return VerificationReport("pair_sum_bound", bool(b[idx] <= 2.0 / 3.0 + 1e-12),
                              float(b[idx]), idx, f"B_n <= 2/3 for 1 <= n <= {hi}")


def _check_pair_sum_cross(max_n: int, grid: int) -> VerificationReport:
    hi = min(max_n, 1000)
    worst, where = 0.0, 0
    for n in range(hi + 1):
        diff = abs(sum_b(n) - sum_b_direct(n))
        if diff > worst:
            worst, where = diff, n
    return VerificationReport("pair_sum_cross_check", bool(worst <= 1e-12), worst, where,
                              f"closed form vs direct double sum, n <= {hi}")


def _check_inner_inequality(max_n: int, grid: int) -> VerificationReport:
    n = np.arange(max_n + 1)
    lhs = (math.pi**2 / 4.0) * (2.0 * n + 2.0) / (2.0 * n + 3.0)
    a = sum_a_sweep(max_n)
    margin = lhs - np.maximum(math.pi**2 / 6.0, a)
    idx = int(np.argmin(margin))
    chain_ok = (math.pi**2 / 6.0 > 1.0) and bool(np.all(a <= 1.0 + 1e-12))
    return VerificationReport("inner_inequality", bool(margin[idx] >= -1e-12) and chain_ok,
                              float(margin[idx]), idx,
                              f"(pi^2/4)(2n+2)/(2n+3) >= pi^2/6 > 1 >= A_n, n <= {max_n}")


def _sweep_nonneg(name: str, labelled_specs, order: int, series_fn) -> VerificationReport:
    worst, where = math.inf, None
    for label, spec in labelled_specs:
        coeffs = series_fn(spec, order).coeffs.real
        idx = int(np.argmin(coeffs))
        if coeffs[idx] < worst:
            worst, where = float(coeffs[idx]), (label, idx)
    return VerificationReport(name, bool(worst >= NONNEG_TOL), worst, where,
                              f"orders 0..{order}")


def _kalpha_specs():
    return [(f"alpha={a}", strongly_convex(a)) for a in _ALPHA_SWEEP]


def _check_coefficient_cap(max_n: int, grid: int) -> VerificationReport:
    order = 96
    worst, where = -math.inf, None
    for alpha in _LOEWNER_ALPHAS:
        coeffs = phi_series(strongly_convex(alpha), order).coeffs.real
        over = coeffs[1:] - 2.0 * alpha
        violation = max(float(np.max(over)), float(np.max(-coeffs)))
        if violation > worst:
            worst, where = violation, (alpha, 1 + int(np.argmax(over)))
    return VerificationReport("convexity_coefficient_cap", bool(worst <= 1e-12), worst, where,
                              f"0 <= a_n <= 2 alpha, n <= {order}, alpha sweep {_LOEWNER_ALPHAS}")


def _check_h_monotone(max_n: int, grid: int) -> VerificationReport:
    worst, where = math.inf, None
    sgrid = np.arange(0.0, 1.0, 1e-2)
    for alpha in _H_ALPHAS:
        values = [h_eval(alpha, float(s)) for s in sgrid]
        if abs(values[0]) > 1e-14:
            return VerificationReport("h_zero_and_increasing", False, values[0],
                                      (alpha, 0.0), "h(alpha, 0) = 0")
        increments = np.diff(values)
        idx = int(np.argmin(increments))
        if increments[idx] < worst:
            worst, where = float(increments[idx]), (alpha, float(sgrid[idx + 1]))
    return VerificationReport("h_zero_and_increasing", bool(worst > 0.0), worst, where,
                              f"h increments on s grid 1e-2, alpha in {_H_ALPHAS}")


def _check_g_lower_bound(max_n: int, grid: int) -> VerificationReport:
    worst, where = math.inf, None
    ok = True
    for s in np.arange(1e-3, 1.0, 1e-3):
        lhs, rhs = check_eq_last(float(s))
        ok = ok and (rhs < 1.0) and (lhs > 1.0)
        if lhs - rhs < worst:
            worst, where = lhs - rhs, float(s)
    return VerificationReport("g_lower_bound", bool(ok and worst >= 0.0), worst, where,
                              "G(s) >= bound, bound < 1 < G(s), s grid 1e-3")


def _f_bound_sweep(name: str, spec: GeneratorSpec, sharp: float, grid: int) -> VerificationReport:
    pts = np.linspace(0.0, 1.0, grid + 2)[1:-1]
    worst, where = -math.inf, None
    for t in pts:
        svals = pts[pts < t]
        if svals.size == 0:
            continue
        vals = np.array([f_closed_form(spec, float(s), float(t)) for s in svals]) - sharp
        idx = int(np.argmax(vals))
        if vals[idx] > worst:
            worst, where = float(vals[idx]), (float(svals[idx]), float(t))
    return VerificationReport(name, bool(worst <= 1e-9), worst, where,
                              f"F(s,t) - {sharp:.6g} on a {grid}x{grid} interior grid")


def _check_f_cross(max_n: int, grid: int) -> VerificationReport:
    specs = [("kalpha(0.7)", strongly_convex(0.7)), ("ucv", uniformly_convex())]
    pts = np.linspace(0.05, 0.9, 6)
    worst, where = 0.0, None
    for label, spec in specs:
        for t in pts:
            for s in pts[pts < t]:
                rb = circle_sup(spec, float(s))
                closed = f_closed_form(spec, float(s), float(t))
                rel = abs(f_value(spec, float(s), float(t), rb) - closed) / max(1.0, abs(closed))
                if rel > worst:
                    worst, where = rel, (label, float(s), float(t))
    return VerificationReport("f_formula_cross_check", bool(worst <= 1e-6), worst, where,
                              "sampled F vs closed-form F, relative, s,t in [0.05,0.9]")


def _make_f_bound_check(alpha: float | None):
    if alpha is None:
        return lambda max_n, grid: _f_bound_sweep("f_bound_ucv", uniformly_convex(),
                                                  8.0 / math.pi**2, grid)
    return lambda max_n, grid: _f_bound_sweep(f"f_bound_kalpha_alpha={alpha}",
                                              strongly_convex(alpha), 2.0 * alpha, grid)


def _make_suita_check(a: float):
    return lambda max_n, grid: suita_check(a, grid=max(grid, 16))


def _make_nonneg_check(name: str, specs_fn, series_fn):
    return lambda max_n, grid: _sweep_nonneg(name, specs_fn(), 200, series_fn)


# Fixed, deterministic catalogue: (name, group, thunk(max_n, grid) -> report).
_CHECKS: list[tuple[str, str, Callable[[int, int], VerificationReport]]] = [
    ("triple_sum_bound", "sum", _check_triple_sum),
    ("pair_sum_bound", "sum", _check_pair_sum),
    ("pair_sum_cross_check", "sum", _check_pair_sum_cross),
    ("inner_inequality", "sum", _check_inner_inequality),
    ("generator_coeffs_nonneg_kalpha", "nonneg",
     _make_nonneg_check("generator_coeffs_nonneg_kalpha", _kalpha_specs, phi_series)),
    ("curvature_defect_nonneg_kalpha", "nonneg",
     _make_nonneg_check("curvature_defect_nonneg_kalpha", _kalpha_specs, q_series)),
    ("generator_coeffs_nonneg_ucv", "nonneg",
     _make_nonneg_check("generator_coeffs_nonneg_ucv",
                        lambda: [("ucv", uniformly_convex())], phi_series)),
    ("curvature_defect_nonneg_ucv", "nonneg",
     _make_nonneg_check("curvature_defect_nonneg_ucv",
                        lambda: [("ucv", uniformly_convex())], q_series)),
    ("convexity_coefficient_cap", "loewner", _check_coefficient_cap),
    ("h_zero_and_increasing", "h", _check_h_monotone),
    ("g_lower_bound", "glower", _check_g_lower_bound),
] + [
    (f"f_bound_kalpha_alpha={a}", "fbound", _make_f_bound_check(a)) for a in _F_BOUND_ALPHAS
] + [
    ("f_bound_ucv", "fbound", _make_f_bound_check(None)),
    ("f_formula_cross_check", "cross", _check_f_cross),
] + [
    (f"suita_half_plane_a={a}", "suita", _make_suita_check(a)) for a in _SUITA_ORDERS
]


def lemma_names() -> tuple[str, ...]:
    seen = dict.fromkeys(group for _, group, _ in _CHECKS)
    return tuple(seen)


def run_all(max_n: int = 1000, grid: int = 100) -> list[VerificationReport]:
    """Run every check in the fixed catalogue order and collect the reports.

    ``max_n`` drives the sum sweeps (the double-sum bound runs to 10 max_n);
    ``grid`` sets both the F-sweep resolution and the half-plane n_phi grid.
    """
    return [thunk(max_n, grid) for _, _, thunk in _CHECKS]


def run_selected(lemma: str, max_n: int = 1000, grid: int = 100) -> list[VerificationReport]:
    """Run only the checks belonging to one named group."""
    if lemma not in lemma_names():
        raise DomainError(f"unknown lemma group {lemma!r}; choose from {sorted(lemma_names())}")
    return [thunk(max_n, grid) for _, group, thunk in _CHECKS if group == lemma]
