import cmath
import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from schwarznorm import (
    BranchPointError,
    ComplexSeries,
    CompositionDomainError,
    CriticalPointError,
    DegenerateOrderError,
    NonInvertibleError,
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
    reciprocal,
    schwarzian,
    truncate,
)
from schwarznorm.generators import g_series

from conftest import assert_series_close, compose_poly, random_series


def series(*coeffs):
    return ComplexSeries(coeffs)


def log_ratio(order):
    # log((1+z)/(1-z)) with exact coefficients 2/(2n-1) on odd powers
    out = np.zeros(order + 1, dtype=complex)
    out[1::2] = 2.0 / np.arange(1, order + 1, 2)
    return ComplexSeries(out)


# ---------------------------------------------------------------------------
# construction

def test_rejects_nonfinite_and_empty():
    with pytest.raises(ValueError):
        ComplexSeries([])
    with pytest.raises(ValueError):
        ComplexSeries([1.0, float("nan")])
    with pytest.raises(ValueError):
        ComplexSeries([1.0, complex(float("inf"), 0)])


def test_order_and_immutability():
    a = series(1, 2, 3)
    assert a.order == 2
    with pytest.raises(ValueError):
        a.coeffs[0] = 5.0


# ---------------------------------------------------------------------------
# add

def test_add_cancellation():
    assert add(series(1, 1), series(1, -1)) == series(2, 0)


def test_add_identity():
    a = series(0.5, -2.0, 3.5j)
    assert add(a, series(0, 0, 0)) == a


def test_add_direct_sum():
    assert add(series(0, 1, 1), series(0, 0, 1)) == series(0, 1, 2)


def test_add_truncates_to_min_order():
    assert add(series(1, 1, 1, 1), series(1, 1)).order == 1


# ---------------------------------------------------------------------------
# mul

def test_mul_difference_of_squares():
    a = pad(series(1, 1), 2)
    b = pad(series(1, -1), 2)
    assert mul(a, b) == series(1, 0, -1)


def test_mul_unit():
    a = series(2, 3, 4j)
    one = series(1, 0, 0)
    assert mul(a, one) == a


def test_mul_g_squared():
    # Cauchy product of the 1/(2n+1) coefficients, checked against the
    # brute-force convolution sum
    g = g_series(2)
    got = mul(g, g)
    expected = []
    for n in range(3):
        expected.append(sum(1.0 / ((2 * i + 1) * (2 * (n - i) + 1)) for i in range(n + 1)))
    assert_series_close(got, ComplexSeries(expected), 1e-15)
    assert abs(got[1] - 2.0 / 3.0) < 1e-15
    assert abs(got[2] - 23.0 / 45.0) < 1e-15


# ---------------------------------------------------------------------------
# derivative / integrate

def test_derivative_cube():
    assert derivative(series(0, 0, 0, 1)) == series(0, 0, 3)


def test_derivative_of_constant_order1():
    assert derivative(series(5, 0)) == series(0)


def test_derivative_rejects_order0():
    with pytest.raises(DegenerateOrderError):
        derivative(series(5))


def test_derivative_of_log_ratio():
    # d/dz log((1+z)/(1-z)) = 2/(1-z^2) = 2 + 2 z^2 + 2 z^4 + ...
    got = derivative(log_ratio(9))
    expected = np.zeros(9, dtype=complex)
    expected[0::2] = 2.0
    assert_series_close(got, ComplexSeries(expected), 1e-15)


def test_integrate_one():
    assert integrate(series(1)) == series(0, 1)


def test_integrate_reproduces_log_ratio():
    two_over = np.zeros(9, dtype=complex)
    two_over[0::2] = 2.0
    got = integrate(ComplexSeries(two_over))
    assert_series_close(got, log_ratio(9), 1e-15)


def test_integrate_cube():
    assert integrate(series(0, 0, 3)) == series(0, 0, 0, 1)


def test_derivative_integrate_roundtrip(rng):
    a = random_series(rng, 17)
    assert_series_close(derivative(integrate(a)), a, 1e-15)


# ---------------------------------------------------------------------------
# reciprocal

def test_reciprocal_geometric():
    got = reciprocal(pad(series(1, -1), 6))
    assert_series_close(got, ComplexSeries(np.ones(7)), 1e-15)


def test_reciprocal_involution(rng):
    a = random_series(rng, 12) + 2.0  # keep the constant term away from 0
    assert_series_close(reciprocal(reciprocal(a)), a, 1e-13)


def test_reciprocal_binomial():
    got = reciprocal(series(1, 2, 1, 0, 0))
    expected = ComplexSeries([1, -2, 3, -4, 5])
    assert_series_close(got, expected, 1e-15)


def test_reciprocal_rejects_zero_constant():
    with pytest.raises(NonInvertibleError):
        reciprocal(series(0, 1))


# ---------------------------------------------------------------------------
# exp / log / pow

def test_exp_of_zero():
    assert exp_series(series(0, 0, 0)) == series(1, 0, 0)


def test_exp_of_z():
    got = exp_series(pad(series(0, 1), 8))
    expected = ComplexSeries([1.0 / math.factorial(n) for n in range(9)])
    assert_series_close(got, expected, 1e-15)


def test_exp_log_ratio_alpha_one_is_geometric():
    # exp(log((1+z)/(1-z))) = (1+z)/(1-z) = 1 + 2z + 2z^2 + ...
    got = exp_series(log_ratio(10))
    expected = np.full(11, 2.0, dtype=complex)
    expected[0] = 1.0
    assert_series_close(got, ComplexSeries(expected), 1e-14)


def test_log_of_one():
    assert log_series(series(1, 0, 0)) == series(0, 0, 0)


def test_log_of_geometric_ratio():
    ratio = np.full(11, 2.0, dtype=complex)
    ratio[0] = 1.0
    got = log_series(ComplexSeries(ratio))
    assert_series_close(got, log_ratio(10), 1e-14)


def test_log_exp_roundtrip(rng):
    a = random_series(rng, 20)
    assert_series_close(log_series(exp_series(a)), a, 1e-12)


def test_log_rejects_zero_constant():
    with pytest.raises(BranchPointError):
        log_series(series(0, 1))


def test_pow_identity(rng):
    a = random_series(rng, 10) + 2.0
    assert_series_close(pow_series(a, 1.0), a, 1e-13)


def test_pow_half_of_ratio():
    # ((1+z)/(1-z))^(1/2) against the product of binomial expansions of
    # (1+z)^(1/2) and (1-z)^(-1/2)
    order = 12
    ratio = np.full(order + 1, 2.0, dtype=complex)
    ratio[0] = 1.0
    got = pow_series(ComplexSeries(ratio), 0.5)

    def binom_series(alpha, sign):
        coeffs, c = [1.0], 1.0
        for n in range(1, order + 1):
            c *= (alpha - n + 1) / n
            coeffs.append(c * sign**n)
        return ComplexSeries(coeffs)

    expected = mul(binom_series(0.5, 1.0), binom_series(-0.5, -1.0))
    assert_series_close(got, expected, 1e-13)
    assert abs(got[1] - 1.0) < 1e-14
    assert abs(got[2] - 0.5) < 1e-14


def test_pow_rejects_zero_constant():
    with pytest.raises(BranchPointError):
        pow_series(series(0, 1), 0.5)


# ---------------------------------------------------------------------------
# compose

def test_compose_with_identity(rng):
    a = random_series(rng, 9)
    z = ComplexSeries(np.eye(10)[1])
    assert_series_close(compose(a, z), a, 1e-15)


def test_compose_geometric_with_square():
    geo = ComplexSeries(np.ones(9))
    zsq = ComplexSeries(np.eye(9)[2])
    got = compose(geo, zsq)
    expected = np.zeros(9, dtype=complex)
    expected[0::2] = 1.0
    assert_series_close(got, ComplexSeries(expected), 1e-15)


def test_compose_rejects_nonzero_inner_constant():
    with pytest.raises(CompositionDomainError):
        compose(series(1, 1), series(1, 1))


# ---------------------------------------------------------------------------
# evaluate

def test_evaluate_linear():
    assert evaluate(series(1, 1), 0.5) == 1.5


def test_evaluate_at_zero(rng):
    a = random_series(rng, 7)
    assert evaluate(a, 0.0) == a[0]


def test_evaluate_g_partial_sum():
    got = evaluate(g_series(200), 0.5)
    # independent partial summation
    expected = sum(0.5**n / (2 * n + 1) for n in range(201))
    assert abs(got - expected) < 1e-14
    assert abs(got - 1.2464504802804612) < 1e-12


# ---------------------------------------------------------------------------
# schwarzian

def test_schwarzian_of_identity():
    got = schwarzian(ComplexSeries([0, 1, 0, 0, 0, 0]))
    assert np.max(np.abs(got.coeffs)) == 0.0


def test_schwarzian_of_koebe():
    # z/(1-z)^2 has Schwarzian -6/(1-z^2)^2 = -6 - 12 z^2 - 18 z^4 - ...
    n = 20
    koebe = ComplexSeries(np.arange(n + 1, dtype=float))
    got = schwarzian(koebe)
    expected = np.zeros(n - 2, dtype=complex)
    expected[0::2] = -6.0 * (np.arange(len(expected[0::2])) + 1)
    assert_series_close(got, ComplexSeries(expected), 1e-12)


def test_schwarzian_errors():
    with pytest.raises(DegenerateOrderError):
        schwarzian(series(0, 1, 0))
    with pytest.raises(CriticalPointError):
        schwarzian(series(0, 0, 1, 1))


# ---------------------------------------------------------------------------
# pad / truncate

def test_pad_and_truncate():
    a = series(1, 2)
    assert pad(a, 4) == series(1, 2, 0, 0, 0)
    assert truncate(pad(a, 4), 1) == a
    with pytest.raises(ValueError):
        pad(a, 0)
    with pytest.raises(ValueError):
        truncate(a, 5)


# ---------------------------------------------------------------------------
# ring axioms and analytic identities (property based)

coeff_st = st.complex_numbers(max_magnitude=1.0, allow_nan=False, allow_infinity=False)
series_st = st.lists(coeff_st, min_size=1, max_size=16).map(ComplexSeries)


@settings(max_examples=60, deadline=None, derandomize=True)
@given(series_st, series_st, series_st)
def test_ring_axioms(a, b, c):
    assert_series_close(add(a, b), add(b, a), 1e-15)
    assert_series_close(mul(a, b), mul(b, a), 1e-15)
    assert_series_close(add(add(a, b), c), add(a, add(b, c)), 1e-12)
    assert_series_close(mul(mul(a, b), c), mul(a, mul(b, c)), 1e-12)
    assert_series_close(mul(a, add(b, c)), add(mul(a, b), mul(a, c)), 1e-12)


@settings(max_examples=40, deadline=None, derandomize=True)
@given(st.lists(coeff_st, min_size=1, max_size=33).map(ComplexSeries))
def test_exp_log_inverse_pair(a):
    assert_series_close(log_series(exp_series(a)), a, 1e-10)


def _random_normalized(rng, order=12):
    k = np.arange(order + 1, dtype=float)
    scale = np.concatenate([[0.0, 1.0], 0.3 / k[2:]])
    coeffs = scale * (rng.uniform(-1, 1, order + 1) + 1j * rng.uniform(-1, 1, order + 1))
    coeffs[1] = rng.uniform(0.5, 1.2) * cmath.exp(1j * rng.uniform(0, 2 * math.pi))
    return ComplexSeries(coeffs)


def test_schwarzian_mobius_invariance(rng):
    # S(M o f) = S(f) for Mobius M(w) = (pw + q)/(rw + s); |r f_k| well below
    # |s| keeps the denominator reciprocal conditioned
    for _ in range(100):
        f = _random_normalized(rng)
        while True:
            p, q = rng.uniform(-2, 2, 2)
            r = rng.uniform(-0.15, 0.15)
            s = rng.choice([-1.0, 1.0]) * rng.uniform(1.5, 2.5)
            if abs(p * s - q * r) >= 0.3:
                break
        num = f * p + q
        den = f * r + s
        mf = mul(num, reciprocal(den))
        assert_series_close(schwarzian(mf), schwarzian(f), 1e-9)


def test_schwarzian_chain_rule_disk_automorphism(rng):
    # g(z) = (z + c)/(1 + conj(c) z) is Mobius, so S_g = 0 and
    # S_{f o g}(z) = S_f(g(z)) g'(z)^2
    order = 80
    for _ in range(100):
        # small tail keeps the critical points of f, and with them the
        # singularities of S_f, far outside the evaluation radius
        fc = np.zeros(9, dtype=complex)
        fc[1] = rng.uniform(0.5, 1.0) * cmath.exp(1j * rng.uniform(0, 2 * math.pi))
        for k in range(2, 9):
            fc[k] = (rng.uniform(-1, 1) + 1j * rng.uniform(-1, 1)) * 0.05 / k**2
        f = ComplexSeries(fc)
        c = rng.uniform(0, 0.5) * cmath.exp(1j * rng.uniform(0, 2 * math.pi))
        # series of the disk automorphism about 0
        g_coeffs = np.zeros(order + 1, dtype=complex)
        g_coeffs[0] = c
        for n in range(1, order + 1):
            g_coeffs[n] = (-c.conjugate()) ** (n - 1) * (1 - abs(c) ** 2)
        g = ComplexSeries(g_coeffs)
        h = compose_poly(f, g)
        sh = schwarzian(h)
        sf = schwarzian(pad(f, order))
        for _ in range(4):
            z = rng.uniform(0, 0.5) * cmath.exp(1j * rng.uniform(0, 2 * math.pi))
            gz = (z + c) / (1 + c.conjugate() * z)
            gprime = (1 - abs(c) ** 2) / (1 + c.conjugate() * z) ** 2
            lhs = evaluate(sh, z)
            rhs = evaluate(sf, gz) * gprime**2
            assert abs(lhs - rhs) <= 1e-8, f"chain rule off by {abs(lhs - rhs):.3e}"
