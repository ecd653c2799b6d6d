import numpy as np
import pytest

from schwarznorm import ComplexSeries, mul


def assert_series_close(a: ComplexSeries, b: ComplexSeries, tol: float = 1e-12,
                        orders: int | None = None) -> None:
    """Coefficient-wise closeness up to the shared order, relative to the scale."""
    n = min(a.order, b.order) if orders is None else orders
    da, db = a.coeffs[: n + 1], b.coeffs[: n + 1]
    scale = max(1.0, float(np.abs(da).max()), float(np.abs(db).max()))
    worst = float(np.max(np.abs(da - db)))
    assert worst <= tol * scale, f"series differ by {worst:.3e} (scale {scale:.3e})"


def compose_poly(outer: ComplexSeries, inner: ComplexSeries) -> ComplexSeries:
    """Polynomial substitution oracle: outer is exact, no inner-constant restriction."""
    acc = ComplexSeries(np.zeros(inner.order + 1, dtype=complex))
    for c in outer.coeffs[::-1]:
        acc = mul(acc, inner) + complex(c)
    return acc


def random_series(rng: np.random.Generator, order: int, scale: float = 1.0,
                  zero_constant: bool = False) -> ComplexSeries:
    re = rng.uniform(-scale, scale, order + 1)
    im = rng.uniform(-scale, scale, order + 1)
    coeffs = re + 1j * im
    if zero_constant:
        coeffs[0] = 0.0
    return ComplexSeries(coeffs)


@pytest.fixture
def rng() -> np.random.Generator:
    return np.random.default_rng(20260808)
