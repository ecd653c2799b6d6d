"""Truncated complex power-series arithmetic about the origin.

A :class:`ComplexSeries` holds the Taylor coefficients of an analytic
function f(z) = c0 + c1 z + ... + cN z^N known through a fixed order N.
Binary operations truncate the result to the smaller operand order, so no
unknown tail coefficient is ever fabricated; callers that need longer
output must :func:`pad` the operands first.

Series are immutable after construction and every operation here is a
pure function, so values can be shared freely between threads.
"""

from __future__ import annotations

import cmath
from pathlib import Path
from typing import Iterable, Sequence

import numpy as np

from .errors import (
    BranchPointError,
    CompositionDomainError,
    CriticalPointError,
    DegenerateOrderError,
    FileFormatError,
    NonInvertibleError,
)

# Default truncation order used by the command line front end.  Verified
# coefficient identities only need single digits of order; 96 leaves ample
# margin for norm sampling on |z| <= 0.9 where the tail is ~0.9**96.
DEFAULT_ORDER = 96


class ComplexSeries:
    """Immutable truncated Taylor expansion about 0.

    ``coeffs[n]`` is the coefficient of z**n; ``order`` is the highest
    retained power, ``len(coeffs) - 1``.  Coefficients are stored as
    binary64 complex numbers and must all be finite.
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Sequence[complex] | Iterable[complex] | np.ndarray):
        arr = np.array(list(coeffs) if not isinstance(coeffs, np.ndarray) else coeffs,
                       dtype=np.complex128)
        if arr.ndim != 1 or arr.size == 0:
            raise ValueError("a series needs a one-dimensional, non-empty coefficient list")
        if not np.all(np.isfinite(arr.real) & np.isfinite(arr.imag)):
            raise ValueError("series coefficients must be finite")
        arr.flags.writeable = False
        self._coeffs = arr

    @property
    def coeffs(self) -> np.ndarray:
        """Read-only coefficient array (index n = coefficient of z**n)."""
        return self._coeffs

    @property
    def order(self) -> int:
        return self._coeffs.size - 1

    def __getitem__(self, n: int) -> complex:
        return complex(self._coeffs[n])

    def __call__(self, z: complex) -> complex:
        return evaluate(self, z)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ComplexSeries):
            return NotImplemented
        return self._coeffs.shape == other._coeffs.shape and bool(
            np.all(self._coeffs == other._coeffs)
        )

    def __hash__(self) -> int:
        return hash(self._coeffs.tobytes())

    def __neg__(self) -> "ComplexSeries":
        return ComplexSeries(-self._coeffs)

    def __add__(self, other: "ComplexSeries | complex") -> "ComplexSeries":
        if isinstance(other, ComplexSeries):
            return add(self, other)
        out = self._coeffs.copy()
        out[0] += other
        return ComplexSeries(out)

    __radd__ = __add__

    def __sub__(self, other: "ComplexSeries | complex") -> "ComplexSeries":
        return self + (-other if isinstance(other, ComplexSeries) else -complex(other))

    def __rsub__(self, other: complex) -> "ComplexSeries":
        return (-self) + other

    def __mul__(self, other: "ComplexSeries | complex") -> "ComplexSeries":
        if isinstance(other, ComplexSeries):
            return mul(self, other)
        return ComplexSeries(self._coeffs * other)

    __rmul__ = __mul__

    def __repr__(self) -> str:
        head = np.array2string(self._coeffs[:4], precision=6, separator=", ")
        tail = "" if self.order < 4 else f" ... (order {self.order})"
        return f"ComplexSeries({head}{tail})"


def add(a: ComplexSeries, b: ComplexSeries) -> ComplexSeries:
    """Coefficient-wise sum, truncated to the smaller operand order."""
    n = min(a.order, b.order) + 1
    return ComplexSeries(a.coeffs[:n] + b.coeffs[:n])


def mul(a: ComplexSeries, b: ComplexSeries) -> ComplexSeries:
    """Cauchy product, truncated to the smaller operand order."""
    n = min(a.order, b.order) + 1
    return ComplexSeries(np.convolve(a.coeffs[:n], b.coeffs[:n])[:n])


def derivative(a: ComplexSeries) -> ComplexSeries:
    """Term-wise derivative; the order drops by one."""
    if a.order < 1:
        raise DegenerateOrderError("cannot differentiate an order-0 series")
    return ComplexSeries(a.coeffs[1:] * np.arange(1, a.order + 1))


def integrate(a: ComplexSeries) -> ComplexSeries:
    """Term-wise antiderivative with constant term 0; the order grows by one."""
    out = np.zeros(a.order + 2, dtype=np.complex128)
    out[1:] = a.coeffs / np.arange(1, a.order + 2)
    return ComplexSeries(out)


def reciprocal(a: ComplexSeries) -> ComplexSeries:
    """Multiplicative inverse up to the truncation order.

    Solves mul(a, b) = 1 coefficient by coefficient; requires a nonzero
    constant term.
    """
    c = a.coeffs
    if c[0] == 0:
        raise NonInvertibleError("series with vanishing constant term has no reciprocal")
    out = np.zeros(c.size, dtype=np.complex128)
    out[0] = 1.0 / c[0]
    for n in range(1, c.size):
        out[n] = -np.dot(c[1 : n + 1], out[n - 1 :: -1]) / c[0]
    return ComplexSeries(out)


def exp_series(a: ComplexSeries) -> ComplexSeries:
    """exp composed with the series, via the recurrence b' = a'b, b(0) = exp(a0).

    The constant term may be nonzero; its principal exponential scales the
    whole result.
    """
    c = a.coeffs
    out = np.zeros(c.size, dtype=np.complex128)
    out[0] = cmath.exp(complex(c[0]))
    weighted = c * np.arange(c.size)
    for n in range(1, c.size):
        out[n] = np.dot(weighted[1 : n + 1], out[n - 1 :: -1]) / n
    return ComplexSeries(out)


def log_series(a: ComplexSeries) -> ComplexSeries:
    """Inverse of :func:`exp_series`: b with exp_series(b) = a up to truncation.

    Uses the principal logarithm of the constant term, which therefore must
    not vanish.
    """
    c = a.coeffs
    if c[0] == 0:
        raise BranchPointError("logarithm of a series with vanishing constant term")
    out = np.zeros(c.size, dtype=np.complex128)
    out[0] = cmath.log(complex(c[0]))
    for n in range(1, c.size):
        acc = n * c[n]
        if n > 1:
            weighted = out[1:n] * np.arange(1, n)
            acc -= np.dot(weighted, c[n - 1 : 0 : -1])
        out[n] = acc / (n * c[0])
    return ComplexSeries(out)


def pow_series(a: ComplexSeries, gamma: float) -> ComplexSeries:
    """Principal-branch fractional power exp_series(gamma * log_series(a))."""
    return exp_series(log_series(a) * gamma)


def compose(outer: ComplexSeries, inner: ComplexSeries) -> ComplexSeries:
    """Substitute ``inner`` into ``outer``; Horner accumulation in the series ring.

    The inner constant term must vanish, otherwise low-order coefficients of
    the result would depend on unknown tail coefficients of ``outer``.
    """
    if inner.coeffs[0] != 0:
        raise CompositionDomainError("inner series must have zero constant term")
    n = min(outer.order, inner.order) + 1
    inner_c = inner.coeffs[:n]
    acc = np.zeros(n, dtype=np.complex128)
    for c in outer.coeffs[n - 1 :: -1]:
        acc = np.convolve(acc, inner_c)[:n]
        acc[0] += c
    return ComplexSeries(acc)


def evaluate(a: ComplexSeries, z: complex) -> complex:
    """Horner evaluation of the truncated polynomial at a point.

    Meaningful for |z| < 1 where the truncation tail is controlled; no hard
    domain check is made.
    """
    total = 0j
    zc = complex(z)
    for c in a.coeffs[::-1]:
        total = total * zc + c
    return total


def schwarzian(f: ComplexSeries) -> ComplexSeries:
    """Series of the Schwarzian derivative (f''/f')' - (f''/f')^2 / 2.

    Requires order at least 3 and a nonzero linear coefficient (f'(0) != 0);
    the result order is order(f) - 3.
    """
    if f.order < 3:
        raise DegenerateOrderError("schwarzian needs a series of order at least 3")
    if f.coeffs[1] == 0:
        raise CriticalPointError("schwarzian requires f'(0) != 0")
    fp = derivative(f)
    u = mul(derivative(fp), reciprocal(fp))
    du = derivative(u)
    u2 = mul(u, u)
    return ComplexSeries(du.coeffs - 0.5 * u2.coeffs[: du.order + 1])


def pad(a: ComplexSeries, order: int) -> ComplexSeries:
    """Zero-extend to a higher order (declaring the tail coefficients zero)."""
    if order < a.order:
        raise ValueError(f"pad target order {order} is below current order {a.order}")
    out = np.zeros(order + 1, dtype=np.complex128)
    out[: a.order + 1] = a.coeffs
    return ComplexSeries(out)


def truncate(a: ComplexSeries, order: int) -> ComplexSeries:
    """Drop coefficients above the given order."""
    if order > a.order:
        raise ValueError(f"truncation order {order} exceeds current order {a.order}")
    return ComplexSeries(a.coeffs[: order + 1])


def write_coeff_file(path: str | Path, a: ComplexSeries) -> None:
    """Write coefficients as UTF-8 text, one "re im" pair per line (line n = z**n)."""
    lines = [f"{float(c.real)!r} {float(c.imag)!r}" for c in a.coeffs]
    Path(path).write_text("\n".join(lines) + "\n", encoding="utf-8", newline="\n")


def read_coeff_file(path: str | Path) -> ComplexSeries:
    """Read a coefficient file written in the "re im" per-line format."""
    raw = Path(path).read_text(encoding="utf-8")
    coeffs = []
    for lineno, line in enumerate(raw.splitlines()):
        stripped = line.strip()
        if not stripped:
            continue
        parts = stripped.split()
        if len(parts) != 2:
            raise FileFormatError(f"line {lineno}: expected 're im', got {line!r}")
        try:
            coeffs.append(complex(float(parts[0]), float(parts[1])))
        except ValueError as exc:
            raise FileFormatError(f"line {lineno}: not a float pair: {line!r}") from exc
    if not coeffs:
        raise FileFormatError(f"{path}: no coefficients found")
    return ComplexSeries(coeffs)
