"""Truncated Taylor-series (jet) arithmetic in one variable.

A jet stores the Taylor coefficients ``f^(m)(x0)/m!`` of a function at a
base point up to a fixed truncation order.  Products are Cauchy products
truncated at that order, and elementary functions are applied through the
standard power-series recurrences, so every coefficient of a composite
expression is exact up to rounding.  This is what feeds derivative-hungry
Riccati recursions without any finite differencing.

Coefficients are stored scaled by 1/m! (not raw derivatives) to keep high
orders in range.  The supported maximum order is :data:`MAX_ORDER`.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import (
    BasePointMismatch,
    DivisionBySingularJet,
    OrderTooHigh,
    SingularComposition,
    ZeroOrder,
)

MAX_ORDER = 24


def _as_coeffs(values):
    c = np.asarray(values, dtype=float)
    if c.ndim != 1 or c.size == 0:
        raise ValueError("jet coefficients must be a non-empty 1-d array")
    if not np.all(np.isfinite(c)):
        raise ValueError("jet coefficients must be finite")
    return c


@dataclass(frozen=True)
class Jet:
    """Taylor polynomial of a function at ``base_point``.

    ``coeffs[m]`` is ``f^(m)(base_point) / m!``; the order is
    ``len(coeffs) - 1``.
    """

    base_point: float
    coeffs: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "coeffs", _as_coeffs(self.coeffs))
        if self.order > MAX_ORDER:
            raise OrderTooHigh(f"jet order {self.order} exceeds {MAX_ORDER}")

    # -- construction ---------------------------------------------------------

    @staticmethod
    def constant(value: float, base_point: float = 0.0, order: int = 0) -> "Jet":
        c = np.zeros(order + 1)
        c[0] = value
        return Jet(base_point, c)

    @staticmethod
    def variable(base_point: float, order: int) -> "Jet":
        """Jet of the identity function x at ``base_point``."""
        if order < 0:
            raise ValueError("order must be >= 0")
        c = np.zeros(order + 1)
        c[0] = base_point
        if order >= 1:
            c[1] = 1.0
        return Jet(base_point, c)

    # -- basic queries ---------------------------------------------------------

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    @property
    def value(self) -> float:
        return float(self.coeffs[0])

    def deriv(self, m: int = 1) -> float:
        """m-th derivative value at the base point."""
        if m > self.order:
            raise ZeroOrder(f"jet of order {self.order} has no derivative {m}")
        from math import factorial

        return float(self.coeffs[m]) * factorial(m)

    def truncate(self, order: int) -> "Jet":
        if order > self.order:
            raise OrderTooHigh(
                f"cannot extend jet of order {self.order} to {order}")
        return Jet(self.base_point, self.coeffs[: order + 1].copy())

    def __call__(self, x: float) -> float:
        """Evaluate the Taylor polynomial at x (no remainder control)."""
        return float(np.polyval(self.coeffs[::-1], x - self.base_point))

    # -- ring operations --------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, Jet):
            if other.base_point != self.base_point:
                raise BasePointMismatch(
                    f"base points differ: {self.base_point} vs {other.base_point}")
            if other.order != self.order:
                n = min(self.order, other.order)
                return self.truncate(n), other.truncate(n)
            return self, other
        return self, Jet.constant(float(other), self.base_point, self.order)

    def __add__(self, other):
        a, b = self._coerce(other)
        return Jet(a.base_point, a.coeffs + b.coeffs)

    __radd__ = __add__

    def __neg__(self):
        return Jet(self.base_point, -self.coeffs)

    def __sub__(self, other):
        a, b = self._coerce(other)
        return Jet(a.base_point, a.coeffs - b.coeffs)

    def __rsub__(self, other):
        return (-self).__add__(other)

    def __mul__(self, other):
        if not isinstance(other, Jet):
            return Jet(self.base_point, self.coeffs * float(other))
        a, b = self._coerce(other)
        n = a.order
        return Jet(a.base_point, np.convolve(a.coeffs, b.coeffs)[: n + 1])

    __rmul__ = __mul__

    def __truediv__(self, other):
        if not isinstance(other, Jet):
            return Jet(self.base_point, self.coeffs / float(other))
        a, b = self._coerce(other)
        if b.coeffs[0] == 0.0:
            raise DivisionBySingularJet("divisor jet has zero constant term")
        n = a.order
        c = np.zeros(n + 1)
        for m in range(n + 1):
            acc = a.coeffs[m] - np.dot(c[:m], b.coeffs[m:0:-1])
            c[m] = acc / b.coeffs[0]
        return Jet(a.base_point, c)

    def __rtruediv__(self, other):
        return Jet.constant(float(other), self.base_point, self.order) / self

    # -- calculus ----------------------------------------------------------------

    def derivative(self) -> "Jet":
        """Jet of f' at the same base point, order reduced by one."""
        if self.order < 1:
            raise ZeroOrder("cannot differentiate an order-0 jet")
        m = np.arange(1, self.order + 1)
        return Jet(self.base_point, self.coeffs[1:] * m)


# -- elementary functions ----------------------------------------------------------


def exp(a: Jet) -> Jet:
    n = a.order
    b = np.zeros(n + 1)
    b[0] = np.exp(a.coeffs[0])
    for m in range(1, n + 1):
        j = np.arange(1, m + 1)
        b[m] = np.dot(j * a.coeffs[1: m + 1], b[m - 1:: -1][: m]) / m
    return Jet(a.base_point, b)


def log(a: Jet) -> Jet:
    if a.coeffs[0] <= 0.0:
        raise SingularComposition("log of a jet with non-positive value")
    n = a.order
    b = np.zeros(n + 1)
    b[0] = np.log(a.coeffs[0])
    for m in range(1, n + 1):
        j = np.arange(1, m)
        acc = m * a.coeffs[m]
        if m > 1:
            acc -= np.dot(j * b[1:m], a.coeffs[m - 1: 0: -1])
        b[m] = acc / (m * a.coeffs[0])
    return Jet(a.base_point, b)


def power(a: Jet, r: float) -> Jet:
    """Jet of a(t)**r; requires a positive leading value."""
    if a.coeffs[0] <= 0.0:
        raise SingularComposition("power of a jet with non-positive value")
    n = a.order
    b = np.zeros(n + 1)
    b[0] = a.coeffs[0] ** r
    for m in range(1, n + 1):
        j = np.arange(0, m)
        w = r * (m - j) - j
        b[m] = np.dot(w * b[:m], a.coeffs[m:0:-1]) / (m * a.coeffs[0])
    return Jet(a.base_point, b)


def sqrt(a: Jet) -> Jet:
    return power(a, 0.5)


def _cosh_sinh(a: Jet):
    n = a.order
    c = np.zeros(n + 1)
    s = np.zeros(n + 1)
    c[0] = np.cosh(a.coeffs[0])
    s[0] = np.sinh(a.coeffs[0])
    for m in range(1, n + 1):
        j = np.arange(1, m + 1)
        ja = j * a.coeffs[1: m + 1]
        c[m] = np.dot(ja, s[m - 1:: -1][: m]) / m
        s[m] = np.dot(ja, c[m - 1:: -1][: m]) / m
    return Jet(a.base_point, c), Jet(a.base_point, s)


def cosh(a: Jet) -> Jet:
    return _cosh_sinh(a)[0]


def sinh(a: Jet) -> Jet:
    return _cosh_sinh(a)[1]


def tanh(a: Jet) -> Jet:
    c, s = _cosh_sinh(a)
    return s / c


_ELEMENTARY = {
    "exp": exp,
    "log": log,
    "sqrt": sqrt,
    "cosh": cosh,
    "sinh": sinh,
    "tanh": tanh,
}


def apply_elementary(a: Jet, fn: str, r: float | None = None) -> Jet:
    """Apply a named elementary function (``pow`` takes the exponent r)."""
    if fn == "pow":
        if r is None:
            raise ValueError("pow requires an exponent")
        return power(a, r)
    try:
        return _ELEMENTARY[fn](a)
    except KeyError:
        raise ValueError(f"unknown elementary function {fn!r}") from None


def divide_by_increment(a: Jet) -> Jet:
    """Jet of f(t)/(t - base_point) for a jet with vanishing constant term.

    Exact coefficient shift; the constant term must already be zero (it is
    checked against the next coefficient's scale).
    """
    scale = max(np.max(np.abs(a.coeffs)), 1.0)
    if abs(a.coeffs[0]) > 1e-13 * scale:
        raise SingularComposition(
            "cannot divide by the increment: constant term is not zero")
    return Jet(a.base_point, a.coeffs[1:].copy())
