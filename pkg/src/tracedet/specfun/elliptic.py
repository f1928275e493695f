"""Complete and incomplete elliptic integrals.

Conventions: the modulus k is passed everywhere (never the parameter
m = k^2).  Complete integrals use the arithmetic-geometric mean; incomplete
ones go through Carlson symmetric forms with the duplication theorem
(boost-style termination criteria).
"""

from __future__ import annotations

from typing import NamedTuple

import numpy as np

from ..errors import ModulusOutOfRange, PhiOutOfRange


class EllipticPair(NamedTuple):
    """Value pair (first kind, second kind); F/E or K/E depending on context."""

    first_kind: float
    second_kind: float

    @property
    def K(self) -> float:
        return self.first_kind

    @property
    def F(self) -> float:
        return self.first_kind

    @property
    def E(self) -> float:
        return self.second_kind


def _check_modulus(k: float) -> float:
    if not (0.0 <= k < 1.0):
        raise ModulusOutOfRange(f"modulus must satisfy 0 <= k < 1, got {k}")
    return float(k)


def elliptic_complete(k: float) -> EllipticPair:
    """K(k) and E(k) by the AGM; relative error below 1e-13 for k in [0, 1)."""
    k = _check_modulus(k)
    a, b, c = 1.0, np.sqrt(1.0 - k * k), k
    csum = 0.5 * c * c
    pow2 = 1.0
    for _ in range(60):
        if abs(c) <= 1e-17 * a:
            break
        a, b, c = 0.5 * (a + b), np.sqrt(a * b), 0.5 * (a - b)
        pow2 *= 2.0
        csum += 0.5 * pow2 * c * c
    K = np.pi / (2.0 * a)
    E = K * (1.0 - csum)
    return EllipticPair(float(K), float(E))


def _carlson_rf(x: float, y: float, z: float) -> float:
    A = (x + y + z) / 3.0
    Q = (3.0 * 2.22e-16) ** (-1.0 / 8.0) * max(abs(A - x), abs(A - y), abs(A - z))
    f = 1.0
    while Q >= abs(A) * f:
        sx, sy, sz = np.sqrt(x), np.sqrt(y), np.sqrt(z)
        lam = sx * sy + sx * sz + sy * sz
        x, y, z, A = (x + lam) / 4, (y + lam) / 4, (z + lam) / 4, (A + lam) / 4
        f *= 4.0
    # (A0 - x0)/4^n == A_n - x_n, so the scaled deviations need no history
    X = 1.0 - x / A
    Y = 1.0 - y / A
    Z = -(X + Y)
    E2 = X * Y - Z * Z
    E3 = X * Y * Z
    return (1.0 + E3 * (1.0 / 14 +3 * E3 / 104)
            + E2 * (-0.1 + E2 / 24 - 3 * E3 / 44 - 5 * E2 * E2 / 208
                    + E2 * E3 / 16)) / np.sqrt(A)


def _carlson_rd(x: float, y: float, z: float) -> float:
    A = (x + y + 3.0 * z) / 5.0
    Q = (2.22e-16 / 4.0) ** (-1.0 / 8.0) * max(abs(A - x), abs(A - y),
                                               abs(A - z)) * 1.2
    f = 1.0
    s = 0.0
    while Q >= abs(A) * f:
        sx, sy, sz = np.sqrt(x), np.sqrt(y), np.sqrt(z)
        lam = sx * sy + sx * sz + sy * sz
        s += (1.0 / f) / (sz * (z + lam))
        f *= 4.0
        x, y, z, A = (x + lam) / 4, (y + lam) / 4, (z + lam) / 4, (A + lam) / 4
    X = 1.0 - x / A
    Y = 1.0 - y / A
    Z = -(X + Y) / 3.0
    E2 = X * Y - 6 * Z * Z
    E3 = (3 * X * Y - 8 * Z * Z) * Z
    E4 = 3 * (X * Y - Z * Z) * Z * Z
    E5 = X * Y * Z * Z * Z
    series = (1 - 3 * E2 / 14 + E3 / 6 + 9 * E2 * E2 / 88 - 3 * E4 / 22
              - 9 * E2 * E3 / 52 + 3 * E5 / 26 - E2 ** 3 / 16
              + 3 * E3 * E3 / 40 + 3 * E2 * E4 / 20 + 45 * E2 * E2 * E3 / 272
              - 9 * (E3 * E4 + E2 * E5) / 68)
    return 3.0 * s + series / (f * A * np.sqrt(A))


def elliptic_incomplete(phi: float, k: float) -> EllipticPair:
    """F(phi, k) and E(phi, k) for |phi| < pi/2; odd in phi."""
    k = _check_modulus(k)
    if not (-np.pi / 2 < phi < np.pi / 2):
        raise PhiOutOfRange(f"amplitude must satisfy |phi| < pi/2, got {phi}")
    if phi == 0.0:
        return EllipticPair(0.0, 0.0)
    s = np.sin(phi)
    c2 = np.cos(phi) ** 2
    w = 1.0 - (k * s) ** 2
    rf = _carlson_rf(c2, w, 1.0)
    rd = _carlson_rd(c2, w, 1.0)
    F = s * rf
    E = s * rf - (k * k) * s ** 3 * rd / 3.0
    return EllipticPair(float(F), float(E))
