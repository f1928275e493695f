"""Principal branch of the Lambert W function on x > 0."""

from __future__ import annotations

import numpy as np

from ..errors import NonPositiveArgument


def lambert_w(x: float) -> float:
    """Solve w e^w = x for x > 0 (principal branch), ~1e-15 relative.

    Halley iteration from a two-regime initial guess; x > 0 keeps the
    iteration away from the branch point at -1/e, so convergence is
    quadratic-plus from the start.
    """
    if x <= 0.0:
        raise NonPositiveArgument(f"lambert_w requires x > 0, got {x}")
    if x < 3.0:
        w = np.log1p(x) * (1.0 - np.log1p(np.log1p(x)) / (2.0 + np.log1p(x)))
    else:
        lx = np.log(x)
        w = lx - np.log(lx)
    for _ in range(60):
        e = np.exp(w)
        f = w * e - x
        step = f / (e * (w + 1.0) - (w + 2.0) * f / (2.0 * w + 2.0))
        w -= step
        if abs(step) <= 2e-16 * (1.0 + abs(w)):
            break
    return float(w)
