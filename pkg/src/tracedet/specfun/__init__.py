"""Self-contained special-function kernel.

Modified Bessel functions of real and purely imaginary order, complete and
incomplete elliptic integrals, Lambert W, and log-gamma - everything the
determinant and trace-identity machinery needs, with explicit accuracy
contracts and log-scaled variants where values leave double range.
"""

from .bessel import BesselOrder, bessel_i_reim, bessel_k, bessel_k_log
from .elliptic import EllipticPair, elliptic_complete, elliptic_incomplete
from .gammafn import log_gamma, log_gamma_complex
from .lambertw import lambert_w

__all__ = [
    "BesselOrder",
    "EllipticPair",
    "bessel_i_reim",
    "bessel_k",
    "bessel_k_log",
    "elliptic_complete",
    "elliptic_incomplete",
    "lambert_w",
    "log_gamma",
    "log_gamma_complex",
]
