r"""Potential models and their phase integrals.

Three concrete potentials are supported:

====================  =====================  ==========================
name                  q(x)                   spectral parameter map
====================  =====================  ==========================
``cosh``              2 cosh 2x (full line)  lambda = 2 - nu^2
``exp``               e^{2x}   (half line)   lambda = -nu^2
``harmonic``          x^2      (full line)   lambda = -nu^2
====================  =====================  ==========================

The phase integral ``int_0^x sqrt(q(s) - lambda) ds`` has a closed form for
each model; every closed form is validated against adaptive quadrature when
first constructed and silently degrades to quadrature (with a recorded
diagnostic) if the validation ever fails.

For ``cosh`` the closed form used here is

    nu (F(phi,k) - E(phi,k)) + tanh(x) sqrt(nu^2 - 2 + 2 cosh 2x),
    phi = arcsin(tanh x),  k^2 = (nu^2 - 4)/nu^2,

whose x-derivative reproduces sqrt(nu^2 + 4 sinh^2 x) exactly via
nu^2 sech^2 x + 4 tanh^2 x = sech^2 x (nu^2 + 4 sinh^2 x).  (Tabulated
versions of this antiderivative sometimes carry x/2 in place of x in the
amplitude; that variant fails the derivative check.)
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.integrate import quad

from . import jets
from .errors import ModulusOutOfRange, TracedetError
from .jets import Jet
from .specfun import elliptic_complete, elliptic_incomplete

_MODEL_NAMES = ("cosh", "exp", "harmonic")


@dataclass(frozen=True)
class PotentialModel:
    """One of the three concrete potentials; immutable and shareable."""

    name: str

    def __post_init__(self):
        if self.name not in _MODEL_NAMES:
            raise ValueError(
                f"unknown model {self.name!r}; valid models: {_MODEL_NAMES}")

    # -- domain ----------------------------------------------------------------

    @property
    def half_line(self) -> bool:
        return self.name == "exp"

    @property
    def shift(self) -> float:
        """lambda = shift - nu^2."""
        return 2.0 if self.name == "cosh" else 0.0

    @property
    def q_min(self) -> float:
        """Infimum of q over the domain."""
        return {"cosh": 2.0, "exp": 1.0, "harmonic": 0.0}[self.name]

    # -- potential values --------------------------------------------------------

    def q(self, x):
        if self.name == "cosh":
            return 2.0 * np.cosh(2.0 * x)
        if self.name == "exp":
            return np.exp(2.0 * x)
        return x * x

    def dq(self, x):
        if self.name == "cosh":
            return 4.0 * np.sinh(2.0 * x)
        if self.name == "exp":
            return 2.0 * np.exp(2.0 * x)
        return 2.0 * x

    def q_jet(self, x: float, order: int) -> Jet:
        """Jet of q at x (orders up to jets.MAX_ORDER)."""
        X = Jet.variable(float(x), order)
        if self.name == "cosh":
            return 2.0 * jets.cosh(2.0 * X)
        if self.name == "exp":
            return jets.exp(2.0 * X)
        return X * X

    # -- spectral parameter map ---------------------------------------------------

    def nu_from_lambda(self, lam: float) -> float:
        arg = self.shift - lam
        if arg < 0:
            raise ValueError(
                f"lambda={lam} above the {self.name} map range (shift {self.shift})")
        return float(np.sqrt(arg))

    def lambda_from_nu(self, nu: float) -> float:
        return self.shift - nu * nu


def get_model(name) -> PotentialModel:
    if isinstance(name, PotentialModel):
        return name
    return PotentialModel(str(name))


# -- closed-form antiderivatives -------------------------------------------------


def _closed_form_exp(nu, x):
    def A(s):
        r = np.sqrt(nu * nu + np.exp(2.0 * s))
        return r + nu * s - nu * np.log(nu + r)

    return A(x) - A(0.0)


def _closed_form_cosh(nu, x):
    if nu <= 2.0:
        raise ModulusOutOfRange(
            f"cosh closed form needs nu > 2 (got {nu}): k^2 = (nu^2-4)/nu^2")
    k = np.sqrt(nu * nu - 4.0) / nu
    phi = np.arcsin(np.tanh(x))
    pair = elliptic_incomplete(phi, k)
    boundary = np.tanh(x) * np.sqrt(nu * nu - 2.0 + 2.0 * np.cosh(2.0 * x))
    return nu * (pair.F - pair.E) + boundary


def _closed_form_harmonic(nu, x):
    if nu == 0.0:
        return 0.5 * x * abs(x)
    return 0.5 * (x * np.sqrt(x * x + nu * nu)
                  + nu * nu * np.arcsinh(x / nu))


_CLOSED_FORMS = {
    "exp": _closed_form_exp,
    "cosh": _closed_form_cosh,
    "harmonic": _closed_form_harmonic,
}

# closed forms already validated against quadrature, keyed by model name
_VALIDATED: set[str] = set()


class PhaseIntegral:
    """Antiderivative of sqrt(q(x) - lambda) vanishing at x = 0.

    Parameters
    ----------
    model : PotentialModel or str
    nu : float
        Spectral parameter, lambda = shift - nu^2.
    method : {'auto', 'closed_form', 'quadrature'}
        'auto' prefers the closed form and falls back to quadrature when the
        closed form is unavailable (cosh with nu <= 2) or fails validation.

    Attributes
    ----------
    method : str
        The method actually in use after validation.
    diagnostic : str or None
        Set when a requested closed form was demoted to quadrature.
    """

    _SAMPLE_POINTS = (0.37, 0.9, 1.6, 2.4, 3.1)

    def __init__(self, model, nu: float, method: str = "auto",
                 quad_tol: float = 1e-12):
        self.model = get_model(model)
        self.nu = float(nu)
        self.quad_tol = float(quad_tol)
        self.diagnostic = None
        if nu < 0 or (nu <= 0 and self.model.name != "harmonic"):
            raise ValueError("nu must be positive")
        if method not in ("auto", "closed_form", "quadrature"):
            raise ValueError(f"unknown method {method!r}")

        if method == "quadrature":
            self.method = "quadrature"
            return
        closed_ok = not (self.model.name == "cosh" and self.nu <= 2.0)
        if not closed_ok:
            if method == "closed_form":
                raise ModulusOutOfRange(
                    f"cosh closed form requires nu > 2, got {self.nu}")
            self.method = "quadrature"
            self.diagnostic = "closed form unavailable for nu <= 2"
            return
        self.method = "closed_form"
        self._validate()

    # -- evaluation -------------------------------------------------------------

    def _quadrature(self, x):
        lam = self.model.lambda_from_nu(self.nu)
        val, err = quad(lambda s: np.sqrt(self.model.q(s) - lam), 0.0, x,
                        epsabs=self.quad_tol, epsrel=self.quad_tol, limit=400)
        return val

    def _closed(self, x):
        return _CLOSED_FORMS[self.model.name](self.nu, x)

    def __call__(self, x: float) -> float:
        if self.method == "closed_form":
            return float(self._closed(x))
        return float(self._quadrature(x))

    def _validate(self):
        key = self.model.name
        if key in _VALIDATED:
            return
        for x in self._SAMPLE_POINTS:
            want = self._quadrature(x)
            got = self._closed(x)
            if abs(got - want) > 1e-9 * max(1.0, abs(want)):
                self.method = "quadrature"
                self.diagnostic = (
                    f"closed form failed validation at x={x}: "
                    f"{got!r} vs quadrature {want!r}")
                return
        _VALIDATED.add(key)


def phase_integral(model, nu: float, x: float, method: str = "auto") -> float:
    """int_0^x sqrt(q(s) - lambda) ds with lambda = shift - nu^2."""
    return PhaseIntegral(model, nu, method=method)(x)


def phase_integral_limit(model, nu: float) -> float:
    """Finite part of the phase integral at x -> +infinity.

    cosh: lim (int_0^x - e^x) = nu (K(k) - E(k)) for nu > 2 (quadrature
    continuation otherwise); exp: int_0^inf (sqrt(e^{2x}+nu^2) - e^x) dx in
    closed form.  Divergent for the harmonic model.
    """
    model = get_model(model)
    if model.name == "exp":
        r = np.sqrt(nu * nu + 1.0)
        return float(1.0 - r + nu * np.log(nu + r))
    if model.name == "cosh":
        if nu > 2.0:
            k = np.sqrt(nu * nu - 4.0) / nu
            pair = elliptic_complete(k)
            return float(nu * (pair.K - pair.E))

        def stable_diff(s):
            # sqrt(nu^2 + 4 sinh^2 s) - e^s without cancellation at large s
            return ((nu * nu - 2.0 + np.exp(-2.0 * s))
                    / (np.sqrt(nu * nu + 4.0 * np.sinh(s) ** 2) + np.exp(s)))

        val, _ = quad(stable_diff, 0.0, 40.0, epsabs=1e-12, epsrel=1e-12,
                      limit=600)
        return float(val - 1.0)
    raise TracedetError(
        "phase-integral finite part diverges for the harmonic model")


def determinant_normalization_log(model, nu: float) -> float:
    """log C1(lambda): the solution normalization that makes determinant
    ratios equal the regularized Fredholm determinant.

    The decaying solution produced by the integrator carries the pure
    Liouville-Green normalization Q^{-1/4} exp(-int_0^x sqrt(Q)); multiplying
    by C1 renormalizes it so that, as x -> +infinity,

    - exp:      psi ~ K_nu(e^x) exactly,
    - cosh:     psi ~ sqrt(pi/(2 e^x)) exp(-e^x)  (Macdonald-type),
    - harmonic: psi ~ exp(-x^2/2) x^{(lambda-1)/2}.

    Each choice depends on lambda only through explicitly known factors, so
    ratios of boundary data at different lambda give the true determinant.
    """
    model = get_model(model)
    if model.name == "exp":
        r = np.sqrt(nu * nu + 1.0)
        return float(0.5 * np.log(np.pi / 2.0) + nu * np.log(nu + r) - r)
    if model.name == "cosh":
        return float(0.5 * np.log(np.pi / 2.0) + phase_integral_limit(model, nu))
    if nu == 0.0:
        return 0.0
    return float(nu * nu / 4.0 + (nu * nu / 2.0) * np.log(2.0 / nu))
