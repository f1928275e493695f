r"""Formal 1/nu expansions of the Liouville-Green log-derivative defect.

For ``Q(x, lambda) = q(x) - lambda`` the defect

    sigma = psi'/psi + Q'/(4Q) + sqrt(Q)

of the decaying solution satisfies the Riccati equation

    sigma' = -sigma^2 + (2 sqrt(Q) + Q'/(2Q)) sigma + V,
    V      = Q''/(4Q) - (5/16) (Q'/Q)^2,

and admits an asymptotic solution sigma = sum_n c_n / nu^n as nu -> infinity
whose coefficients are local expressions in q.  This module constructs those
coefficient functions for three flavors of the equation:

* the exponential half-line model in the shifted variable t = x - log(nu),
* the cosh model in the variable y defined by sinh x = (nu/2) sinh y,
* a generic pointwise-in-x expansion valid at fixed x only.

All coefficient algebra runs on jets, so derivatives entering the recursions
are exact.

A parity subtlety in the y-variable expansion: the equation's weight
``sqrt(tanh^2 y + 4 sech^2 y / nu^2)`` is the positive root, i.e. its formal
leading term is ``|tanh y|``, not ``tanh y``.  Order matching with the
positive root makes odd-index coefficients even functions of y and
even-index coefficients odd functions (they integrate to zero against any
even weight).  The reflection y -> -y maps the expansion onto the companion
expansion of the solution growing at +infinity, which is exactly what the
decaying solution turns into on the far left of an even potential.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import comb
from typing import Callable, Optional

import numpy as np

from . import jets
from .errors import EvaluationAtSingularPoint, OrderTooHigh, TracedetError
from .jets import Jet
from .potential import get_model


def _binom_half(i: int) -> float:
    """binomial(1/2, i)."""
    acc = 1.0
    for j in range(i):
        acc *= (0.5 - j) / (j + 1)
    return acc


@dataclass
class NuSeries:
    """Truncated expansion sigma ~ sum_{n=1}^{N} c_n(point)/nu^n.

    ``coeff_jets(point, order)`` returns the jets of c_1..c_N at the point;
    for the ``cosh_exact`` kind the coefficients also depend on the nu the
    series was built for (quasi-coefficients).
    """

    truncation: int
    variable: str                 # 't' | 'y' | 'x'
    kind: str                     # 'exp' | 'cosh_formal' | 'cosh_exact' | 'generic'
    nu: Optional[float] = None
    delta: float = 1e-3           # excluded window around y = 0 (formal mode)
    _build: Callable[[float, int], list[Jet]] = field(default=None, repr=False)

    def coeff_jets(self, point: float, order: int = 0) -> list[Jet]:
        if (self.kind == "cosh_formal" and self.truncation >= 4
                and abs(point) < self.delta):
            raise EvaluationAtSingularPoint(
                f"formal y-expansion is singular near y=0 (|y| < {self.delta})")
        return self._build(float(point), int(order))

    def coeff(self, n: int, point: float, order: int = 0) -> Jet:
        if not 1 <= n <= self.truncation:
            raise OrderTooHigh(f"coefficient index {n} outside 1..{self.truncation}")
        return self.coeff_jets(point, order)[n - 1]

    def values(self, point: float) -> np.ndarray:
        return np.array([j.value for j in self.coeff_jets(point, 0)])

    def partial_sum(self, point: float, nu: float, order: int = 1) -> Jet:
        """Jet of the truncated sum at the point for a concrete nu."""
        cs = self.coeff_jets(point, order)
        acc = Jet.constant(0.0, point, order)
        for n, c in enumerate(cs, start=1):
            acc = acc + c * float(nu) ** (-n)
        return acc


# ---------------------------------------------------------------------------
# exponential model, variable t = x - log(nu)
# ---------------------------------------------------------------------------


def _exp_coeffs(t: float, order: int, N: int) -> list[Jet]:
    work = order + N - 1
    T = Jet.variable(t, work)
    E = jets.exp(2.0 * T)
    one_plus = 1.0 + E
    S = jets.sqrt(one_plus)
    w = E / one_plus
    V = (4.0 * E - E * E) / (4.0 * one_plus * one_plus)
    cs = [-V / (2.0 * S)]
    for n in range(1, N):
        o = work - n  # order available for c_{n+1}
        acc = cs[-1].derivative().truncate(o) - (w * cs[-1]).truncate(o)
        for k in range(1, n):
            acc = acc + (cs[k - 1] * cs[n - k - 1]).truncate(o)
        cs.append(acc / (2.0 * S.truncate(o)))
    return [c.truncate(order) for c in cs]


def exp_sigma_series(N: int) -> NuSeries:
    """Coefficients c_n(t) for the exponential model, t = x - log(nu).

    c_1(t) = (e^{4t} - 4 e^{2t}) / (8 (1 + e^{2t})^{5/2}) and the rest follow
    from 2 sqrt(1+e^{2t}) c_{n+1} = c_n' - e^{2t}/(1+e^{2t}) c_n
    + sum_{k=1}^{n-1} c_k c_{n-k}.
    """
    if not 1 <= N <= 10:
        raise OrderTooHigh(f"exp series supports 1 <= N <= 10, got {N}")
    return NuSeries(truncation=N, variable="t", kind="exp",
                    _build=lambda p, o: _exp_coeffs(p, o, N))


# ---------------------------------------------------------------------------
# cosh model, variable y with sinh x = (nu/2) sinh y
# ---------------------------------------------------------------------------


def _cosh_base_jets(y: float, work: int):
    Y = Jet.variable(y, work)
    ch, sh = jets.cosh(Y), jets.sinh(Y)
    th = sh / ch
    V0 = th * th - 1.25 * (th * th) * (th * th)
    V2 = (2.0 - 5.0 * th * th) / (ch * ch)
    return Y, ch, sh, th, V0, V2


def _cosh_formal_coeffs(y: float, order: int, N: int) -> list[Jet]:
    if y == 0.0 and N >= 4:
        raise EvaluationAtSingularPoint("formal y-expansion singular at y=0")
    work = order + N - 1
    Y, ch, sh, th, V0, V2 = _cosh_base_jets(y, work)
    sign = 1.0 if y >= 0.0 else -1.0
    # weight sqrt(1 - k^2 sech^2 y) = |tanh y| sqrt(1 + 4/(nu^2 sinh^2 y)):
    # w_i is the nu^{-2i} coefficient, singular at y = 0 for i >= 1
    n_weights = (N - 1) // 2 + 1
    ws = []
    for i in range(n_weights):
        wi = sign * th * _binom_half(i)
        if i > 0:
            inv_sh2 = 1.0 / (sh * sh)
            for _ in range(i):
                wi = wi * (4.0 * inv_sh2)
        ws.append(wi)

    taus = [-V0 / (2.0 * ch)]
    for n in range(1, N):
        o = work - n
        acc = Jet.constant(0.0, y, o)
        for i in range(0, n // 2 + 1):
            m = n - 2 * i
            if m < 1 or i >= len(ws):
                continue
            tau_m = taus[m - 1]
            acc = acc + (ws[i] * tau_m.derivative().truncate(o)).truncate(o)
            acc = acc - (th * ws[i] * tau_m).truncate(o)
        for k in range(1, n):
            acc = acc + (taus[k - 1] * taus[n - k - 1]).truncate(o)
        if n == 2:
            acc = acc - V2.truncate(o)
        taus.append(acc / (2.0 * ch.truncate(o)))
    return [t.truncate(order) for t in taus]


def _cosh_exact_coeffs(y: float, order: int, N: int, nu: float) -> list[Jet]:
    work = order + N - 1
    Y, ch, sh, th, V0, V2 = _cosh_base_jets(y, work)
    sech2 = 1.0 / (ch * ch)
    W = jets.sqrt(th * th + (4.0 / (nu * nu)) * sech2)
    V = V0 + V2 / (nu * nu)
    taus = [-V / (2.0 * ch)]
    for n in range(1, N):
        o = work - n
        acc = (W * taus[-1].derivative().truncate(o)).truncate(o)
        acc = acc - (th * W * taus[-1]).truncate(o)
        for k in range(1, n):
            acc = acc + (taus[k - 1] * taus[n - k - 1]).truncate(o)
        taus.append(acc / (2.0 * ch.truncate(o)))
    return [t.truncate(order) for t in taus]


def _check_y_parity(series: NuSeries):
    """Coefficient n must satisfy tau_n(-y) = (-1)^{n+1} tau_n(y)."""
    for y in (0.8, 1.7):
        plus = series.coeff_jets(y, 0)
        minus = series.coeff_jets(-y, 0)
        for n, (p, m) in enumerate(zip(plus, minus), start=1):
            want = (-1.0) ** (n + 1) * p.value
            scale = max(abs(p.value), 1e-12)
            if abs(m.value - want) > 1e-9 * scale:
                raise TracedetError(
                    f"y-expansion parity violated at n={n}, y={y}: "
                    f"tau_n(-y)={m.value!r}, expected {want!r}")


def cosh_tau_series(N: int, weight_mode: str = "formal",
                    nu: Optional[float] = None, delta: float = 1e-3) -> NuSeries:
    """Coefficients tau_n(y) for the cosh model.

    weight_mode='formal' expands the equation weight in powers of 1/nu
    (coefficients singular at y = 0 from n = 4 on; evaluation inside
    |y| < delta is refused).  weight_mode='exact' keeps the weight
    sqrt(tanh^2 y + 4 sech^2 y / nu^2) as an exact scalar for the given nu,
    producing nu-dependent quasi-coefficients that are regular at y = 0.
    """
    if not 1 <= N <= 8:
        raise OrderTooHigh(f"cosh series supports 1 <= N <= 8, got {N}")
    if weight_mode == "formal":
        series = NuSeries(truncation=N, variable="y", kind="cosh_formal",
                          delta=delta,
                          _build=lambda p, o: _cosh_formal_coeffs(p, o, N))
    elif weight_mode == "exact":
        if nu is None or nu <= 0:
            raise ValueError("exact weight mode requires nu > 0")
        series = NuSeries(truncation=N, variable="y", kind="cosh_exact", nu=nu,
                          _build=lambda p, o: _cosh_exact_coeffs(p, o, N, nu))
    else:
        raise ValueError(f"unknown weight_mode {weight_mode!r}")
    _check_y_parity(series)
    return series


# ---------------------------------------------------------------------------
# generic pointwise expansion at fixed x
# ---------------------------------------------------------------------------


def _generic_coeffs(model, x: float, order: int, N: int) -> list[Jet]:
    work = order + N - 1
    qj = model.q_jet(x, work + 2)
    dq = qj.derivative()
    d2q = dq.derivative()
    b = qj.truncate(work) - model.shift
    dq = dq.truncate(work)
    d2q = d2q.truncate(work)

    b_pows = [Jet.constant(1.0, x, work)]
    for _ in range((N + 4) // 2 + 1):
        b_pows.append((b_pows[-1] * b).truncate(work))

    def V_n(n: int, o: int) -> Jet:
        # nu^{-n} coefficient of Q''/(4Q) - (5/16)(Q'/Q)^2, n even >= 2
        j = (n - 2) // 2
        term = (d2q / 4.0) * ((-1.0) ** j) * b_pows[j]
        if n >= 4:
            jj = (n - 4) // 2
            term = term - ((5.0 / 16.0) * dq * dq * float(jj + 1)
                           * ((-1.0) ** jj) * b_pows[jj])
        return term.truncate(o)

    cs = []
    # c_1 = 0 from the nu^0 matching; compute iteratively from the general rule
    for n in range(0, N):
        o = work - n
        acc = Jet.constant(0.0, x, o)
        if n >= 1:
            acc = acc + cs[n - 1].derivative().truncate(o)
            for k in range(1, n):
                acc = acc + (cs[k - 1] * cs[n - k - 1]).truncate(o)
            j = 1
            while n + 1 - 2 * j >= 1:
                beta = _binom_half(j) * b_pows[j]
                acc = acc - 2.0 * (beta * cs[n + 1 - 2 * j - 1]).truncate(o)
                j += 1
            j = 0
            while n - 2 - 2 * j >= 1:
                acc = acc - ((dq / 2.0) * ((-1.0) ** j) * b_pows[j]
                             * cs[n - 2 - 2 * j - 1]).truncate(o)
                j += 1
        if n >= 2 and n % 2 == 0:
            acc = acc - V_n(n, o)
        cs.append((0.5 * acc).truncate(o))
    return [c.truncate(order) for c in cs]


def generic_sigma_series(model, N: int, x: float) -> NuSeries:
    """Pointwise coefficients c_n(x) at fixed x, for cross-checks only.

    The expansion sqrt(Q) = nu sqrt(1 + (q(x)-shift)/nu^2) behind it is valid
    for fixed x but not uniformly in x, so partial sums are meaningful only
    at the point they were built for.
    """
    if not 1 <= N <= 10:
        raise OrderTooHigh(f"generic series supports 1 <= N <= 10, got {N}")
    model = get_model(model)
    return NuSeries(truncation=N, variable="x", kind="generic",
                    _build=lambda p, o: _generic_coeffs(model, p, o, N))


# ---------------------------------------------------------------------------
# Riccati forms and residuals
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class RiccatiForm:
    """Coefficient functions of  weight * s' = -s^2 + linear * s + inhom."""

    name: str
    weight: Callable[[float, float], float]
    linear: Callable[[float, float], float]
    inhom: Callable[[float, float], float]


def exp_riccati_form() -> RiccatiForm:
    def weight(t, nu):
        return 1.0

    def linear(t, nu):
        e = np.exp(2.0 * t)
        return 2.0 * nu * np.sqrt(1.0 + e) + e / (1.0 + e)

    def inhom(t, nu):
        e = np.exp(2.0 * t)
        return (4.0 * e - e * e) / (4.0 * (1.0 + e) ** 2)

    return RiccatiForm("exp", weight, linear, inhom)


def cosh_y_riccati_form() -> RiccatiForm:
    def weight(y, nu):
        th, ch = np.tanh(y), np.cosh(y)
        return np.sqrt(th * th + 4.0 / (nu * nu * ch * ch))

    def linear(y, nu):
        return 2.0 * nu * np.cosh(y) + np.tanh(y) * weight(y, nu)

    def inhom(y, nu):
        th, ch = np.tanh(y), np.cosh(y)
        return (th * th - 1.25 * th ** 4
                + (2.0 - 5.0 * th * th) / (nu * nu * ch * ch))

    return RiccatiForm("cosh_y", weight, linear, inhom)


def generic_riccati_form(model) -> RiccatiForm:
    model = get_model(model)

    def _parts(x, nu):
        lam = model.lambda_from_nu(nu)
        qj = model.q_jet(x, 2)
        Q = qj.value - lam
        Qp = qj.deriv(1)
        Qpp = qj.deriv(2)
        return Q, Qp, Qpp

    def weight(x, nu):
        return 1.0

    def linear(x, nu):
        Q, Qp, _ = _parts(x, nu)
        return 2.0 * np.sqrt(Q) + Qp / (2.0 * Q)

    def inhom(x, nu):
        Q, Qp, Qpp = _parts(x, nu)
        return Qpp / (4.0 * Q) - (5.0 / 16.0) * (Qp / Q) ** 2

    return RiccatiForm("generic", weight, linear, inhom)


def riccati_residual(series: Optional[NuSeries], form: RiccatiForm, nu: float,
                     point: float, normalized: bool = True) -> float:
    """Equation defect of the truncated series at nu.

    The raw defect is |weight*s' + s^2 - linear*s - inhom|; with
    ``normalized=True`` (default) it is divided by |linear|, which expresses
    it as an equivalent perturbation of the solution itself.  Since the
    linear coefficient is Theta(nu), an N-term series has raw defect
    Theta(nu^-N) but normalized defect Theta(nu^-(N+1)) - one extra order,
    matching the size of the first dropped series term.

    A ``None`` series stands for the zero function, whose raw defect is
    |inhom| by definition.
    """
    L = form.linear(point, nu)
    if series is None:
        raw = abs(form.inhom(point, nu))
    else:
        s = series.partial_sum(point, nu, order=1)
        val, dval = s.value, s.deriv(1)
        lhs = form.weight(point, nu) * dval
        rhs = -val * val + L * val + form.inhom(point, nu)
        raw = abs(lhs - rhs)
    return float(raw / abs(L)) if normalized else float(raw)


def fitted_residual_order(series_factory, form: RiccatiForm, point: float,
                          nus=(10.0, 20.0, 40.0, 80.0)) -> float:
    """Log-log slope of the residual against nu; series_factory(nu) -> NuSeries."""
    res = []
    for nu in nus:
        series = series_factory(nu)
        res.append(riccati_residual(series, form, nu, point))
    res = np.asarray(res)
    if np.any(res <= 0):
        return -np.inf
    return float(np.polyfit(np.log(np.asarray(nus)), np.log(res), 1)[0])
