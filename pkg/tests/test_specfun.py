import numpy as np
import pytest
from scipy.integrate import quad

from tracedet.errors import (
    ModulusOutOfRange,
    NonPositiveArgument,
    Overflow,
    PhiOutOfRange,
)
from tracedet.specfun import (
    BesselOrder,
    bessel_i_reim,
    bessel_k,
    bessel_k_log,
    elliptic_complete,
    elliptic_incomplete,
    lambert_w,
    log_gamma,
    log_gamma_complex,
)


class TestBesselK:
    def test_half_order_closed_form(self):
        # K_{1/2}(z) = sqrt(pi/(2z)) e^{-z}
        want = np.sqrt(np.pi / 2.0) * np.exp(-1.0)
        assert bessel_k(BesselOrder.real(0.5), 1.0) == pytest.approx(
            want, rel=1e-12)

    def test_k0_against_quadrature_oracle(self):
        # independent adaptive quadrature of int_0^inf e^{-cosh t} dt
        oracle = quad(lambda t: np.exp(-np.cosh(t)), 0, 30, epsabs=1e-14,
                      epsrel=1e-14, limit=200)[0]
        got = bessel_k(BesselOrder.real(0.0), 1.0)
        assert got == pytest.approx(oracle, rel=1e-12)
        assert got == pytest.approx(0.42102443824070834, rel=1e-12)

    @pytest.mark.parametrize("k", [0.7, 2.3])
    @pytest.mark.parametrize("y", [1.0, 5.0])
    def test_imaginary_order_even_in_k(self, k, y):
        plus = bessel_k(BesselOrder.imaginary(k), y)
        minus = bessel_k(BesselOrder.imaginary(-k), y)
        assert plus == minus

    def test_real_order_against_mpmath_grid(self):
        mp = pytest.importorskip("mpmath")
        mp.mp.dps = 25
        for nu in (0.0, 0.5, 1.0, 5.0, 20.0, 50.0):
            for y in (0.01, 1.0, 10.0, 50.0):
                logk, sign = bessel_k_log(BesselOrder.real(nu), y)
                ref = mp.log(mp.besselk(nu, y))
                assert sign == 1
                assert logk == pytest.approx(float(ref), abs=5e-13, rel=1e-13), \
                    (nu, y)

    def test_imaginary_order_against_mpmath(self):
        mp = pytest.importorskip("mpmath")
        mp.mp.dps = 25
        for k in (0.5, 2.0, 5.0):
            for y in (0.5, 1.0, 10.0):
                got = bessel_k(BesselOrder.imaginary(k), y)
                ref = float(mp.besselk(1j * k, y).real)
                assert got == pytest.approx(ref, rel=1e-11), (k, y)

    def test_large_order_leading_asymptotics(self):
        # K_nu(y) ~ sqrt(pi/(2 nu)) (y e / (2 nu))^{-nu} for fixed y, large nu
        y = 1.0

        def ratio(nu):
            logk, _ = bessel_k_log(BesselOrder.real(nu), y)
            lead = 0.5 * np.log(np.pi / (2 * nu)) - nu * np.log(y * np.e / (2 * nu))
            return np.exp(logk - lead)

        r10, r50 = ratio(10.0), ratio(50.0)
        assert abs(r50 - 1.0) < abs(r10 - 1.0)
        assert abs(r50 - 1.0) < 0.01

    def test_log_scaled_variant_survives_underflow(self):
        with pytest.raises(Overflow):
            bessel_k(BesselOrder.real(0.0), 800.0)
        logk, sign = bessel_k_log(BesselOrder.real(0.0), 800.0)
        want = -800.0 + 0.5 * np.log(np.pi / 1600.0)  # leading asymptotics
        assert sign == 1
        assert logk == pytest.approx(want, abs=1e-3)

    def test_nonpositive_argument(self):
        with pytest.raises(NonPositiveArgument):
            bessel_k(BesselOrder.real(1.0), 0.0)
        with pytest.raises(NonPositiveArgument):
            bessel_k_log(BesselOrder.imaginary(1.0), -2.0)


class TestBesselI:
    def test_real_order_zero_matches_series_oracle(self):
        # independent direct series sum_m (y/2)^{2m} / (m!)^2 at y = 1
        import math
        y = 1.0
        oracle = sum((y / 2) ** (2 * m) / math.factorial(m) ** 2
                     for m in range(30))
        re, im = bessel_i_reim(0.0, y)
        assert re == pytest.approx(oracle, rel=1e-13)
        assert re == pytest.approx(1.2660658777520084, rel=1e-13)
        assert im == 0.0

    def test_connection_identity_both_sides(self):
        k, y = 1.0, 1.0
        _, im = bessel_i_reim(k, y, check=False)
        rhs = np.sinh(np.pi * k) / np.pi * bessel_k(BesselOrder.imaginary(k), y)
        assert im == pytest.approx(rhs, rel=1e-10)

    def test_connection_identity_on_grid(self):
        for k in (0.1, 0.7, 2.0, 5.0):
            for y in (0.5, 2.0, 10.0):
                _, im = bessel_i_reim(k, y, check=False)
                rhs = (np.sinh(np.pi * k) / np.pi
                       * bessel_k(BesselOrder.imaginary(k), y))
                assert im == pytest.approx(rhs, rel=1e-10), (k, y)

    def test_wronskian_with_k_is_unity(self):
        # W_x(K_{ik}(e^x), I_{-ik}(e^x)) = 1 (z W_z with W_z{K, I} = 1/z)
        k = 0.8
        h = 1e-5
        for x in (0.3, 1.0):
            def Kf(s):
                return bessel_k(BesselOrder.imaginary(k), np.exp(s))

            def If(s):
                re, im = bessel_i_reim(k, np.exp(s), check=False)
                return complex(re, im)

            dK = (Kf(x + h) - Kf(x - h)) / (2 * h)
            dI = (If(x + h) - If(x - h)) / (2 * h)
            W = Kf(x) * dI - dK * If(x)
            assert W.real == pytest.approx(1.0, abs=5e-9)
            assert W.imag == pytest.approx(0.0, abs=5e-9)


class TestElliptic:
    def test_zero_modulus(self):
        pair = elliptic_complete(0.0)
        assert pair.K == pytest.approx(np.pi / 2, rel=1e-15)
        assert pair.E == pytest.approx(np.pi / 2, rel=1e-15)

    def test_modulus_to_one_limits(self):
        # E -> 1 and K - log(4/k') -> 0 as k -> 1
        for kp in (1e-3, 1e-4):
            k = np.sqrt(1.0 - kp * kp)
            pair = elliptic_complete(k)
            assert pair.E == pytest.approx(1.0, abs=5e-6)
            # next correction is (kp^2/4)(log(4/kp) - 1)
            bound = 1.5 * (kp * kp / 4.0) * (np.log(4.0 / kp) - 1.0)
            assert abs(pair.K - np.log(4.0 / kp)) < bound

    def test_legendre_relation(self):
        k, kp = 0.6, 0.8
        a, b = elliptic_complete(k), elliptic_complete(kp)
        lhs = a.E * b.K + b.E * a.K - a.K * b.K
        assert lhs == pytest.approx(np.pi / 2, rel=1e-12)

    def test_legendre_relation_grid(self):
        for k in np.linspace(0.02, 0.98, 20):
            kp = np.sqrt(1.0 - k * k)
            a, b = elliptic_complete(k), elliptic_complete(kp)
            lhs = a.E * b.K + b.E * a.K - a.K * b.K
            assert lhs == pytest.approx(np.pi / 2, rel=1e-12), k

    def test_modulus_out_of_range(self):
        for bad in (-0.1, 1.0, 1.5):
            with pytest.raises(ModulusOutOfRange):
                elliptic_complete(bad)
            with pytest.raises(ModulusOutOfRange):
                elliptic_incomplete(0.3, bad)

    def test_incomplete_at_zero_amplitude(self):
        assert elliptic_incomplete(0.0, 0.5) == (0.0, 0.0)

    def test_incomplete_zero_modulus_is_identity(self):
        for phi in (0.2, -0.9, 1.4):
            pair = elliptic_incomplete(phi, 0.0)
            assert pair.F == pytest.approx(phi, rel=1e-14)
            assert pair.E == pytest.approx(phi, rel=1e-14)

    def test_incomplete_against_quadrature_oracle(self):
        phi, k = 0.5, 0.7
        F_oracle = quad(lambda t: 1 / np.sqrt(1 - (k * np.sin(t)) ** 2),
                        0, phi, epsabs=1e-14, epsrel=1e-14)[0]
        E_oracle = quad(lambda t: np.sqrt(1 - (k * np.sin(t)) ** 2),
                        0, phi, epsabs=1e-14, epsrel=1e-14)[0]
        pair = elliptic_incomplete(phi, k)
        assert pair.F == pytest.approx(F_oracle, rel=1e-12)
        assert pair.E == pytest.approx(E_oracle, rel=1e-12)

    def test_incomplete_is_odd_in_phi(self):
        plus = elliptic_incomplete(0.8, 0.3)
        minus = elliptic_incomplete(-0.8, 0.3)
        assert minus.F == -plus.F
        assert minus.E == -plus.E

    def test_incomplete_approaches_complete(self):
        for k in (0.3, 0.9):
            comp = elliptic_complete(k)
            inc = elliptic_incomplete(np.pi / 2 - 1e-6, k)
            assert inc.F == pytest.approx(comp.K, abs=5e-6)
            assert inc.E == pytest.approx(comp.E, abs=5e-6)
        with pytest.raises(PhiOutOfRange):
            elliptic_incomplete(np.pi / 2, 0.5)


class TestLambertW:
    def test_at_e(self):
        assert lambert_w(np.e) == pytest.approx(1.0, rel=1e-14)

    def test_at_one(self):
        # oracle: Newton iteration on w e^w = 1 (Omega constant)
        assert lambert_w(1.0) == pytest.approx(0.5671432904097838, rel=1e-13)

    def test_defining_identity_grid(self):
        for x in np.logspace(-6, 8, 40):
            w = lambert_w(x)
            assert w * np.exp(w) == pytest.approx(x, rel=1e-13)

    def test_inverts_eigenvalue_counting_shape(self):
        # lambda_n ~ (pi n / W(2 pi n / e))^2 inverts N(lam) = sqrt(lam)/pi
        # * log(2 sqrt(lam)/e) up to O(1)
        for n in (10, 30):
            lam = (np.pi * n / lambert_w(2 * np.pi * n / np.e)) ** 2
            count = np.sqrt(lam) / np.pi * np.log(2 * np.sqrt(lam) / np.e)
            assert count == pytest.approx(n, abs=0.05)

    def test_nonpositive(self):
        with pytest.raises(NonPositiveArgument):
            lambert_w(0.0)


class TestLogGamma:
    def test_integers_and_half(self):
        assert log_gamma(1.0) == pytest.approx(0.0, abs=1e-14)
        assert log_gamma(2.0) == pytest.approx(0.0, abs=1e-14)
        assert log_gamma(0.5) == pytest.approx(np.log(np.sqrt(np.pi)),
                                               rel=1e-13)

    def test_against_scipy_real_grid(self):
        from scipy.special import gammaln
        for x in np.concatenate([np.linspace(0.1, 2, 15),
                                 np.logspace(0.5, 1.7, 10)]):
            assert log_gamma(x) == pytest.approx(float(gammaln(x)),
                                                 rel=1e-12, abs=1e-13), x

    def test_complex_strip_against_scipy(self):
        from scipy.special import loggamma
        rng = np.random.default_rng(5)
        for _ in range(40):
            z = complex(rng.uniform(0.5, 50.0), rng.uniform(-50.0, 50.0))
            got = log_gamma_complex(z)
            ref = complex(loggamma(z))
            assert abs(got - ref) <= 1e-12 * max(abs(ref), 1.0), z

    def test_nonpositive(self):
        with pytest.raises(NonPositiveArgument):
            log_gamma(0.0)
