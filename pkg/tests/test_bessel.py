"""Special-function layer: values against independent high-precision oracles,
identities, and the ratio bounds the coefficient estimates rest on."""

import math

import mpmath as mp
import numpy as np
import pytest

from mfsdisk import (bessel_i, bessel_i_prime, bessel_i_ratios, bessel_k,
                     bessel_k_prime, bessel_k_ratios)
from mfsdisk.bessel import i_ratio

# Frozen oracle values.  I_n by the power series sum_k (x/2)^{n+2k}/(k!(n+k)!)
# summed in 40-digit arithmetic; K_0(1) by the integral representation
# int_0^inf e^{-cosh t} dt with mpmath quadrature.
I0_AT_1 = 1.2660658777520083356
I1_AT_1 = 0.56515910399248502721
I0_PLUS_I2_HALF_AT_1 = 0.70090677375952330839
K0_AT_1 = 0.42102443824070833334


def series_oracle_i(n, x):
    with mp.workdps(40):
        x = mp.mpf(x)
        return sum((x / 2) ** (n + 2 * k) / (mp.factorial(k) * mp.factorial(n + k))
                   for k in range(250))


def quadrature_oracle_k(n, x):
    with mp.workdps(40):
        return mp.quad(lambda t: mp.e ** (-mp.mpf(x) * mp.cosh(t)) * mp.cosh(n * t),
                       [0, 40])


class TestValues:
    def test_i0_series_constant_term(self):
        # I_0 -> 1 as x -> 0+
        assert bessel_i(0, 1e-12) == pytest.approx(1.0, rel=1e-12)

    def test_i1_vanishes_linearly_at_origin(self):
        x = 1e-10
        assert bessel_i(1, x) == pytest.approx(x / 2, rel=1e-9)

    def test_i0_against_series_oracle(self):
        assert bessel_i(0, 1.0) == pytest.approx(I0_AT_1, rel=1e-13)

    def test_k0_against_quadrature_oracle(self):
        assert bessel_k(0, 1.0) == pytest.approx(K0_AT_1, rel=1e-13)

    def test_k1_matches_asymptotic_form_at_large_x(self):
        x = 50.0
        asym = math.sqrt(math.pi / (2 * x)) * math.exp(-x)
        assert bessel_k(1, x) / asym == pytest.approx(1.0, rel=0.02)

    def test_k3_two_sided_envelope(self):
        # 2^{n-1} (n-1)! e^{-x} / x^n < K_n(x) < 2^{n-1} (n-1)! / x^n at n=3, x=2
        val = bessel_k(3, 2.0)
        base = 2.0**2 * math.factorial(2) / 2.0**3
        assert base * math.exp(-2.0) < val < base

    def test_sampled_values_against_oracles(self):
        rng = np.random.default_rng(7)
        for _ in range(25):
            n = int(rng.integers(0, 65))
            x = float(np.exp(rng.uniform(np.log(1e-3), np.log(50.0))))
            assert bessel_i(n, x) == pytest.approx(
                float(series_oracle_i(n, x)), rel=1e-12)
            assert bessel_k(n, x) == pytest.approx(
                float(quadrature_oracle_k(n, x)), rel=1e-12)


class TestDomainAndOverflow:
    @pytest.mark.parametrize("bad", [0.0, -1.0, math.nan, math.inf])
    def test_domain_errors(self, bad):
        with pytest.raises(ValueError):
            bessel_i(0, bad)
        with pytest.raises(ValueError):
            bessel_k(0, bad)

    def test_negative_order_rejected(self):
        with pytest.raises(ValueError):
            bessel_i(-1, 1.0)

    def test_overflow_is_signalled(self):
        with pytest.raises(OverflowError):
            bessel_i(0, 800.0)
        with pytest.raises(OverflowError):
            bessel_k(64, 1e-4)


class TestDerivatives:
    def test_i_prime_zero_order_equals_i1(self):
        for x in (0.3, 1.0, 7.5):
            assert bessel_i_prime(0, x) == bessel_i(1, x)

    def test_k_prime_zero_order_equals_minus_k1(self):
        assert bessel_k_prime(0, 2.0) == -bessel_k(1, 2.0)

    def test_i_prime_against_finite_difference(self):
        h = 1e-5
        fd = (bessel_i(2, 1.5 + h) - bessel_i(2, 1.5 - h)) / (2 * h)
        assert bessel_i_prime(2, 1.5) == pytest.approx(fd, rel=1e-8)

    def test_k_prime_against_finite_difference(self):
        h = 1e-5
        fd = (bessel_k(1, 1.0 + h) - bessel_k(1, 1.0 - h)) / (2 * h)
        assert bessel_k_prime(1, 1.0) == pytest.approx(fd, rel=1e-8)

    def test_i_prime_one_from_series_oracle(self):
        assert bessel_i_prime(1, 1.0) == pytest.approx(
            I0_PLUS_I2_HALF_AT_1, rel=1e-13)

    @pytest.mark.parametrize("n", [0, 1, 3, 10])
    @pytest.mark.parametrize("x", [0.1, 1.0, 9.0])
    def test_k_prime_always_negative(self, n, x):
        assert bessel_k_prime(n, x) < 0.0


class TestIdentitiesAndBounds:
    def test_wronskian_identity_grid(self):
        # I_n(x) K_{n+1}(x) + I_{n+1}(x) K_n(x) = 1/x
        xs = np.logspace(-3, math.log10(50.0), 40)
        for n in range(0, 65):
            w = (bessel_i(n, xs) * bessel_k(n + 1, xs)
                 + bessel_i(n + 1, xs) * bessel_k(n, xs))
            assert np.max(np.abs(w * xs - 1.0)) < 1e-12

    def test_i_ratio_upper_bound_grid(self):
        # I_{n+1}(y)/I_n(y) < y / ((n+1/2) + sqrt((n+1/2)^2 + y^2))
        ys = np.linspace(0.1, 20.0, 25)
        for n in range(1, 41):
            nu = n + 0.5
            lhs = bessel_i(n + 1, ys) / bessel_i(n, ys)
            rhs = ys / (nu + np.sqrt(nu * nu + ys * ys))
            assert np.all(lhs > 0.0)
            assert np.all(lhs < rhs)

    def test_k_ratio_upper_bound_grid(self):
        # K_nu(x)/K_{nu-1}(x) < (nu + sqrt(nu^2 + x^2)) / x
        xs = np.linspace(0.1, 20.0, 25)
        for nu in range(1, 41):
            lhs = bessel_k(nu, xs) / bessel_k(nu - 1, xs)
            assert np.all(lhs < (nu + np.sqrt(nu * nu + xs * xs)) / xs)

    def test_k_ratio_next_order_bound_grid(self):
        # K_nu(x)/K_{nu+1}(x) <= x / ((nu+1/2) + sqrt((nu-1/2)^2 + x^2))
        xs = np.linspace(0.1, 20.0, 25)
        for nu in range(1, 41):
            lhs = bessel_k(nu, xs) / bessel_k(nu + 1, xs)
            rhs = xs / ((nu + 0.5) + np.sqrt((nu - 0.5) ** 2 + xs * xs))
            assert np.all(lhs <= rhs)

    def test_i_inverse_ratio_bound_grid(self):
        # I_{nu-1}(y)/I_nu(y) < (nu + sqrt(nu^2 + y^2)) / y
        ys = np.linspace(0.1, 20.0, 25)
        for nu in range(1, 41):
            lhs = bessel_i(nu - 1, ys) / bessel_i(nu, ys)
            assert np.all(lhs < (nu + np.sqrt(nu * nu + ys * ys)) / ys)

    def test_i_order_power_bound(self):
        # I_nu(x)/I_nu(y) < (x/y)^nu for 0 < x < y
        for nu in range(1, 21):
            for x, y in [(0.2, 0.9), (0.5, 2.0), (1.0, 5.0), (3.0, 12.0)]:
                assert bessel_i(nu, x) / bessel_i(nu, y) < (x / y) ** nu

    def test_i_log_derivative_bound(self):
        # t I'_nu(t)/I_nu(t) < sqrt(t^2 + nu^2)
        ts = np.linspace(0.1, 20.0, 25)
        for nu in range(0, 41):
            lhs = ts * bessel_i_prime(nu, ts) / bessel_i(nu, ts)
            assert np.all(lhs < np.sqrt(ts * ts + nu * nu))


class TestRatioChains:
    @pytest.mark.parametrize("y", [0.25, 1.0, 6.0])
    def test_i_ratio_chain_against_oracle(self, y):
        r = bessel_i_ratios(200, y)
        for n in (0, 1, 5, 50, 200):
            oracle = float(series_oracle_i(n + 1, y) / series_oracle_i(n, y))
            assert r[n] == pytest.approx(oracle, rel=1e-13)
        assert i_ratio(120, y) == pytest.approx(r[120], rel=1e-13)

    @pytest.mark.parametrize("x", [0.5, 3.0, 15.0])
    def test_k_ratio_chain_against_oracle(self, x):
        r = bessel_k_ratios(200, x)
        with mp.workdps(40):
            for n in (0, 1, 5, 50, 200):
                oracle = float(mp.besselk(n + 1, mp.mpf(x)) / mp.besselk(n, mp.mpf(x)))
                assert r[n] == pytest.approx(oracle, rel=1e-13)
