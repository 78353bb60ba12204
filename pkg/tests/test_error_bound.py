"""Defect, boundary norms along both routes, the total bound F, and the
trace inequality."""

import math

import numpy as np
import pytest
from scipy.special import iv, kv

from conftest import single_mode_problem
from mfsdisk import (AnalyticData, CoefficientTable, boundary_norms_quadrature,
                     boundary_norms_spectral, defect, error_bound,
                     error_constants, fourier_series, layout, make_problem,
                     solve_charges, trace_inequality_check)
from mfsdisk.verify import manufactured_exterior_source


class TestConstants:
    def test_unit_disk_values(self):
        c = error_constants(1.0, 1.0)
        assert c.C_Omega == pytest.approx(math.sqrt(3.0))
        assert c.C_2 == 1.0
        assert c.C_3 == pytest.approx(3.0)

    def test_small_alpha(self):
        c = error_constants(2.0, 0.5)
        assert c.C_2 == 0.25
        assert c.C_3 == pytest.approx((1 + 1.0) / 0.25**2)

    def test_trace_constant_exceeds_one(self):
        for R in (0.1, 1.0, 10.0):
            assert error_constants(R, 1.0).C_Omega > 1.0


class TestDefect:
    def test_zero_at_collocation_angles(self, ref_spec):
        sol = solve_charges(ref_spec)
        vals = defect(sol, layout(ref_spec).angles)
        assert np.max(np.abs(vals)) <= 1e-9 * np.max(np.abs(sol.rhs))

    def test_zero_charges_leave_pure_data(self, ref_spec):
        sol = solve_charges(ref_spec)
        object.__setattr__(sol, "Q", np.zeros(ref_spec.N))
        th = np.linspace(0, 2 * np.pi, 13)
        from mfsdisk import boundary_trace
        assert defect(sol, th) == pytest.approx(boundary_trace(ref_spec, th))

    def test_uniformly_small_for_resolved_single_mode(self):
        sol = solve_charges(single_mode_problem(N=36))
        th = np.linspace(0, 2 * np.pi, 257)
        assert np.max(np.abs(defect(sol, th))) < 1e-8


class TestQuadratureNorms:
    def test_interpolating_data_gives_zero(self):
        # boundary data taken from an explicit charge sum is reproduced
        # exactly, so the defect (and both norms) vanish at roundoff level
        R, alpha, rho, N = 1.0, 1.0, 3.0, 8
        rng = np.random.default_rng(6)
        q_true = rng.uniform(0.5, 1.5, N)
        yk = rho * np.exp(2j * np.pi * np.arange(N) / N)

        def S(th):
            th = np.atleast_1d(np.asarray(th, dtype=float))
            x = R * np.exp(1j * th)
            d = np.abs(x[:, None] - yk[None, :])
            radial = R - rho * np.cos(th[:, None] - 2 * np.pi * np.arange(N) / N)
            vals = (-alpha * kv(1, alpha * d) * radial / d) @ q_true
            return vals if np.ndim(th) else float(vals[0])

        spec = make_problem(R, alpha, rho, N, AnalyticData(S=S))
        sol = solve_charges(spec)
        assert sol.Q == pytest.approx(q_true, rel=1e-12)
        n0, n1 = boundary_norms_quadrature(sol)
        assert n0 < 1e-28 and n1 < 1e-26

    def test_synthetic_cosine_defect_closed_form(self):
        # with zero charges and S = cos theta the defect is exactly cos theta:
        # norm0_sq = pi R, norm1_sq = pi / R
        spec = single_mode_problem(N=6)
        sol = solve_charges(spec)
        object.__setattr__(sol, "Q", np.zeros(spec.N))
        n0, n1 = boundary_norms_quadrature(sol, 256)
        assert n0 == pytest.approx(math.pi * spec.R, rel=1e-12)
        assert n1 == pytest.approx(math.pi / spec.R, rel=1e-12)

    def test_undersampling_rejected(self, ref_spec):
        sol = solve_charges(ref_spec)
        with pytest.raises(ValueError, match="quad_points"):
            boundary_norms_quadrature(sol, 8)

    def test_resolution_stable_under_doubling(self, ref_spec):
        sol = solve_charges(ref_spec)
        n0a, n1a = boundary_norms_quadrature(sol, 256)
        n0b, n1b = boundary_norms_quadrature(sol, 512)
        assert n0a == pytest.approx(n0b, rel=1e-10)
        assert n1a == pytest.approx(n1b, rel=1e-10)

    def test_under_resolved_defect_warns(self):
        # steep pulse, minimum legal quadrature: doubling still moves the norms
        from mfsdisk import PulseData, ResolutionWarning, exp_sqrt_kernel
        spec = make_problem(1.0, 1.0, 3.0, 4,
                            PulseData(kernel=exp_sqrt_kernel(1.0),
                                      P=0.85 * np.exp(0.4j)))
        sol = solve_charges(spec)
        with pytest.warns(ResolutionWarning):
            boundary_norms_quadrature(sol, 32)


class TestSpectralNorms:
    def test_single_mode_matches_quadrature(self):
        spec = single_mode_problem(N=6)
        sol = solve_charges(spec)
        series = fourier_series(spec, 240, quad_points=2048)
        table = CoefficientTable(spec)
        n0s, n1s = boundary_norms_spectral(sol, series, table)
        n0q, n1q = boundary_norms_quadrature(sol, 2048)
        assert n0s == pytest.approx(n0q, rel=1e-8)
        assert n1s == pytest.approx(n1q, rel=1e-8)

    def test_pulse_data_cross_route_agreement(self, ref_spec):
        sol = solve_charges(ref_spec)
        series = fourier_series(ref_spec, 240, quad_points=2048)
        table = CoefficientTable(ref_spec)
        n0s, n1s = boundary_norms_spectral(sol, series, table)
        n0q, n1q = boundary_norms_quadrature(sol)
        assert n0s == pytest.approx(n0q, rel=1e-6)
        assert n1s == pytest.approx(n1q, rel=1e-6)

    def test_zero_data(self):
        spec = make_problem(1.0, 1.0, 3.0, 6, AnalyticData(S=lambda th: 0.0 * th))
        sol = solve_charges(spec)
        series = fourier_series(spec, 64)
        table = CoefficientTable(spec)
        n0, n1 = boundary_norms_spectral(sol, series, table)
        assert n0 == 0.0 and n1 == 0.0

    def test_norm0_against_parseval_of_sampled_defect(self, ref_spec):
        sol = solve_charges(ref_spec)
        series = fourier_series(ref_spec, 240, quad_points=2048)
        table = CoefficientTable(ref_spec)
        n0s, _ = boundary_norms_spectral(sol, series, table)
        M = 2048
        th = 2 * np.pi * np.arange(M) / M
        co = np.fft.fft(np.asarray(defect(sol, th))) / M
        parseval = ref_spec.R * 2 * np.pi * float(np.sum(np.abs(co) ** 2))
        assert n0s == pytest.approx(parseval, rel=1e-6)


class TestErrorBound:
    def test_interpolating_data_gives_zero_bound(self):
        spec = single_mode_problem(N=40)
        sol = solve_charges(spec)
        rep = error_bound(sol)
        assert rep.F < 1e-20  # defect at roundoff level

    def test_f_composition(self, ref_spec):
        sol = solve_charges(ref_spec)
        rep = error_bound(sol)
        assert rep.F == pytest.approx(
            rep.constants.C_3 * (rep.norm0_sq + rep.norm1_sq), rel=1e-15)
        assert rep.norm0_sq >= 0.0 and rep.norm1_sq >= 0.0

    def test_monotone_decay_for_single_mode(self):
        F = {}
        for N in (6, 12, 18, 24, 30):
            F[N] = error_bound(solve_charges(single_mode_problem(N))).F
        for N in (6, 12, 18, 24):
            assert F[N + 6] < F[N]

    def test_bound_dominates_squared_sup_error(self):
        # F >= (sup |g - g_N|)^2 for the closed-form single-mode solution
        denom = 0.5 * (iv(0, 1.0) + iv(2, 1.0))
        rr = np.linspace(0.0, 1.0, 40)
        th = np.linspace(0.0, 2 * np.pi, 40, endpoint=False)
        RR, TT = np.meshgrid(rr, th)
        pts = RR * np.exp(1j * TT)
        exact = iv(1, RR) * np.cos(TT) / denom
        from mfsdisk import eval_gN
        for N in (6, 12, 18):
            sol = solve_charges(single_mode_problem(N))
            sup_err = float(np.max(np.abs(eval_gN(sol, pts) - exact)))
            assert error_bound(sol).F >= sup_err**2

    def test_decay_rate_with_known_extension_radius(self):
        # exterior source at radius 2 pins the decay to
        # max(R/rho, R/r0) = 1/2 per step, up to slack 0.15
        data, _, _ = manufactured_exterior_source(1.0, 1.0, 2.0, 0.9)
        F = {}
        for N in range(6, 31, 2):
            sol = solve_charges(make_problem(1.0, 1.0, 3.0, N, data))
            F[N] = error_bound(sol).F
        ns = np.array(sorted(F))
        slope = float(np.polyfit(ns, np.log([F[n] for n in ns]), 1)[0])
        assert slope < 0.0
        assert math.exp(slope) <= 0.5 + 0.15


class TestTraceInequality:
    def test_constant_function_closed_form(self):
        lhs, rhs = trace_inequality_check(
            lambda x, y: np.ones_like(np.asarray(x)),
            lambda x, y: (np.zeros_like(np.asarray(x)),
                          np.zeros_like(np.asarray(x))), 1.0)
        assert lhs == pytest.approx(2 * math.pi, rel=1e-12)
        assert rhs == pytest.approx(3 * math.pi, rel=1e-12)

    def test_coordinate_function_closed_form(self):
        lhs, rhs = trace_inequality_check(
            lambda x, y: x,
            lambda x, y: (np.ones_like(np.asarray(x)),
                          np.zeros_like(np.asarray(x))), 1.0)
        assert lhs == pytest.approx(math.pi, rel=1e-12)
        assert rhs == pytest.approx(3 * (math.pi / 4 + math.pi), rel=1e-12)

    def test_twenty_random_polynomials(self):
        rng = np.random.default_rng(21)
        for _ in range(20):
            c = rng.uniform(-1, 1, size=(4, 4))

            def u(x, y, c=c):
                x, y = np.asarray(x), np.asarray(y)
                return sum(c[i, j] * x**i * y**j
                           for i in range(4) for j in range(4))

            def gu(x, y, c=c):
                x, y = np.asarray(x), np.asarray(y)
                ux = sum(i * c[i, j] * x**(i - 1) * y**j
                         for i in range(1, 4) for j in range(4))
                uy = sum(j * c[i, j] * x**i * y**(j - 1)
                         for i in range(4) for j in range(1, 4))
                return ux + 0.0 * x, uy + 0.0 * x

            lhs, rhs = trace_inequality_check(u, gu, 1.0)
            assert lhs <= rhs
