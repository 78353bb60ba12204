"""Named verification suites.

Each suite re-checks, numerically and over explicit grids, one family of
facts the solver's correctness rests on: special-function identities and
ratio bounds, positivity and two-sided envelopes of the kernel coefficients,
the boundary trace inequality, the agreement of the two eigenvalue routes,
the circulant algebra, and the convergence/soundness behaviour of the error
bound.  Results come back as :class:`CheckResult` records with the measured
margin, so a pass/fail report can show how much headroom each fact has.

Suites: ``bessel``, ``lemmas3``, ``lemmas5``, ``trace``, ``eigen-cross``,
``circulant``, ``convergence`` (and ``all``).  The ``lemmas3`` suite covers
the coefficient-ratio facts behind eigenvalue positivity; ``lemmas5`` the
two-sided coefficient envelopes, decay-envelope sums, and the discrete
aliasing identity.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy import special as _sp

from . import bessel
from .error_bound import defect, error_bound, trace_inequality_check
from .problem import (AnalyticData, ProblemSpec, PulseData, boundary_rhs,
                      exp_sqrt_kernel, gauss_kernel, layout, make_problem,
                      thm1_threshold)
from .solver import (assemble_c, build_system, circulant_matrix,
                     eigenvalues_dft, eval_gN, kernel_c, solve_charges)
from .spectral import (CoefficientTable, bound_constants, eigenvalue_series,
                       fourier_series, hat_s)

__all__ = [
    "CheckResult",
    "SUITE_NAMES",
    "demo_problem",
    "manufactured_exterior_source",
    "run_suite",
]


@dataclass(frozen=True)
class CheckResult:
    """One named check: ``passed`` iff ``measured`` respects ``limit``."""

    name: str
    passed: bool
    measured: float
    limit: float
    comparison: str = "<="  # how measured relates to limit when passing
    detail: str = ""

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        extra = f"  ({self.detail})" if self.detail else ""
        return (f"{status}\t{self.name}\tmeasured={self.measured:.6e}\t"
                f"limit{self.comparison}{self.limit:.6e}{extra}")


def _below(name: str, measured: float, limit: float, detail: str = "") -> CheckResult:
    return CheckResult(name, measured <= limit, float(measured), float(limit),
                       "<=", detail)


def _above(name: str, measured: float, limit: float, detail: str = "") -> CheckResult:
    return CheckResult(name, measured >= limit, float(measured), float(limit),
                       ">=", detail)


def demo_problem(N: int = 6, P: complex | None = None,
                 kernel: str = "exp_sqrt") -> ProblemSpec:
    """Reference pulse problem: unit disk, alpha = 1, charges at rho = 3."""
    R, alpha, rho = 1.0, 1.0, 3.0
    if P is None:
        P = 0.2 * np.exp(1j * np.pi / 3)
    if kernel == "exp_sqrt":
        kern = exp_sqrt_kernel(alpha)
    else:
        kern = gauss_kernel()
    return make_problem(R, alpha, rho, N, PulseData(kernel=kern, P=P))


def manufactured_exterior_source(R: float, alpha: float, source_radius: float,
                                 source_angle: float = 0.9):
    """Boundary data whose exact solution is a single exterior source.

    Returns ``(data, g_exact, grad_exact)`` where the exact solution is
    ``g(x) = K_0(alpha |x - y*|)`` for ``y* = source_radius e^{i angle}``.
    The solution extends analytically to any radius below ``source_radius``,
    which pins the data's decay envelope exactly.
    """
    if source_radius <= R:
        raise ValueError("source must sit strictly outside the disk")
    ystar = source_radius * np.exp(1j * source_angle)

    def S(theta):
        theta = np.asarray(theta, dtype=float)
        x = R * np.exp(1j * theta)
        d = np.abs(x - ystar)
        radial = R - np.real(np.exp(1j * theta) * np.conj(ystar))
        return -alpha * _sp.kv(1, alpha * d) * radial / d

    def g_exact(z):
        z = np.asarray(z, dtype=complex)
        return _sp.kv(0, alpha * np.abs(z - ystar))

    def grad_exact(z):
        z = np.asarray(z, dtype=complex)
        dz = z - ystar
        d = np.abs(dz)
        factor = -alpha * _sp.kv(1, alpha * d) / d
        return factor * np.real(dz), factor * np.imag(dz)

    return AnalyticData(S=S, name="exterior_source"), g_exact, grad_exact


# ---------------------------------------------------------------- bessel --

def _suite_bessel() -> list[CheckResult]:
    out = []
    xs = np.logspace(-3, math.log10(50.0), 40)

    worst = 0.0
    for n in range(0, 65):
        w = (_sp.iv(n, xs) * _sp.kv(n + 1, xs) + _sp.iv(n + 1, xs) * _sp.kv(n, xs))
        worst = max(worst, float(np.max(np.abs(w * xs - 1.0))))
    out.append(_below("bessel.wronskian_rel_err", worst, 1e-12,
                      "I_n K_{n+1} + I_{n+1} K_n = 1/x, n<=64"))

    # two-sided envelopes, checked in log form to dodge factorial overflow
    margin = math.inf
    for n in range(0, 41):
        for y in np.linspace(0.1, 10.0, 12):
            li = math.log(bessel.bessel_i(n, y))
            base = n * math.log(y / 2.0) - math.lgamma(n + 1)
            margin = min(margin, li - (base - y), (base + y) - li)
    out.append(_above("bessel.i_envelope_log_margin", margin, 0.0,
                      "(y/2)^n e^{-y}/n! < I_n(y) < (y/2)^n e^{y}/n!"))

    margin = math.inf
    for n in range(1, 41):
        for x in np.linspace(0.1, 10.0, 12):
            lk = math.log(bessel.bessel_k(n, x))
            base = (n - 1) * math.log(2.0) + math.lgamma(n) - n * math.log(x)
            margin = min(margin, lk - (base - x), base - lk)
    out.append(_above("bessel.k_envelope_log_margin", margin, 0.0,
                      "2^{n-1}G(n)e^{-x}/x^n < K_n(x) < 2^{n-1}G(n)/x^n"))

    ys = np.linspace(0.1, 20.0, 15)
    margin = math.inf
    for n in range(1, 41):
        nu = n + 0.5
        lhs = _sp.iv(n + 1, ys) / _sp.iv(n, ys)
        rhs = ys / (nu + np.sqrt(nu * nu + ys * ys))
        margin = min(margin, float(np.min(rhs - lhs)))
    out.append(_above("bessel.i_ratio_upper_margin", margin, 0.0,
                      "I_{n+1}/I_n < y/((n+1/2)+sqrt((n+1/2)^2+y^2))"))

    margin = math.inf
    for nu in range(1, 41):
        lhs = _sp.kv(nu, ys) / _sp.kv(nu - 1, ys)
        rhs = (nu + np.sqrt(nu * nu + ys * ys)) / ys
        margin = min(margin, float(np.min(rhs - lhs)))
    out.append(_above("bessel.k_ratio_upper_margin", margin, 0.0,
                      "K_nu/K_{nu-1} < (nu+sqrt(nu^2+x^2))/x"))

    margin = math.inf
    for nu in range(1, 41):
        lhs = _sp.kv(nu, ys) / _sp.kv(nu + 1, ys)
        rhs = ys / ((nu + 0.5) + np.sqrt((nu - 0.5) ** 2 + ys * ys))
        margin = min(margin, float(np.min(rhs - lhs)))
    out.append(_above("bessel.k_ratio_lower_route_margin", margin, 0.0,
                      "K_nu/K_{nu+1} <= x/((nu+1/2)+sqrt((nu-1/2)^2+x^2))"))

    margin = math.inf
    for nu in range(1, 41):
        lhs = _sp.iv(nu - 1, ys) / _sp.iv(nu, ys)
        rhs = (nu + np.sqrt(nu * nu + ys * ys)) / ys
        margin = min(margin, float(np.min(rhs - lhs)))
    out.append(_above("bessel.i_inverse_ratio_margin", margin, 0.0,
                      "I_{nu-1}/I_nu < (nu+sqrt(nu^2+y^2))/y"))

    margin = math.inf
    pairs = [(0.2, 0.9), (0.5, 2.0), (1.0, 5.0), (3.0, 12.0), (8.0, 20.0)]
    for nu in range(1, 21):
        for x, y in pairs:
            lhs = _sp.iv(nu, x) / _sp.iv(nu, y)
            margin = min(margin, 1.0 - lhs / (x / y) ** nu)
    out.append(_above("bessel.i_order_power_rel_margin", margin, 0.0,
                      "I_nu(x)/I_nu(y) < (x/y)^nu for x < y"))

    margin = math.inf
    ts = np.linspace(0.1, 20.0, 15)
    for nu in range(0, 41):
        lhs = ts * bessel.bessel_i_prime(nu, ts) / _sp.iv(nu, ts)
        rhs = np.sqrt(ts * ts + nu * nu)
        margin = min(margin, float(np.min(rhs - lhs)))
    out.append(_above("bessel.i_logderiv_margin", margin, 0.0,
                      "t I'_nu/I_nu < sqrt(t^2+nu^2)"))

    # derivative recurrences against central differences (step scaled with x
    # so the truncation term (h/x)^2 n^2 stays below the tolerance)
    worst = 0.0
    for n in (0, 1, 2, 7, 20):
        for x in (0.5, 1.5, 4.0, 12.0):
            h = 5e-6 * x
            fd_i = (bessel.bessel_i(n, x + h) - bessel.bessel_i(n, x - h)) / (2 * h)
            fd_k = (bessel.bessel_k(n, x + h) - bessel.bessel_k(n, x - h)) / (2 * h)
            worst = max(worst,
                        abs(bessel.bessel_i_prime(n, x) - fd_i) / abs(fd_i),
                        abs(bessel.bessel_k_prime(n, x) - fd_k) / abs(fd_k))
    out.append(_below("bessel.derivative_fd_rel_err", worst, 1e-8))
    return out


# ---------------------------------------------------- coefficient ratios --

def _suite_lemmas3() -> list[CheckResult]:
    out = []
    for label, rho in (("admissible", 3.0), ("near_threshold", 1.7)):
        spec = demo_problem()
        spec = make_problem(spec.R, spec.alpha, rho, 6, spec.boundary)
        table = CoefficientTable(spec)
        q = spec.R / spec.rho
        down = max(q * table.A(n) / table.A(n - 1) for n in range(1, 61))
        out.append(_below(f"lemmas3.ratio_decreasing_{label}", down, 1.0 - 1e-12,
                          "(R/rho) A_n/A_{n-1} < 1 for n=1..60"))
        up = max(q * table.A(n) / table.A(n + 1) for n in range(0, 61))
        out.append(_below(f"lemmas3.ratio_increasing_{label}", up, 1.0 - 1e-12,
                          "(R/rho) A_n/A_{n+1} < 1 for n=0..60"))
        bracket = min(table.A(n - 1) + table.A(n + 1) - 2 * q * table.A(n)
                      for n in range(1, 61))
        out.append(_above(f"lemmas3.bracket_positive_{label}", bracket, 0.0,
                          "A_{n-1}+A_{n+1}-(2R/rho)A_n > 0"))
        atil = min(table.A_tilde(n) for n in range(0, 61))
        out.append(_above(f"lemmas3.kernel_coeff_positive_{label}", atil, 0.0,
                          "Atilde_n > 0 for n=0..60"))
    return out


# ------------------------------------------------- coefficient envelopes --

def _suite_lemmas5() -> list[CheckResult]:
    out = []
    spec = demo_problem()
    r0 = 2.0
    table = CoefficientTable(spec, r0=r0)
    consts = bound_constants(spec, r0=r0, table=table)
    q = spec.R / spec.rho

    ratio_low = min(table.A_tilde(n) / (consts.C4 * q ** n) for n in range(0, 41))
    out.append(_above("lemmas5.lower_envelope", ratio_low, 1.0,
                      "Atilde_n >= C4 (R/rho)^n"))
    ratio_up = max(table.A_tilde(n) / (consts.C6 * q ** n) for n in range(0, 41))
    out.append(_below("lemmas5.upper_envelope", ratio_up, 1.0,
                      "Atilde_n < C6 (R/rho)^n"))

    worst = 0.0
    for N in (8, 12):
        for n in range(0, N + 1):
            tail = table.lattice_sum_A_tilde(N, n, exclude_zero=True)
            worst = max(worst, tail / (2 * consts.C7 * q ** (N - n)))
    out.append(_below("lemmas5.lattice_tail_envelope", worst, 1.0,
                      "sum_{l!=0} Atilde_{lN+n} < 2 C7 (R/rho)^{N-n}"))

    sym = max(abs(table.phi(n) - table.phi(-n)) for n in range(0, 30))
    out.append(_below("lemmas5.phi_symmetry", sym, 0.0))

    total = table.phi(0)
    n = 1
    while True:
        t = 2 * table.phi(n)
        total += t
        if t < 1e-16 * total:
            break
        n += 1
    out.append(_below("lemmas5.phi_sum_envelope", total, spec.alpha * consts.C8,
                      "sum_l phi_l <= alpha C8"))

    worst = 0.0
    N = 8
    for n in range(0, N + 1):
        tail = table.lattice_sum_phi(N, n, exclude_zero=True)
        lim = spec.alpha * consts.C9 * (1 + 2 * N / (spec.alpha * spec.R)) \
            * (spec.R / r0) ** (N - n)
        worst = max(worst, tail / lim)
    out.append(_below("lemmas5.phi_lattice_tail", worst, 1.0,
                      "sum_{l!=0} phi_{lN+n} < alpha C9 (1+2N/(aR)) (R/r0)^{N-n}"))

    # data-coefficient envelope for a solution extending to radius r0
    data, g_exact, _ = manufactured_exterior_source(spec.R, spec.alpha, 2.5, 0.9)
    mspec = make_problem(spec.R, spec.alpha, spec.rho, 6, data)
    series = fourier_series(mspec, 40, quad_points=1024)
    sup_g = float(np.max(np.abs(g_exact(r0 * np.exp(1j * np.linspace(0, 2 * np.pi, 720))))))
    worst = max(abs(series[n]) / (table.phi(n) * sup_g) for n in range(0, 41))
    out.append(_below("lemmas5.data_coeff_envelope", worst, 1.0,
                      "|a_n| < phi_n sup_{|x|<=r0}|g|"))

    # aliasing identity for the collocation spectrum
    svec = boundary_rhs(demo_problem(N=6))
    series6 = fourier_series(demo_problem(N=6), 200, quad_points=2048)
    worst = 0.0
    for n in range(-6, 7):
        alias = sum(series6[n + 6 * l] for l in range(-30, 31))
        worst = max(worst, abs(hat_s(svec, n) - alias))
    out.append(_below("lemmas5.aliasing_identity", worst, 1e-8,
                      "s_hat_n = sum_l a_{n+Nl}"))
    return out


# ----------------------------------------------------------------- trace --

def _suite_trace() -> list[CheckResult]:
    out = []
    R = 1.0
    lhs, rhs = trace_inequality_check(
        lambda x, y: np.ones_like(np.asarray(x)),
        lambda x, y: (np.zeros_like(np.asarray(x)), np.zeros_like(np.asarray(x))),
        R)
    out.append(_above("trace.constant_fn_margin", rhs - lhs, 0.0,
                      f"lhs={lhs:.6g} rhs={rhs:.6g}"))

    lhs, rhs = trace_inequality_check(
        lambda x, y: x,
        lambda x, y: (np.ones_like(np.asarray(x)), np.zeros_like(np.asarray(x))),
        R)
    out.append(_above("trace.linear_fn_margin", rhs - lhs, 0.0,
                      f"lhs={lhs:.6g} rhs={rhs:.6g}"))

    rng = np.random.default_rng(20240817)
    margin = math.inf
    for _ in range(20):
        coef = rng.uniform(-1.0, 1.0, size=(5, 5))
        for i in range(5):
            for j in range(5):
                if i + j > 4:
                    coef[i, j] = 0.0

        def u(x, y, c=coef):
            x, y = np.asarray(x), np.asarray(y)
            return sum(c[i, j] * x**i * y**j for i in range(5) for j in range(5))

        def gu(x, y, c=coef):
            x, y = np.asarray(x), np.asarray(y)
            ux = sum(i * c[i, j] * x**(i - 1) * y**j
                     for i in range(1, 5) for j in range(5))
            uy = sum(j * c[i, j] * x**i * y**(j - 1)
                     for i in range(5) for j in range(1, 5))
            return ux + 0.0 * x, uy + 0.0 * x

        lhs, rhs = trace_inequality_check(u, gu, R)
        margin = min(margin, (rhs - lhs) / max(rhs, 1e-300))
    out.append(_above("trace.random_poly_rel_margin", margin, 0.0,
                      "20 random polynomials, degree <= 4"))
    return out


# ----------------------------------------------------------- eigen-cross --

def _suite_eigen_cross() -> list[CheckResult]:
    out = []
    worst = 0.0
    pos = math.inf
    symm = 0.0
    for N in (4, 6, 12, 24):
        spec = demo_problem(N=N)
        table = CoefficientTable(spec)
        f_dft = eigenvalues_dft(assemble_c(spec))
        f_ser = np.array([eigenvalue_series(spec, m, table) for m in range(N)])
        worst = max(worst, float(np.max(np.abs(np.real(f_dft) - f_ser) / np.abs(f_ser))))
        pos = min(pos, float(np.min(f_ser)))
        for m in range(1, N):
            symm = max(symm, abs(f_ser[m] - f_ser[N - m]) / abs(f_ser[m]))
    out.append(_below("eigen_cross.dft_vs_series_rel", worst, 1e-8,
                      "N in {4,6,12,24}"))
    out.append(_above("eigen_cross.series_positive", pos, 0.0))
    out.append(_below("eigen_cross.series_mode_symmetry", symm, 1e-10))

    spec = demo_problem()
    table = CoefficientTable(spec)
    th = 2.0 * np.pi * np.arange(64) / 64
    rec = np.zeros_like(th)
    for n in range(0, 61):
        term = table.A_tilde(n) * np.cos(n * th) / spec.R
        rec += term if n == 0 else 2.0 * term
    worst = float(np.max(np.abs(rec - kernel_c(spec, th))))
    out.append(_below("eigen_cross.kernel_expansion_abs", worst, 1e-8,
                      "(1/R) sum_{|n|<=60} Atilde_n e^{in theta} = c(theta)"))
    return out


# ------------------------------------------------------------- circulant --

def _resolvable_random_specs(count: int, n_cap: int, seed: int,
                             cond_cap: float = 1e6):
    """Random admissible specs restricted to the regime where the inverse is
    resolvable in double precision.

    The condition number grows like (rho/R)^(N/2); beyond ~1e8 the smallest
    eigenvalue drowns in the roundoff of the kernel samples and *no* double
    precision algorithm can invert to 1e-10, so N is capped per draw by the
    estimate (rho/R)^(N/2) <= cond_cap.
    """
    rng = np.random.default_rng(seed)
    specs = []
    while len(specs) < count:
        R = float(rng.uniform(0.5, 2.0))
        alpha = float(rng.uniform(0.5, 2.0))
        rho_low = 1.02 * thm1_threshold(R, alpha)
        rho = float(rng.uniform(rho_low, 4.0 * R))
        n_max = min(n_cap, int(2.0 * math.log(cond_cap) / math.log(rho / R)))
        if n_max < 2:
            continue
        N = int(rng.integers(2, n_max + 1))
        S = AnalyticData(S=lambda th, a=float(rng.uniform(0.3, 2.0)),
                         k=int(rng.integers(0, 4)): a * np.cos(k * th))
        specs.append(make_problem(R, alpha, rho, N, S))
    return specs


def _suite_circulant() -> list[CheckResult]:
    out = []
    specs = _resolvable_random_specs(50, 64, seed=13)
    dev_id = 0.0
    dev_q = 0.0
    dev_res = 0.0
    dev_conj = 0.0
    for spec in specs:
        system = build_system(spec)
        G = circulant_matrix(system.c)
        B = circulant_matrix(system.b)
        dev_id = max(dev_id, float(np.max(np.abs(G @ B - np.eye(spec.N)))))
        sol = solve_charges(spec)
        dev_q = max(dev_q, sol.path_agreement / max(float(np.max(np.abs(sol.Q))), 1e-30))
        dev_res = max(dev_res, sol.residual / max(float(np.max(np.abs(sol.rhs))), 1e-30))
        f = system.eigenvalues
        fmax = float(np.max(np.abs(f)))
        for m in range(1, spec.N):
            dev_conj = max(dev_conj,
                           abs(f[m] - np.conj(f[spec.N - m])) / fmax)
    out.append(_below("circulant.inverse_identity_dev", dev_id, 1e-10,
                      "50 random admissible specs, N <= 64"))
    out.append(_below("circulant.solve_two_path_rel", dev_q, 1e-10))
    out.append(_below("circulant.collocation_residual_rel", dev_res, 1e-9))
    out.append(_below("circulant.conjugate_pair_rel", dev_conj, 1e-12))
    return out


# ----------------------------------------------------------- convergence --

def _single_mode_problem(N: int) -> ProblemSpec:
    return make_problem(1.0, 1.0, 3.0, N, AnalyticData(S=np.cos))


def _single_mode_exact(r, theta):
    # g = I_1(r) cos(theta) / I'_1(1) for R = alpha = 1
    denom = 0.5 * (_sp.iv(0, 1.0) + _sp.iv(2, 1.0))
    return _sp.iv(1, np.asarray(r, dtype=float)) * np.cos(theta) / denom


def _suite_convergence() -> list[CheckResult]:
    out = []
    rr = np.linspace(0.0, 1.0, 40)
    th = np.linspace(0.0, 2.0 * np.pi, 40, endpoint=False)
    RR, TT = np.meshgrid(rr, th)
    pts = RR * np.exp(1j * TT)
    exact = _single_mode_exact(RR, TT)

    sup_err = {}
    for N in (6, 12, 18, 24, 30):
        sol = solve_charges(_single_mode_problem(N))
        sup_err[N] = float(np.max(np.abs(eval_gN(sol, pts) - exact)))
    target = (1.0 / 3.0) ** 6
    worst = max(abs(math.log((sup_err[N + 6] / sup_err[N]) / target))
                for N in (6, 12, 18, 24))
    out.append(_below("convergence.single_mode_step_ratio_logdev", worst,
                      math.log(5.0),
                      "error(N+6)/error(N) within 5x of (R/rho)^6"))

    # bound soundness against an interior H^1 error for the same data
    worst_ratio = math.inf
    for N in (6, 12, 18):
        sol = solve_charges(_single_mode_problem(N))
        rep = error_bound(sol)
        h1 = _single_mode_h1_error_sq(sol)
        worst_ratio = min(worst_ratio, rep.F / h1)
    out.append(_above("convergence.bound_over_h1_ratio", worst_ratio, 1.0,
                      "F >= ||g-g_N||^2_{H^1}"))

    # decay rate of F for data with a known analytic-extension radius
    data, _, _ = manufactured_exterior_source(1.0, 1.0, 2.0, 0.9)
    Fs = {}
    for N in range(6, 31, 2):
        sol = solve_charges(make_problem(1.0, 1.0, 3.0, N, data))
        Fs[N] = error_bound(sol).F
    ns = np.array(sorted(Fs))
    slope = float(np.polyfit(ns, np.log([Fs[n] for n in ns]), 1)[0])
    decay = math.exp(slope)
    out.append(_below("convergence.bound_decay_per_step", decay,
                      max(1.0 / 3.0, 1.0 / 2.0) + 0.15,
                      "exterior source at radius 2"))

    sol = solve_charges(demo_problem(N=6))
    dmax = float(np.max(np.abs(defect(sol, layout(sol.spec).angles))))
    out.append(_below("convergence.defect_at_collocation", dmax,
                      1e-9 * float(np.max(np.abs(sol.rhs)))))
    return out


def _single_mode_h1_error_sq(sol) -> float:
    """Squared H^1 norm of g - g_N by Gauss--Legendre x trapezoid quadrature."""
    spec = sol.spec
    denom = 0.5 * (_sp.iv(0, 1.0) + _sp.iv(2, 1.0))
    nodes, wts = np.polynomial.legendre.leggauss(60)
    r = 0.5 * (nodes + 1.0)
    wr = 0.5 * wts
    th = 2.0 * np.pi * np.arange(192) / 192
    yk = sol.layout.charge_points
    total = 0.0
    for ri, wi in zip(r, wr):
        z = ri * np.exp(1j * th)
        dz = z[:, None] - yk[None, :]
        dist = np.abs(dz)
        gN = _sp.kv(0, dist) @ sol.Q
        grad_fac = -_sp.kv(1, dist)
        gNx = (grad_fac * np.real(dz) / dist) @ sol.Q
        gNy = (grad_fac * np.imag(dz) / dist) @ sol.Q
        ge = _sp.iv(1, ri) * np.cos(th) / denom
        ger = 0.5 * (_sp.iv(0, ri) + _sp.iv(2, ri)) * np.cos(th) / denom
        get_over_r = (-_sp.iv(1, ri) * np.sin(th) / denom / ri) if ri > 0 else 0.0 * th
        gex = ger * np.cos(th) - get_over_r * np.sin(th)
        gey = ger * np.sin(th) + get_over_r * np.cos(th)
        dens = (gN - ge) ** 2 + (gNx - gex) ** 2 + (gNy - gey) ** 2
        total += wi * ri * 2.0 * np.pi * float(np.mean(dens))
    return total


_SUITES = {
    "bessel": _suite_bessel,
    "lemmas3": _suite_lemmas3,
    "lemmas5": _suite_lemmas5,
    "trace": _suite_trace,
    "eigen-cross": _suite_eigen_cross,
    "circulant": _suite_circulant,
    "convergence": _suite_convergence,
}

SUITE_NAMES = tuple(_SUITES) + ("all",)


def run_suite(name: str) -> list[CheckResult]:
    """Run one named suite (or ``all``) and return its check results."""
    if name == "all":
        results = []
        for suite in _SUITES.values():
            results.extend(suite())
        return results
    if name not in _SUITES:
        raise ValueError(
            f"unknown suite {name!r}; choose from {', '.join(SUITE_NAMES)}")
    return _SUITES[name]()
