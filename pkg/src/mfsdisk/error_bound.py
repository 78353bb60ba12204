"""Computable energy-norm error bound for the collocation solution.

The error h = g - g_N solves the same modified Helmholtz equation with
Neumann data equal to the *defect* S(theta) - dg_N/dn(R e^{i theta}), which
vanishes at the collocation angles.  Chaining a trace inequality on the disk
with an energy identity bounds the squared H^2 norm of h by boundary terms
alone:

    ||h||^2_{H^2}  <=  F(N)  :=  C3 * (norm0_sq + norm1_sq),

where ``norm0_sq`` is the squared boundary L^2 norm of the defect,
``norm1_sq`` collects the squared norms of the x/y tangential-derivative
identities

    (-sin(theta)/R) * d(defect)/dtheta   and   (cos(theta)/R) * d(defect)/dtheta,

and ``C3 = C_Omega^2 / C_2^2`` with the trace constant
``C_Omega = sqrt(1 + 2/R)`` and ``C_2 = min(1, alpha^2)``.  Everything on the
right is computable from the boundary data and the solved charges, so F(N)
is an a-posteriori bound requiring no exact solution.

Two evaluation routes are provided and must agree: trapezoidal quadrature of
the sampled defect (with spectral differentiation for the tangential term)
and the coefficient-space series built from the a_n / Atilde_n tables.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass

import numpy as np

from .problem import boundary_trace
from .solver import MfsSolution, eval_gN_normal_deriv
from .spectral import CoefficientTable, FourierSeries

__all__ = [
    "ErrorConstants",
    "ErrorReport",
    "ResolutionWarning",
    "boundary_norms_quadrature",
    "boundary_norms_spectral",
    "defect",
    "error_bound",
    "error_constants",
    "trace_inequality_check",
]


class ResolutionWarning(UserWarning):
    """Boundary quadrature may be under-resolved."""


@dataclass(frozen=True)
class ErrorConstants:
    """Trace and energy constants entering the bound."""

    C_Omega: float
    C_2: float
    C_3: float


def error_constants(R: float, alpha: float) -> ErrorConstants:
    """C_Omega = sqrt(1 + 2/R), C_2 = min(1, alpha^2), C_3 = C_Omega^2/C_2^2."""
    if R <= 0 or alpha <= 0:
        raise ValueError("R and alpha must be positive")
    c_omega = float(np.sqrt(1.0 + 2.0 / R))
    c2 = float(min(1.0, alpha * alpha))
    return ErrorConstants(C_Omega=c_omega, C_2=c2, C_3=c_omega**2 / c2**2)


@dataclass(frozen=True)
class ErrorReport:
    """Boundary norms and the total bound F for one solve."""

    N: int
    norm0_sq: float
    norm1_sq: float
    F: float
    quad_points: int
    constants: ErrorConstants


def defect(sol: MfsSolution, theta) -> float | np.ndarray:
    """Neumann defect S(theta) - dg_N/dn(R e^{i theta}); zero at collocation
    angles up to the solve residual."""
    trace = boundary_trace(sol.spec, theta)
    deriv = eval_gN_normal_deriv(sol, theta)
    return trace - deriv


def default_quad_points(N: int) -> int:
    return max(256, 16 * N)


def _norms_from_samples(d: np.ndarray, R: float) -> tuple[float, float]:
    """norm0_sq = R * int d^2 dtheta; norm1_sq = (1/R) * int (d')^2 dtheta.

    The tangential-derivative identities contribute sin^2 + cos^2 = 1, so
    their combined squared norm is the single integral of (d'/R)^2 over the
    boundary.  d' is obtained by spectral differentiation (exact for
    band-limited defects); the Nyquist mode is dropped as usual.
    """
    M = len(d)
    e = np.fft.fft(d)
    k = np.fft.fftfreq(M, 1.0 / M)
    if M % 2 == 0:
        k[M // 2] = 0.0
    d_prime = np.real(np.fft.ifft(1j * k * e))
    norm0 = R * 2.0 * np.pi * float(np.mean(d * d))
    norm1 = (1.0 / R) * 2.0 * np.pi * float(np.mean(d_prime * d_prime))
    return norm0, norm1


def boundary_norms_quadrature(sol: MfsSolution,
                              quad_points: int | None = None) -> tuple[float, float]:
    """(norm0_sq, norm1_sq) by trapezoidal quadrature of the sampled defect.

    Requires quad_points >= 8 N so the defect's oscillation between
    collocation nodes is resolved; a doubled-resolution recomputation guards
    against under-sampling and emits a :class:`ResolutionWarning` if either
    norm moves by more than 1e-6 relative.
    """
    N = sol.spec.N
    if quad_points is None:
        quad_points = default_quad_points(N)
    if quad_points < 8 * N:
        raise ValueError(f"quad_points must be >= 8N = {8 * N}, got {quad_points}")
    th = 2.0 * np.pi * np.arange(quad_points) / quad_points
    n0, n1 = _norms_from_samples(np.asarray(defect(sol, th)), sol.spec.R)
    th2 = 2.0 * np.pi * np.arange(2 * quad_points) / (2 * quad_points)
    n0f, n1f = _norms_from_samples(np.asarray(defect(sol, th2)), sol.spec.R)
    # each defect sample carries roundoff ~ eta from the cancellation
    # S - sum Q_k c(.); the induced norm drift has a noise-squared part and a
    # cross term 2 sqrt(noise * norm), so the 1e-6 relative check only means
    # something above that allowance (spectral differentiation amplifies the
    # sample noise by ~M/sqrt(12) in the derivative norm)
    R = sol.spec.R
    s_scale = float(np.max(np.abs(boundary_trace(sol.spec, th))))
    k_scale = float(np.sum(np.abs(sol.Q)) * np.max(np.abs(sol.system.c)))
    eta = 32.0 * np.finfo(float).eps * (s_scale + k_scale)
    noise = {"norm0_sq": 2.0 * np.pi * R * eta**2,
             "norm1_sq": (2.0 * np.pi / R) * (quad_points * eta) ** 2 / 12.0}
    for name, coarse, fine in (("norm0_sq", n0, n0f), ("norm1_sq", n1, n1f)):
        allowance = 1e-6 * abs(fine) + noise[name] + 2.0 * math.sqrt(noise[name] * abs(fine))
        if abs(coarse - fine) > allowance:
            warnings.warn(
                f"{name} changed by {abs(coarse - fine) / max(abs(fine), 1e-300):.2e} "
                f"relative when doubling quad_points={quad_points}; increase the "
                f"resolution",
                ResolutionWarning, stacklevel=2)
    return n0, n1


def boundary_norms_spectral(sol: MfsSolution, series: FourierSeries,
                            table: CoefficientTable,
                            n_limit: int | None = None) -> tuple[float, float]:
    """(norm0_sq, norm1_sq) through the coefficient-space series.

    The defect's n-th Fourier coefficient is
    ``e_n = (a_n T_n - Atilde_n sigma_n) / L_n`` with
    ``L_n = sum_l Atilde_{lN+n}``, ``T_n = sum_{l!=0} Atilde_{lN+n}`` and
    ``sigma_n = sum_{l!=0} a_{lN+n}``; then

        norm0_sq = 2 pi R   * sum_n |e_n|^2,
        norm1_sq = (2 pi/R) * sum_n n^2 |e_n|^2.
    """
    N = sol.spec.N
    R = sol.spec.R
    if n_limit is None:
        n_limit = series.n_max
    n_limit = min(n_limit, series.n_max)

    # the full lattice sum depends only on the residue class; the l != 0 tail
    # depends on the representative n through the excluded term Atilde_n
    lattice_full = {cls: table.lattice_sum_A_tilde(N, cls) for cls in range(N)}

    s0 = 0.0
    s1 = 0.0
    for n in range(-n_limit, n_limit + 1):
        L = lattice_full[n % N]
        T = L - table.A_tilde(n)
        sigma = 0.0 + 0.0j
        l = 1
        while True:
            lo, hi = -l * N + n, l * N + n
            if abs(lo) > series.n_max and abs(hi) > series.n_max:
                break
            sigma += series[lo] + series[hi]
            l += 1
        e_n = (series[n] * T - table.A_tilde(n) * sigma) / L
        mag = abs(e_n) ** 2
        s0 += mag
        s1 += n * n * mag
    return 2.0 * np.pi * R * s0, (2.0 * np.pi / R) * s1


def error_bound(sol: MfsSolution, quad_points: int | None = None) -> ErrorReport:
    """Total bound F = C3 * (norm0_sq + norm1_sq) from the quadrature route.

    F bounds the squared H^2 norm of g - g_N, hence (by embedding) the
    squared uniform error up to an embedding constant.
    """
    if quad_points is None:
        quad_points = default_quad_points(sol.spec.N)
    n0, n1 = boundary_norms_quadrature(sol, quad_points)
    consts = error_constants(sol.spec.R, sol.spec.alpha)
    return ErrorReport(N=sol.spec.N, norm0_sq=n0, norm1_sq=n1,
                       F=consts.C_3 * (n0 + n1), quad_points=quad_points,
                       constants=consts)


def trace_inequality_check(u, grad_u, R: float,
                           quad_points: int = 256,
                           radial_points: int = 64) -> tuple[float, float]:
    """Evaluate both sides of the disk trace inequality

        ||u||^2_{L^2(boundary)}  <=  (1 + 2/R) ||u||^2_{H^1(disk)}

    for a smooth test function.  ``u(x, y)`` and ``grad_u(x, y) -> (ux, uy)``
    must accept arrays.  Returns (lhs, rhs); quadrature is trapezoidal in
    angle and Gauss--Legendre in radius.
    """
    th = 2.0 * np.pi * np.arange(quad_points) / quad_points
    bx, by = R * np.cos(th), R * np.sin(th)
    lhs = R * 2.0 * np.pi * float(np.mean(np.asarray(u(bx, by)) ** 2))

    nodes, wts = np.polynomial.legendre.leggauss(radial_points)
    r = 0.5 * R * (nodes + 1.0)
    wr = 0.5 * R * wts
    h1 = 0.0
    for ri, wi in zip(r, wr):
        x, y = ri * np.cos(th), ri * np.sin(th)
        ux, uy = grad_u(x, y)
        dens = np.asarray(u(x, y)) ** 2 + np.asarray(ux) ** 2 + np.asarray(uy) ** 2
        h1 += wi * ri * 2.0 * np.pi * float(np.mean(dens))
    rhs = (1.0 + 2.0 / R) * h1
    return lhs, rhs
