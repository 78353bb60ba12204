"""Circulant collocation solver.

Placing charges at rho*omega^k and collocation points at R*omega^j turns the
interaction matrix into a real circulant G with first row

    c_l = -alpha K_1(alpha d(theta_l)) (R - rho cos theta_l) / d(theta_l),
    d(theta) = sqrt(R^2 + rho^2 - 2 R rho cos theta),  theta_l = 2 pi l / N,

so everything reduces to length-N vector arithmetic: eigenvalues are the
DFT values f(omega^m) = sum_l c_l omega^{ml}, the inverse is the circulant
built from b_k = (1/N) sum_j omega^{jk} / f(omega^j), and the charge
strengths solve G Q = S.

Q is computed along two independent routes -- division in eigenvalue space
and explicit convolution with b -- and the two must agree; a disagreement
beyond the conditioning-aware tolerance means a broken build, not bad data.
"""

from __future__ import annotations

import time
from dataclasses import dataclass

import numpy as np
from scipy import special as _sp

from .problem import PointLayout, ProblemSpec, boundary_rhs, layout

__all__ = [
    "CirculantSystem",
    "MfsSolution",
    "SingularSystemError",
    "assemble_c",
    "build_system",
    "circulant_inverse",
    "circulant_matrix",
    "eigenvalues_dft",
    "eval_gN",
    "eval_gN_normal_deriv",
    "kernel_c",
    "kernel_distance",
    "solve_charges",
]

#: Eigenvalues smaller than this fraction of the largest are treated as zero.
SINGULAR_TOL_FACTOR = 1e-13


class SingularSystemError(ValueError):
    """Collocation system has a numerically zero eigenvalue."""

    def __init__(self, mode: int, value: float, tol: float):
        self.mode = mode
        self.value = value
        self.tol = tol
        super().__init__(
            f"collocation eigenvalue f(omega^{mode}) = {value:.3e} is below "
            f"the singularity tolerance {tol:.3e}")


def kernel_distance(spec: ProblemSpec, theta) -> np.ndarray:
    """Distance d(theta) = |R - rho e^{-i theta}| between a boundary point and
    a charge point separated by angle theta.  Always >= rho - R > 0."""
    theta = np.asarray(theta, dtype=float)
    return np.sqrt(spec.R**2 + spec.rho**2 - 2.0 * spec.R * spec.rho * np.cos(theta))


def kernel_c(spec: ProblemSpec, theta) -> np.ndarray:
    """Continuous interaction kernel c(theta): the outward normal derivative,
    taken at a boundary point, of the fundamental solution K_0(alpha |x - y|)
    for a charge y at angular offset theta on the circle of radius rho."""
    theta = np.asarray(theta, dtype=float)
    d = kernel_distance(spec, theta)
    return -spec.alpha * _sp.kv(1, spec.alpha * d) * (spec.R - spec.rho * np.cos(theta)) / d


def assemble_c(spec: ProblemSpec) -> np.ndarray:
    """First-row entries c_l = c(2 pi l / N), l = 0..N-1."""
    return kernel_c(spec, 2.0 * np.pi * np.arange(spec.N) / spec.N)


def eigenvalues_dft(c: np.ndarray) -> np.ndarray:
    """Circulant eigenvalues f(omega^m) = sum_l c_l omega^{ml}, m = 0..N-1.

    Direct O(N^2) summation by default; for power-of-two N the equivalent
    FFT path (N * ifft) is used.  For the symmetric first rows arising here
    the values are real up to roundoff.
    """
    c = np.asarray(c, dtype=float)
    N = len(c)
    if N < 2:
        raise ValueError(f"need at least 2 entries, got {N}")
    if N & (N - 1) == 0:
        return np.fft.ifft(c) * N
    m = np.arange(N)
    return np.exp(2j * np.pi * np.outer(m, m) / N) @ c


def circulant_inverse(c: np.ndarray, eigenvalues: np.ndarray | None = None,
                      tol_factor: float = SINGULAR_TOL_FACTOR) -> np.ndarray:
    """First-row entries b_k = (1/N) sum_j omega^{jk} / f(omega^j) of G^{-1}.

    Raises :class:`SingularSystemError` naming the first mode whose
    eigenvalue falls below ``tol_factor * max |f|``.
    """
    c = np.asarray(c, dtype=float)
    f = eigenvalues_dft(c) if eigenvalues is None else np.asarray(eigenvalues)
    tol = tol_factor * float(np.max(np.abs(f)))
    small = np.abs(f) <= tol
    if np.any(small):
        mode = int(np.argmax(small))
        raise SingularSystemError(mode, float(np.abs(f[mode])), tol)
    N = len(c)
    b = np.fft.ifft(1.0 / f) if N & (N - 1) == 0 else _idft(1.0 / f)
    return np.real(b)


def _idft(v: np.ndarray) -> np.ndarray:
    N = len(v)
    m = np.arange(N)
    return (np.exp(2j * np.pi * np.outer(m, m) / N) @ v) / N


def circulant_matrix(c: np.ndarray) -> np.ndarray:
    """Dense N x N circulant with first row c (row k is c shifted right k)."""
    c = np.asarray(c, dtype=float)
    N = len(c)
    j, k = np.meshgrid(np.arange(N), np.arange(N))
    return c[(j - k) % N]


@dataclass(frozen=True)
class CirculantSystem:
    """Assembled collocation system: first row, eigenvalues, inverse row."""

    c: np.ndarray
    eigenvalues: np.ndarray
    b: np.ndarray


def build_system(spec: ProblemSpec) -> CirculantSystem:
    c = assemble_c(spec)
    f = eigenvalues_dft(c)
    b = circulant_inverse(c, f)
    return CirculantSystem(c=c, eigenvalues=f, b=b)


@dataclass(frozen=True)
class MfsSolution:
    """Charge strengths Q for a problem instance, plus solve diagnostics."""

    spec: ProblemSpec
    layout: PointLayout
    system: CirculantSystem
    Q: np.ndarray
    rhs: np.ndarray
    residual: float
    path_agreement: float
    wall_seconds: float


def solve_charges(spec: ProblemSpec) -> MfsSolution:
    """Solve G Q = S for the charge strengths.

    Two routes are evaluated: eigenvalue-space division (DFT of S over f,
    inverse DFT) and the explicit convolution Q_k = sum_l s_l b_{(l-k) mod N}.
    Their maximum deviation is stored and checked against
    ``max(1e-10, 200 eps cond(G)) * max|Q|``; the floor is what roundoff
    can provably reach, the scaling covers legal but extreme conditioning.
    """
    t0 = time.perf_counter()
    lay = layout(spec)
    svec = boundary_rhs(spec)
    system = build_system(spec)
    f = system.eigenvalues
    N = spec.N

    q_eigen = np.real(_inv_transform(np.fft.fft(svec) / f))
    idx = np.arange(N)
    q_conv = np.array([np.dot(svec, system.b[(idx - k) % N]) for k in range(N)])

    agreement = float(np.max(np.abs(q_eigen - q_conv)))
    scale = max(float(np.max(np.abs(q_eigen))), 1e-30)
    cond = float(np.max(np.abs(f)) / np.min(np.abs(f)))
    tol = max(1e-10, 200.0 * np.finfo(float).eps * cond) * max(scale, 1.0)
    if agreement > tol:
        raise RuntimeError(
            f"eigenvalue-space and convolution solves disagree by {agreement:.3e} "
            f"(tolerance {tol:.3e}); solver is inconsistent")

    resid = float(np.max(np.abs(circulant_matrix(system.c) @ q_eigen - svec)))
    return MfsSolution(
        spec=spec, layout=lay, system=system, Q=q_eigen, rhs=svec,
        residual=resid, path_agreement=agreement,
        wall_seconds=time.perf_counter() - t0)


def _inv_transform(v: np.ndarray) -> np.ndarray:
    N = len(v)
    return np.fft.ifft(v) if N & (N - 1) == 0 else _idft(v)


def eval_gN(sol: MfsSolution, points) -> float | np.ndarray:
    """Field value g_N(x) = sum_k Q_k K_0(alpha |x - y_k|) for |x| <= R.

    ``points`` are complex numbers (scalar or array).  Evaluation outside
    the closed disk is a domain error: the formula extends but the solution
    contract does not.
    """
    pts = np.asarray(points, dtype=complex)
    R = sol.spec.R
    if np.any(np.abs(pts) > R * (1.0 + 1e-12)):
        raise ValueError("evaluation point outside the closed disk |x| <= R")
    flat = np.atleast_1d(pts).ravel()
    dist = np.abs(flat[:, None] - sol.layout.charge_points[None, :])
    vals = _sp.kv(0, sol.spec.alpha * dist) @ sol.Q
    if np.ndim(pts) == 0:
        return float(vals[0])
    return vals.reshape(pts.shape)


def eval_gN_normal_deriv(sol: MfsSolution, theta) -> float | np.ndarray:
    """Normal derivative of g_N at the boundary point R e^{i theta}:
    sum_k Q_k c(theta - theta_k).  At collocation angles it reproduces the
    boundary data to the solve residual."""
    theta = np.asarray(theta, dtype=float)
    flat = np.atleast_1d(theta).ravel()
    vals = kernel_c(sol.spec, flat[:, None] - sol.layout.angles[None, :]) @ sol.Q
    if np.ndim(theta) == 0:
        return float(vals[0])
    return vals.reshape(theta.shape)
