"""Problem specification: disk geometry, boundary data, point layouts, and
the admissibility threshold for the charge radius.

The boundary-value problem is ``(Laplacian - alpha^2) g = 0`` on the disk
B(0, R) with Neumann data ``dg/dn = s`` on the circle r = R.  Boundary data
comes in two flavours:

* :class:`AnalyticData` -- an explicit 2*pi-periodic trace S(theta);
* :class:`PulseData` -- data induced by a radial kernel Phi centred at a
  point P inside the disk, ``s = -d Phi(|x - P|)/dn``, the form arising
  when a localized pulse interacts with the domain boundary.

Charge points sit on a concentric circle of radius rho > R.  The closed-form
threshold :func:`thm1_threshold` gives the radius above which the collocation
system is provably nonsingular for every N; below it, construction still
succeeds but carries an :class:`AdmissibilityWarning`.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass, field
from typing import Callable

import numpy as np

__all__ = [
    "AdmissibilityWarning",
    "AnalyticData",
    "BoundaryData",
    "PointLayout",
    "ProblemSpec",
    "PulseData",
    "PulseKernel",
    "boundary_rhs",
    "boundary_trace",
    "exp_sqrt_kernel",
    "gauss_kernel",
    "layout",
    "make_problem",
    "thm1_threshold",
]


class AdmissibilityWarning(UserWarning):
    """Charge radius below the guaranteed-nonsingular threshold."""


def thm1_threshold(R: float, alpha: float) -> float:
    """Critical charge radius rho* = sqrt(4 a^2 R^2 + 6 - 2 sqrt(4 a^2 R^2 + 9)) / a.

    For rho > rho* every collocation eigenvalue is strictly positive, for
    any point count N.  Always rho* < 2R, so rho >= 2R is a simple
    sufficient choice.
    """
    if not (np.isfinite(R) and R > 0.0):
        raise ValueError(f"R must be finite and > 0, got {R!r}")
    if not (np.isfinite(alpha) and alpha > 0.0):
        raise ValueError(f"alpha must be finite and > 0, got {alpha!r}")
    y2 = 4.0 * alpha * alpha * R * R
    return float(np.sqrt(y2 + 6.0 - 2.0 * np.sqrt(y2 + 9.0)) / alpha)


@dataclass(frozen=True)
class PulseKernel:
    """Radial kernel Phi(r) together with its analytic derivative Phi'(r)."""

    name: str
    phi: Callable[[np.ndarray], np.ndarray]
    dphi: Callable[[np.ndarray], np.ndarray]


def exp_sqrt_kernel(alpha: float) -> PulseKernel:
    """Kernel Phi(r) = exp(-alpha r)/sqrt(r), the far-field profile of the
    fundamental solution."""

    def phi(r):
        r = np.asarray(r, dtype=float)
        return np.exp(-alpha * r) / np.sqrt(r)

    def dphi(r):
        r = np.asarray(r, dtype=float)
        return -np.exp(-alpha * r) * (alpha + 0.5 / r) / np.sqrt(r)

    return PulseKernel("exp_sqrt", phi, dphi)


def gauss_kernel() -> PulseKernel:
    """Gaussian kernel Phi(r) = exp(-r^2)."""

    def phi(r):
        r = np.asarray(r, dtype=float)
        return np.exp(-r * r)

    def dphi(r):
        r = np.asarray(r, dtype=float)
        return -2.0 * r * np.exp(-r * r)

    return PulseKernel("gauss", phi, dphi)


@dataclass(frozen=True)
class AnalyticData:
    """Explicit boundary trace S(theta); must be 2*pi-periodic."""

    S: Callable[[np.ndarray], np.ndarray]
    name: str = "analytic"

    def __post_init__(self):
        probe = np.array([0.0, 0.7, 1.9, 3.3, 5.1])
        a = np.asarray(self.S(probe), dtype=float)
        b = np.asarray(self.S(probe + 2.0 * np.pi), dtype=float)
        scale = max(1.0, float(np.max(np.abs(a))))
        if np.max(np.abs(a - b)) > 1e-12 * scale:
            raise ValueError("boundary trace is not 2*pi-periodic to 1e-12")


@dataclass(frozen=True)
class PulseData:
    """Boundary data -d Phi(|x - P|)/dn from a pulse at P, |P| < R."""

    kernel: PulseKernel
    P: complex
    name: str = "pulse"


BoundaryData = AnalyticData | PulseData


@dataclass(frozen=True)
class ProblemSpec:
    """Validated problem instance.

    ``thm1_satisfied`` records whether rho clears the nonsingularity
    threshold; construction never silently repairs inputs.
    """

    R: float
    alpha: float
    rho: float
    N: int
    boundary: BoundaryData
    thm1_satisfied: bool = field(default=False)


def make_problem(R: float, alpha: float, rho: float, N: int,
                 boundary: BoundaryData) -> ProblemSpec:
    """Validate all constraints and build a :class:`ProblemSpec`.

    Violations are collected and reported together.  A charge radius at or
    below the threshold is legal (the guarantee is only sufficient) but
    emits an :class:`AdmissibilityWarning`.
    """
    errors = []
    if not (np.isfinite(R) and R > 0.0):
        errors.append(f"R must be finite and > 0 (got {R!r})")
    if not (np.isfinite(alpha) and alpha > 0.0):
        errors.append(f"alpha must be finite and > 0 (got {alpha!r})")
    if not (np.isfinite(rho) and rho > 0.0):
        errors.append(f"rho must be finite and > 0 (got {rho!r})")
    elif np.isfinite(R) and R > 0.0 and rho <= R:
        errors.append(f"rho must exceed R strictly (rho={rho!r}, R={R!r})")
    if N != int(N) or int(N) < 2:
        errors.append(f"N must be an integer >= 2 (got {N!r})")
    if isinstance(boundary, PulseData):
        if np.isfinite(R) and R > 0.0 and abs(boundary.P) >= R:
            errors.append(
                f"pulse position must satisfy |P| < R (|P|={abs(boundary.P)!r}, R={R!r})")
    elif not isinstance(boundary, AnalyticData):
        errors.append(f"boundary must be AnalyticData or PulseData (got {type(boundary)!r})")
    if errors:
        raise ValueError("invalid problem specification: " + "; ".join(errors))

    threshold = thm1_threshold(R, alpha)
    ok = rho > threshold
    if not ok:
        warnings.warn(
            f"charge radius rho={rho:g} is at or below the nonsingularity "
            f"threshold {threshold:.6g}; the collocation system may still be "
            f"solvable but positivity of its eigenvalues is not guaranteed",
            AdmissibilityWarning, stacklevel=2)
    return ProblemSpec(float(R), float(alpha), float(rho), int(N), boundary, ok)


@dataclass(frozen=True)
class PointLayout:
    """Charge points rho*omega^k and collocation points R*omega^j, with
    omega = exp(2*pi*i/N).  Indices run 0..N-1."""

    charge_points: np.ndarray
    collocation_points: np.ndarray
    angles: np.ndarray
    omega: complex


def layout(spec: ProblemSpec) -> PointLayout:
    """Equispaced charge/collocation layout on concentric circles."""
    angles = 2.0 * np.pi * np.arange(spec.N) / spec.N
    unit = np.exp(1j * angles)
    return PointLayout(
        charge_points=spec.rho * unit,
        collocation_points=spec.R * unit,
        angles=angles,
        omega=complex(np.exp(2j * np.pi / spec.N)),
    )


def boundary_trace(spec: ProblemSpec, theta) -> np.ndarray:
    """Boundary data S(theta) = s(R e^{i theta}) as a continuous function.

    For pulse data this is
    ``-Phi'(|x - P|) * (|x| - Re((x/|x|) conj(P))) / |x - P|`` at x = R e^{i theta}.
    """
    theta = np.asarray(theta, dtype=float)
    if isinstance(spec.boundary, AnalyticData):
        return np.asarray(spec.boundary.S(theta), dtype=float)
    P = spec.boundary.P
    x = spec.R * np.exp(1j * theta)
    dist = np.abs(x - P)
    radial = spec.R - np.real(np.exp(1j * theta) * np.conj(P))
    return -np.asarray(spec.boundary.kernel.dphi(dist), dtype=float) * radial / dist


def boundary_rhs(spec: ProblemSpec) -> np.ndarray:
    """Collocation right-hand side s_j = S(theta_j), j = 0..N-1."""
    return boundary_trace(spec, layout(spec).angles)
