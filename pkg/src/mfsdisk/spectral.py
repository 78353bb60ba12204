"""Fourier--Bessel series machinery.

Everything here revolves around three coefficient families:

* ``a_n`` -- Fourier coefficients of the boundary trace S(theta), computed
  spectrally from equispaced samples;
* ``A_n = (1+n) K_{n+1}(alpha rho) I_{n+1}(alpha R)`` and the derived
  ``Atilde_n = sum_r (A_{|n-1|+2r} + A_{|n+1|+2r} - (2R/rho) A_{|n|+2r})``,
  which are the Fourier coefficients of the collocation kernel:
  ``c(theta) = (1/R) sum_n Atilde_n e^{i n theta}``.  Summing Atilde over a
  lattice class gives the circulant eigenvalues,
  ``f(omega^m) = (N/R) sum_l Atilde_{lN+m}`` -- an independent route to the
  DFT values and the reason they are provably positive;
* ``phi_n = alpha (1 + |n|/(alpha R)) (R/r0)^{|n|}`` -- the decay envelope of
  ``a_n`` for data whose solution extends analytically to radius r0 > R.

The exact solution of the Neumann problem is the series
``g(r e^{i theta}) = sum_n I_n(alpha r) / (alpha I'_n(alpha R)) a_n e^{i n theta}``.

All infinite sums use one truncation rule: stop once five consecutive terms
fall below ``tail_tol * |partial sum|`` (default 1e-14); the geometric decay
in R/rho or R/r0 guarantees termination.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass

import numpy as np
from scipy.special import iv

from . import bessel
from .problem import ProblemSpec, boundary_trace

__all__ = [
    "AliasingError",
    "BoundConstants",
    "CoefficientTable",
    "FourierSeries",
    "TruncationWarning",
    "bound_constants",
    "coeff_A",
    "coeff_A_tilde",
    "eigenvalue_series",
    "exact_solution",
    "exact_solution_radial_deriv",
    "fourier_a",
    "fourier_series",
    "hat_s",
    "phi",
]

DEFAULT_TAIL_TOL = 1e-14
#: Consecutive below-tolerance terms required before a series sum stops.
_STOP_RUN = 5
EXACT_SOLUTION_ORDER_CAP = 256


class AliasingError(ValueError):
    """Requested Fourier order too close to the sampling Nyquist limit."""


class TruncationWarning(UserWarning):
    """A truncated series may not have reached the requested tolerance."""


@dataclass(frozen=True)
class FourierSeries:
    """Fourier coefficients a_n, n in [-n_max, n_max], of a boundary trace."""

    coefficients: dict[int, complex]
    n_max: int

    def __getitem__(self, n: int) -> complex:
        return self.coefficients.get(int(n), 0.0 + 0.0j)

    def reconstruct(self, theta) -> np.ndarray:
        """Evaluate sum_n a_n e^{i n theta} (real part)."""
        theta = np.asarray(theta, dtype=float)
        out = np.zeros_like(theta, dtype=complex)
        for n, a in self.coefficients.items():
            out += a * np.exp(1j * n * theta)
        return np.real(out)


def fourier_a(spec: ProblemSpec, n: int, quad_points: int) -> complex:
    """Fourier coefficient a_n = (1/2 pi) int S(theta) e^{-i n theta} dtheta
    by the trapezoidal rule on ``quad_points`` equispaced samples.

    Spectrally accurate for smooth S.  Requires |n| <= quad_points/4 to keep
    an anti-aliasing margin.
    """
    if abs(n) > quad_points / 4:
        raise AliasingError(
            f"|n|={abs(n)} exceeds the anti-aliasing margin quad_points/4="
            f"{quad_points / 4:g}")
    th = 2.0 * np.pi * np.arange(quad_points) / quad_points
    sv = boundary_trace(spec, th)
    return complex(np.sum(sv * np.exp(-1j * n * th)) / quad_points)


def fourier_series(spec: ProblemSpec, n_max: int,
                   quad_points: int | None = None) -> FourierSeries:
    """All coefficients a_n for |n| <= n_max in one FFT pass."""
    if quad_points is None:
        quad_points = max(256, 4 * n_max)
    if n_max > quad_points / 4:
        raise AliasingError(
            f"n_max={n_max} exceeds the anti-aliasing margin quad_points/4="
            f"{quad_points / 4:g}")
    th = 2.0 * np.pi * np.arange(quad_points) / quad_points
    co = np.fft.fft(boundary_trace(spec, th)) / quad_points
    coeffs = {n: complex(co[n % quad_points]) for n in range(-n_max, n_max + 1)}
    return FourierSeries(coefficients=coeffs, n_max=n_max)


def hat_s(samples: np.ndarray, n: int) -> complex:
    """Discrete Fourier coefficient of collocation samples:
    s_hat_n = (1/N) sum_l s_l omega^{-nl}.  N-periodic in n."""
    samples = np.asarray(samples, dtype=float)
    N = len(samples)
    l = np.arange(N)
    return complex(np.sum(samples * np.exp(-2j * np.pi * n * l / N)) / N)


def _i_prime_ratio_terms(spec: ProblemSpec, n: int, r):
    """I_n(alpha r) / (alpha I'_n(alpha R)) for scalar order, array radius."""
    a = spec.alpha
    if n == 0:
        denom = iv(1, a * spec.R)
    else:
        denom = 0.5 * (iv(n - 1, a * spec.R) + iv(n + 1, a * spec.R))
    return iv(abs(n), a * np.asarray(r, dtype=float)) / (a * denom)


def exact_solution(spec: ProblemSpec, series: FourierSeries, r, theta,
                   tail_tol: float = DEFAULT_TAIL_TOL) -> np.ndarray:
    """Reference solution g(r e^{i theta}) from its Fourier--Bessel series.

    The truncation order grows adaptively until five consecutive terms are
    below ``tail_tol`` relative to the partial sum, capped at order 256 (a
    :class:`TruncationWarning` is emitted when the cap or the available
    coefficients stop the sum first).
    """
    r_arr, th_arr = np.broadcast_arrays(np.asarray(r, dtype=float),
                                        np.asarray(theta, dtype=float))
    if np.any(r_arr < 0) or np.any(r_arr > spec.R * (1 + 1e-12)):
        raise ValueError("radius outside [0, R]")
    total = np.zeros(r_arr.shape, dtype=complex)
    below = 0
    last_rel = np.inf
    n = 0
    while True:
        rad = _i_prime_ratio_terms(spec, n, r_arr)
        term = series[n] * rad * np.exp(1j * n * th_arr)
        if n > 0:
            term = term + series[-n] * rad * np.exp(-1j * n * th_arr)
        total += term
        scale = max(float(np.max(np.abs(total))), 1e-300)
        last_rel = float(np.max(np.abs(term))) / scale
        below = below + 1 if last_rel < tail_tol else 0
        if below >= _STOP_RUN:
            break
        n += 1
        if n > min(series.n_max, EXACT_SOLUTION_ORDER_CAP):
            warnings.warn(
                f"series truncated at order {n - 1} with last relative term "
                f"{last_rel:.2e} > tail_tol={tail_tol:.2e}",
                TruncationWarning, stacklevel=2)
            break
    out = np.real(total)
    return float(out) if np.ndim(r) == 0 and np.ndim(theta) == 0 else out


def exact_solution_radial_deriv(spec: ProblemSpec, series: FourierSeries,
                                r, theta,
                                tail_tol: float = DEFAULT_TAIL_TOL) -> np.ndarray:
    """Radial derivative of the reference solution; at r = R it reproduces
    the boundary trace S(theta)."""
    r_arr, th_arr = np.broadcast_arrays(np.asarray(r, dtype=float),
                                        np.asarray(theta, dtype=float))
    a = spec.alpha
    total = np.zeros(r_arr.shape, dtype=complex)
    below = 0
    n = 0
    while True:
        if n == 0:
            num = iv(1, a * r_arr)
            den = iv(1, a * spec.R)
        else:
            num = 0.5 * (iv(n - 1, a * r_arr) + iv(n + 1, a * r_arr))
            den = 0.5 * (iv(n - 1, a * spec.R) + iv(n + 1, a * spec.R))
        rad = num / den
        term = series[n] * rad * np.exp(1j * n * th_arr)
        if n > 0:
            term = term + series[-n] * rad * np.exp(-1j * n * th_arr)
        total += term
        scale = max(float(np.max(np.abs(total))), 1e-300)
        below = below + 1 if float(np.max(np.abs(term))) < tail_tol * scale else 0
        if below >= _STOP_RUN or n >= min(series.n_max, EXACT_SOLUTION_ORDER_CAP):
            break
        n += 1
    out = np.real(total)
    return float(out) if np.ndim(r) == 0 and np.ndim(theta) == 0 else out


class CoefficientTable:
    """Cached A_n, Atilde_n, and phi_n values for one problem geometry.

    A_n is accumulated through the stable ratio chains of :mod:`.bessel`
    (the K and I factors overflow/underflow separately long before their
    product leaves double range).  Entries that underflow double precision
    are stored as 0.0, which is harmless: every consumer truncates its sum
    geometrically before reaching them.
    """

    def __init__(self, spec: ProblemSpec, tail_tol: float = DEFAULT_TAIL_TOL,
                 r0: float | None = None):
        if r0 is not None and r0 <= spec.R:
            raise ValueError(f"extension radius r0 must exceed R (got {r0!r})")
        self.spec = spec
        self.tail_tol = float(tail_tol)
        self.r0 = r0
        x = spec.alpha * spec.rho
        self._A = [float(bessel.bessel_k(1, x) * bessel.bessel_i(1, spec.alpha * spec.R))]
        self._k_ratio_last = float(bessel.bessel_k_ratios(0, x)[0])  # K_1/K_0
        self._A_tilde: dict[int, float] = {}

    def A(self, n: int) -> float:
        """A_n = (1+n) K_{n+1}(alpha rho) I_{n+1}(alpha R), n >= 0."""
        if n != int(n) or n < 0:
            raise ValueError(f"A_n requires integer n >= 0, got {n!r}")
        n = int(n)
        self._extend_A(n)
        return self._A[n]

    def _extend_A(self, n_target: int) -> None:
        x = self.spec.alpha * self.spec.rho
        y = self.spec.alpha * self.spec.R
        n = len(self._A) - 1
        kr = self._k_ratio_last
        while n < n_target:
            n += 1
            kr = 2.0 * n / x + 1.0 / kr          # K_{n+1}/K_n
            ir = bessel.i_ratio(n, y)            # I_{n+1}/I_n
            self._A.append(self._A[-1] * ((n + 1) / n) * kr * ir)
        self._k_ratio_last = kr

    def A_tilde(self, n: int) -> float:
        """Kernel Fourier coefficient Atilde_n; symmetric in n -> -n."""
        n = abs(int(n))
        cached = self._A_tilde.get(n)
        if cached is not None:
            return cached
        R, rho = self.spec.R, self.spec.rho
        total = 0.0
        below = 0
        for r in range(1000):
            term = (self.A(abs(n - 1) + 2 * r) + self.A(n + 1 + 2 * r)
                    - (2.0 * R / rho) * self.A(n + 2 * r))
            total += term
            below = below + 1 if abs(term) <= self.tail_tol * abs(total) else 0
            if below >= _STOP_RUN:
                self._A_tilde[n] = total
                return total
        raise RuntimeError(
            f"Atilde_{n} series failed the stopping rule within 1000 terms")

    def phi(self, n: int) -> float:
        """Envelope phi_n = alpha (1 + |n|/(alpha R)) (R/r0)^{|n|}."""
        if self.r0 is None:
            raise ValueError("table built without an extension radius r0")
        return phi(self.spec, self.r0, n)

    def lattice_sum_A_tilde(self, N: int, m: int, exclude_zero: bool = False) -> float:
        """sum over l of Atilde_{lN+m}, optionally dropping the l = 0 term."""
        total = 0.0 if exclude_zero else self.A_tilde(m)
        below = 0
        for l in range(1, 100_000):
            term = self.A_tilde(l * N + m) + self.A_tilde(-l * N + m)
            total += term
            below = below + 1 if abs(term) <= self.tail_tol * abs(total) else 0
            if below >= _STOP_RUN or term == 0.0:
                return total
        raise RuntimeError("lattice sum of Atilde did not terminate")

    def lattice_sum_phi(self, N: int, m: int, exclude_zero: bool = False) -> float:
        """sum over l of phi_{lN+m}, optionally dropping the l = 0 term."""
        total = 0.0 if exclude_zero else self.phi(m)
        below = 0
        for l in range(1, 100_000):
            term = self.phi(l * N + m) + self.phi(-l * N + m)
            total += term
            below = below + 1 if abs(term) <= self.tail_tol * abs(total) else 0
            if below >= _STOP_RUN or term == 0.0:
                return total
        raise RuntimeError("lattice sum of phi did not terminate")


def coeff_A(spec: ProblemSpec, n: int) -> float:
    """A_n = (1+n) K_{n+1}(alpha rho) I_{n+1}(alpha R); always positive."""
    return CoefficientTable(spec).A(n)


def coeff_A_tilde(spec: ProblemSpec, n: int,
                  tail_tol: float = DEFAULT_TAIL_TOL) -> float:
    """Kernel Fourier coefficient Atilde_n (see module docstring)."""
    return CoefficientTable(spec, tail_tol=tail_tol).A_tilde(n)


def eigenvalue_series(spec: ProblemSpec, m: int,
                      table: CoefficientTable | None = None,
                      tail_tol: float = DEFAULT_TAIL_TOL) -> float:
    """Circulant eigenvalue through the coefficient route:
    f(omega^m) = (N/R) sum_l Atilde_{lN+m}."""
    if not 0 <= m < spec.N:
        raise ValueError(f"mode index must be in [0, N), got {m}")
    if table is None:
        table = CoefficientTable(spec, tail_tol=tail_tol)
    return spec.N / spec.R * table.lattice_sum_A_tilde(spec.N, m)


def phi(spec: ProblemSpec, r0: float, n: int) -> float:
    """Envelope phi_n = alpha (1 + |n|/(alpha R)) (R/r0)^{|n|}; positive and
    symmetric in n.  Requires r0 > R."""
    if r0 <= spec.R:
        raise ValueError(f"extension radius r0 must exceed R (got {r0!r})")
    n = abs(int(n))
    a, R = spec.alpha, spec.R
    return a * (1.0 + n / (a * R)) * (R / r0) ** n


@dataclass(frozen=True)
class BoundConstants:
    """Closed-form constants of the coefficient bounds.

    With q = R/rho and s = R/r0:

    * C5 = 1 - sup_n q A_n / A_{n-1}          (positive above the threshold)
    * C4 = min(C5 e^{-alpha(rho+R)} / 2, Atilde_0):  Atilde_n >= C4 q^{|n|}
    * C6 = (e^{alpha R}/2)(1+q^2)/(1-q^2):         Atilde_n <  C6 q^{|n|}
    * C7 = C6 rho/(rho - R):       sum_{l!=0} Atilde_{lN+n} < 2 C7 q^{N-n}
    * C8 = (1-s)^{-2} (1 + 2/(alpha R)):           sum_l phi_l <= alpha C8
    * C9 = 2 (1-s)^{-2}:
      sum_{l!=0} phi_{lN+n} < alpha C9 (1 + 2N/(alpha R)) s^{N-n}
    """

    C4: float
    C5: float
    C6: float
    C7: float
    C8: float | None = None
    C9: float | None = None


def bound_constants(spec: ProblemSpec, r0: float | None = None,
                    n_sup: int = 400,
                    table: CoefficientTable | None = None) -> BoundConstants:
    """Evaluate the closed-form constants for one geometry.

    The supremum in C5 is scanned over n = 1..n_sup; the ratio decreases
    towards (R/rho)^2, so the scan window is generous.
    """
    if table is None:
        table = CoefficientTable(spec, r0=r0)
    R, rho, a = spec.R, spec.rho, spec.alpha
    q = R / rho
    ratios = [q * table.A(n) / table.A(n - 1) for n in range(1, n_sup + 1)]
    C5 = 1.0 - max(ratios)
    C4 = min(C5 * np.exp(-a * (rho + R)) / 2.0, table.A_tilde(0))
    C6 = np.exp(a * R) / 2.0 * (1.0 + q * q) / (1.0 - q * q)
    C7 = C6 * rho / (rho - R)
    C8 = C9 = None
    if r0 is not None:
        if r0 <= R:
            raise ValueError(f"extension radius r0 must exceed R (got {r0!r})")
        C8 = (r0 / (r0 - R)) ** 2 * (1.0 + 2.0 / (a * R))
        C9 = 2.0 * (r0 / (r0 - R)) ** 2
    return BoundConstants(C4=float(C4), C5=float(C5), C6=float(C6),
                          C7=float(C7), C8=C8, C9=C9)
