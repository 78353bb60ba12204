"""Fundamental-solutions solver for the Neumann problem of the modified
Helmholtz equation ``(Laplacian - alpha^2) g = 0`` on a disk, with circulant
collocation algebra, a Fourier--Bessel reference solution, and a computable
boundary-integral error bound F(N)."""

from .bessel import (bessel_i, bessel_i_prime, bessel_i_ratios, bessel_k,
                     bessel_k_prime, bessel_k_ratios)
from .error_bound import (ErrorConstants, ErrorReport, ResolutionWarning,
                          boundary_norms_quadrature, boundary_norms_spectral,
                          defect, error_bound, error_constants,
                          trace_inequality_check)
from .problem import (AdmissibilityWarning, AnalyticData, BoundaryData,
                      PointLayout, ProblemSpec, PulseData, PulseKernel,
                      boundary_rhs, boundary_trace, exp_sqrt_kernel,
                      gauss_kernel, layout, make_problem, thm1_threshold)
from .solver import (CirculantSystem, MfsSolution, SingularSystemError,
                     assemble_c, build_system, circulant_inverse,
                     circulant_matrix, eigenvalues_dft, eval_gN,
                     eval_gN_normal_deriv, kernel_c, kernel_distance,
                     solve_charges)
from .spectral import (AliasingError, BoundConstants, CoefficientTable,
                       FourierSeries, TruncationWarning, bound_constants,
                       coeff_A, coeff_A_tilde, eigenvalue_series,
                       exact_solution, exact_solution_radial_deriv, fourier_a,
                       fourier_series, hat_s, phi)

__version__ = "0.1.0"
