import numpy as np
import pytest

from mfsdisk import (AnalyticData, PulseData, exp_sqrt_kernel, gauss_kernel,
                     make_problem)

# Reference pulse problem used throughout: unit disk, alpha = 1, charges on
# the circle of radius 3, pulse at 0.2 e^{i pi/3} with the exp/sqrt kernel.
REF_R = 1.0
REF_ALPHA = 1.0
REF_RHO = 3.0
REF_P = 0.2 * np.exp(1j * np.pi / 3)


def pulse_problem(N=6, P=REF_P, kernel="exp_sqrt", rho=REF_RHO):
    kern = exp_sqrt_kernel(REF_ALPHA) if kernel == "exp_sqrt" else gauss_kernel()
    return make_problem(REF_R, REF_ALPHA, rho, N, PulseData(kernel=kern, P=P))


def single_mode_problem(N=6):
    return make_problem(REF_R, REF_ALPHA, REF_RHO, N, AnalyticData(S=np.cos))


@pytest.fixture
def ref_spec():
    return pulse_problem()


@pytest.fixture
def single_mode_spec():
    return single_mode_problem()
