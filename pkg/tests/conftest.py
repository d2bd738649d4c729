import math

import pytest
from hypothesis import HealthCheck, settings

from crosstide import PhysicalConstants, TidalScale, derive_scale

settings.register_profile(
    "suite",
    deadline=None,
    max_examples=60,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("suite")


@pytest.fixture(scope="session")
def constants() -> PhysicalConstants:
    return PhysicalConstants()


@pytest.fixture(scope="session")
def scale(constants) -> TidalScale:
    return derive_scale(constants)


@pytest.fixture(scope="session")
def unit_scale() -> TidalScale:
    # kappa_M = 1: angles and eigenvalue ratios of the residual family do not
    # depend on the physical scale
    return TidalScale(kappa_M=1.0, a0=1.0)


def frame_gap(theta_a: float, theta_b: float) -> float:
    """Distance between two principal-axis angles on the quotient R/(pi/2)Z.

    An eigenframe is an unoriented pair of orthogonal axes, so angles that
    differ by a multiple of pi/2 describe the same frame (the labels of the
    two axes swap).
    """
    gap = (theta_a - theta_b) % (math.pi / 2.0)
    return min(gap, math.pi / 2.0 - gap)
