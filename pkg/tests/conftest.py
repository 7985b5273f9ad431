"""Shared fixtures of the FRACSPEC tests."""

from math import ceil, log

import mpmath
import numpy as np
import pytest

from fracspec.base.interval import IntervalProblem


def ml_oracle(alpha: float, beta: float, x: float, digits: int = 40) -> float:
    """Mittag-Leffler function by direct summation in high precision.

    The working precision is raised by the number of digits lost to
    cancellation, about |x|^(1/alpha)/ln(10) for negative arguments.
    """
    extra = ceil(abs(x)**(1.0/alpha)/log(10.0)) + 5 if x < 0 else 5
    with mpmath.workdps(digits + extra):
        mp_x = mpmath.mpf(x)
        total = mpmath.mpf(0)
        eps = mpmath.mpf(10)**(-digits - extra)
        k = 0
        while True:
            term = mp_x**k*mpmath.rgamma(alpha*k + beta)
            total += term
            if k > abs(x)**(1.0/alpha) + 10 and abs(term) < eps:
                break
            k += 1
        return float(total)


@pytest.fixture(name='oracle')
def fixture_oracle():
    """High-precision Mittag-Leffler reference."""
    return ml_oracle


@pytest.fixture(name='wave_pi')
def fixture_wave_pi() -> IntervalProblem:
    """Wave problem on (0, pi) with 16 modes."""
    return IntervalProblem(np.pi, 'wave', 16)


@pytest.fixture(name='plate_pi')
def fixture_plate_pi() -> IntervalProblem:
    """Petrovsky problem on (0, pi) with 16 modes."""
    return IntervalProblem(np.pi, 'petrovsky', 16)
