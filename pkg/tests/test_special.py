"""Tests of the Gamma and Mittag-Leffler functions."""

import math

import mpmath
import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from fracspec.base import ArgumentError, ConvergenceError, DomainError, \
    GammaOverflowError, GammaPoleError
from fracspec.tools.math import laplace_transform
from fracspec.tools.special import MLParams, crossover_radius, gamma, \
    mittag_leffler, ml_array, ml_asymptotic, ml_series, ml_value, \
    power_ratio_max, rgamma


@pytest.mark.parametrize('x', [0.1, 0.5, 1.3, 2.5, 7.7, 20.2,
                               -0.5, -1.7, -10.3])
def test_gamma_matches_math(x):
    assert gamma(x) == pytest.approx(math.gamma(x), rel=1e-13)


def test_gamma_scan():
    with mpmath.workdps(30):
        for x in np.linspace(-19.95, 170.95, 1910):
            ref = float(mpmath.gamma(mpmath.mpf(float(x))))
            assert gamma(x) == pytest.approx(ref, rel=1e-13)


def test_gamma_integers_exact():
    for n in range(1, 20):
        assert gamma(n) == math.factorial(n-1)


def test_gamma_errors():
    for x in (0.0, -1.0, -7.0):
        with pytest.raises(GammaPoleError):
            gamma(x)
    with pytest.raises(GammaOverflowError):
        gamma(172.0)


def test_rgamma_poles_and_overflow():
    assert rgamma(0.0) == 0.0
    assert rgamma(-3.0) == 0.0
    assert rgamma(200.0) == 0.0
    assert rgamma(-0.5) == pytest.approx(1.0/math.gamma(-0.5), rel=1e-13)


def test_params_validation():
    with pytest.raises(ArgumentError):
        MLParams(0.0, 1.0, 1.0)
    with pytest.raises(ArgumentError):
        MLParams(1.5, -1.0, 1.0)
    with pytest.raises(ArgumentError):
        MLParams(1.5, 1.0, float('nan'))


def test_ml_exponential():
    xs = np.linspace(-30.0, 30.0, 61)
    vals = ml_array(1.0, 1.0, xs)
    np.testing.assert_allclose(vals, np.exp(xs), rtol=1e-12, atol=0)


def test_ml_trigonometric():
    xs = np.linspace(0.0, 400.0, 81)
    np.testing.assert_allclose(ml_array(2.0, 1.0, -xs), np.cos(np.sqrt(xs)),
                               rtol=0, atol=1e-10)
    xs = xs[1:]
    np.testing.assert_allclose(ml_array(2.0, 2.0, -xs),
                               np.sin(np.sqrt(xs))/np.sqrt(xs),
                               rtol=0, atol=1e-10)


def test_ml_at_zero():
    res = mittag_leffler(MLParams(1.5, 2.5, 0.0))
    assert res.value == pytest.approx(1.0/math.gamma(2.5), rel=1e-15)
    assert res.branch == 'series'


@pytest.mark.parametrize('alpha,beta,x', [
    (1.5, 1.0, -1.0), (1.5, 1.5, -3.0), (1.8, 2.0, -20.0),
    (1.2, 1.0, -5.0), (1.5, 0.5, -12.0), (0.5, 1.0, -2.0),
    (1.5, 1.0, 4.0),
])
def test_ml_matches_oracle(oracle, alpha, beta, x):
    ref = oracle(alpha, beta, x)
    res = mittag_leffler(MLParams(alpha, beta, x))
    assert res.value == pytest.approx(ref, rel=1e-12, abs=1e-14)


def test_series_example(oracle):
    res = ml_series(MLParams(1.5, 1.0, -1.0))
    assert res.value == pytest.approx(oracle(1.5, 1.0, -1.0), abs=1e-15)
    assert res.terms_used > 5


def test_series_term_cap():
    with pytest.raises(ConvergenceError):
        ml_series(MLParams(1.5, 1.0, -30.0), max_terms=5)


def test_asymptotic_against_oracle(oracle):
    res = ml_asymptotic(MLParams(1.5, 1.0, -50.0))
    assert res.branch == 'asymptotic'
    assert abs(res.value - oracle(1.5, 1.0, -50.0)) \
        <= 10*res.est_abs_error
    res = ml_asymptotic(MLParams(2.0, 1.0, -400.0))
    assert res.value == pytest.approx(math.cos(20.0), abs=1e-8)
    res = ml_asymptotic(MLParams(1.5, 1.0, -400.0))
    assert res.value == pytest.approx(oracle(1.5, 1.0, -400.0), abs=1e-8)


def test_asymptotic_pole_skip():
    par = MLParams(1.5, 1.5, -50.0)
    first = ml_asymptotic(par, 1)
    second = ml_asymptotic(par, 2)
    assert np.isfinite(first.value)
    assert first.terms_used == 0
    assert first.est_abs_error >= rgamma(-1.5)/2500
    assert second.value - first.value == pytest.approx(-rgamma(-1.5)/2500,
                                                       rel=1e-10)


def test_asymptotic_domain():
    with pytest.raises(DomainError):
        ml_asymptotic(MLParams(1.5, 1.0, 50.0))
    with pytest.raises(DomainError):
        ml_asymptotic(MLParams(1.5, 1.0, -2.0))
    with pytest.raises(DomainError):
        ml_asymptotic(MLParams(2.5, 1.0, -500.0))


@pytest.mark.parametrize('alpha,beta', [(1.5, 1.0), (1.5, 2.0), (1.8, 1.0),
                                        (1.2, 1.5), (1.5, 1.5)])
def test_crossover_continuity(alpha, beta):
    tol = 1e-9
    par = MLParams(alpha, beta, -crossover_radius(alpha, beta, tol))
    assert abs(ml_series(par).value - ml_asymptotic(par).value) <= 2*tol


def test_crossover_radius():
    assert crossover_radius(1.5, 1.0) == pytest.approx(10.0)
    assert crossover_radius(1.5, 1.0, 1e-15) > crossover_radius(1.5, 1.0)
    for tol in (0.0, 1.0, 1.0e4):
        with pytest.raises(ArgumentError):
            crossover_radius(1.5, 1.0, tol)


def test_dispatch_branches():
    assert mittag_leffler(MLParams(1.5, 1.0, -5.0)).branch == 'series'
    assert mittag_leffler(MLParams(1.5, 1.0, -1.0e4)).branch == 'asymptotic'


@pytest.mark.parametrize('alpha,beta', [(1.2, 1.0), (1.5, 1.0), (1.8, 1.0),
                                        (1.5, 2.0), (1.8, 1.8), (1.2, 0.2),
                                        (1.5, 0.5), (1.8, 0.8)])
def test_decay_bound(alpha, beta):
    xs = np.concatenate((np.linspace(0.0, 100.0, 101),
                         np.geomspace(100.0, 1.0e6, 41)))
    bound = np.max((1.0 + xs)*np.abs(ml_array(alpha, beta, -xs)))
    assert np.isfinite(bound)
    assert bound < 100.0


def _fd(func, t, h=1e-5):
    return (func(t+h) - func(t-h))/(2*h)


@pytest.mark.parametrize('alpha,lam', [(1.5, 1.0), (1.2, 2.0), (1.8, 0.5)])
def test_derivative_identities(alpha, lam):
    for t in (0.3, 1.0, 2.0):
        def e_a1(s):
            return ml_value(alpha, 1.0, -lam*s**alpha)

        def e_aa(s):
            return s**(alpha-1)*ml_value(alpha, alpha, -lam*s**alpha)

        def e_a2(s):
            return s*ml_value(alpha, 2.0, -lam*s**alpha)

        ref = -lam*e_aa(t)
        assert _fd(e_a1, t) == pytest.approx(ref, rel=1e-6, abs=1e-8)
        ref = t**(alpha-2)*ml_value(alpha, alpha-1, -lam*t**alpha)
        assert _fd(e_aa, t) == pytest.approx(ref, rel=1e-6, abs=1e-8)
        assert _fd(e_a2, t) == pytest.approx(e_a1(t), rel=1e-6,
                                             abs=1e-8)


@pytest.mark.slow
@pytest.mark.parametrize('alpha,beta,lam,z', [
    (1.5, 1.0, 1.0, 2.0), (1.5, 2.0, 1.0, 1.0), (1.2, 1.2, 0.5, 2.0),
    (1.8, 1.0, 2.0, 1.5),
])
def test_laplace_identity(alpha, beta, lam, z):
    def func(t):
        return t**(beta-1)*ml_value(alpha, beta, -lam*t**alpha)

    ref = z**(alpha-beta)/(z**alpha + lam)
    assert laplace_transform(func, z) == pytest.approx(ref, rel=1e-6)


@pytest.mark.parametrize('beta', np.arange(1, 10)/10.0)
def test_power_ratio_max(beta):
    xs = np.linspace(1e-6, 50.0, 200001)
    pos, vmax = power_ratio_max(beta)
    assert vmax == pytest.approx(np.max(xs**beta/(1+xs)), abs=1e-6)
    assert pos == pytest.approx(beta/(1-beta))


def test_power_ratio_domain():
    for beta in (0.0, 1.0, 1.5):
        with pytest.raises(DomainError):
            power_ratio_max(beta)


@given(st.floats(0.5, 2.0), st.floats(0.2, 3.0))
@settings(deadline=None, max_examples=30)
def test_value_at_origin(alpha, beta):
    assert ml_value(alpha, beta, 0.0) == pytest.approx(rgamma(beta),
                                                       rel=1e-15)


def test_array_shape():
    xs = np.zeros((2, 3))
    assert ml_array(1.5, 1.0, xs).shape == (2, 3)
