"""Tests of the discrete fractional operators."""

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from fracspec.base import ArgumentError, FracOrder, SampledFunction
from fracspec.tools.fractional import caputo_01, caputo_12, \
    gagliardo_seminorm, memory_identity_lhs, rl_integral, sobolev_norm
from fracspec.tools.scalar import ScalarProblem, scalar_solution
from fracspec.tools.special import gamma


def power(p, dt=1e-3, t_max=1.0):
    return SampledFunction.from_function(lambda t: t**p, t_max, dt)


def rel_error(res, exact, t_min=0.1):
    mask = res.times >= t_min
    return np.max(np.abs(res.values[mask]/exact[mask] - 1.0))


def test_order_ranges():
    assert FracOrder(1.0, 'rl_integral').order == 1.0
    for order, kind in ((1.0, 'caputo_01'), (2.0, 'caputo_12'),
                        (0.0, 'rl_integral'), (0.5, 'caputo_12')):
        with pytest.raises(ArgumentError):
            FracOrder(order, kind)
    with pytest.raises(ArgumentError):
        FracOrder(0.5, 'grunwald')


def test_sampled_function():
    f = SampledFunction.from_function(np.sin, 1.0, 0.1)
    assert len(f) == 11
    assert f.at(0.5) == pytest.approx(np.sin(0.5))
    with pytest.raises(ArgumentError):
        f.index(2.0)
    with pytest.raises(ArgumentError):
        SampledFunction(0.0, 0.0, [1.0, 2.0])
    with pytest.raises(ValueError):
        f.values[0] = 1.0


@pytest.mark.parametrize('beta', [0.3, 0.5, 0.8, 1.0])
@pytest.mark.parametrize('p', [0.0, 1.0, 2.0, 3.0])
def test_rl_power_rule(beta, p):
    f = power(p)
    exact = gamma(p+1)/gamma(p+1+beta)*f.times**(p+beta)
    assert rel_error(rl_integral(beta, f), exact) < 1.5e-4
    assert rel_error(rl_integral(beta, f, scheme='quadratic'), exact) < 1e-5


def test_rl_exact_on_linear():
    f = power(1.0, dt=0.05)
    res = rl_integral(0.5, f)
    exact = f.times**1.5/gamma(2.5)
    np.testing.assert_allclose(res.values, exact, rtol=1e-12, atol=1e-14)


def test_rl_order_one_is_integral():
    f = SampledFunction.from_function(np.cos, 1.0, 1e-3)
    res = rl_integral(1.0, f, scheme='quadratic')
    np.testing.assert_allclose(res.values, np.sin(f.times), atol=1e-8)


def test_rl_errors():
    f = power(1.0)
    with pytest.raises(ArgumentError):
        rl_integral(0.5, f, scheme='simpson')
    shifted = SampledFunction(0.5, 0.1, [1.0, 2.0, 3.0])
    with pytest.raises(ArgumentError):
        rl_integral(0.5, shifted)


@pytest.mark.parametrize('beta', [0.3, 0.5, 0.8])
@pytest.mark.parametrize('p', [1.0, 2.0, 3.0])
def test_caputo01_power_rule(beta, p):
    f = power(p)
    exact = gamma(p+1)/gamma(p+1-beta)*f.times**(p-beta)
    assert rel_error(caputo_01(beta, f), exact) < 1e-5


def test_caputo01_exact_on_cubics():
    f = SampledFunction.from_function(lambda t: 1 + t - 2*t**2 + t**3, 1.0,
                                      0.05)
    beta = 0.7
    t = f.times[1:]
    exact = t**(1-beta)/gamma(2-beta) - 4*t**(2-beta)/gamma(3-beta) \
        + 6*t**(3-beta)/gamma(4-beta)
    res = caputo_01(beta, f)
    np.testing.assert_allclose(res.values[1:], exact, rtol=1e-10, atol=1e-12)


def test_caputo01_constant():
    f = SampledFunction(0.0, 0.01, np.full(50, 3.0))
    np.testing.assert_allclose(caputo_01(0.4, f).values, 0.0, atol=1e-12)


def test_caputo01_start_powers():
    sigma = 0.4
    f = power(sigma, dt=1e-2)
    exact = gamma(sigma+1)/gamma(sigma+1-0.5)*f.times**(sigma-0.5)
    res = caputo_01(0.5, f, start_powers=(sigma,))
    assert rel_error(res, exact) < 1e-8
    with pytest.raises(ArgumentError):
        caputo_01(0.5, f, start_powers=(0.0,))


@pytest.mark.parametrize('alpha', [1.2, 1.5, 1.8])
@pytest.mark.parametrize('p', [2.0, 3.0, 4.0])
def test_caputo12_power_rule(alpha, p):
    f = power(p)
    exact = gamma(p+1)/gamma(p+1-alpha)*f.times**(p-alpha)
    assert rel_error(caputo_12(alpha, f, f1=0.0), exact) < 1e-5


@pytest.mark.parametrize('alpha', [1.3, 1.7])
def test_caputo12_direct(alpha):
    f = power(3.0)
    exact = 6.0/gamma(4-alpha)*f.times**(3-alpha)
    assert rel_error(caputo_12(alpha, f, method='direct'), exact) < 1e-3
    with pytest.raises(ArgumentError):
        caputo_12(alpha, f, method='spline')


def test_caputo12_linear_is_zero():
    f = SampledFunction.from_function(lambda t: 2.0 + 3.0*t, 1.0, 1e-2)
    np.testing.assert_allclose(caputo_12(1.5, f).values, 0.0, atol=1e-10)


def test_caputo12_vector_valued():
    f = SampledFunction.from_function(
        lambda t: np.column_stack((t**2, 2*t**3)), 1.0, 1e-3)
    res = caputo_12(1.5, f, f1=np.zeros(2))
    assert res.values.shape == (1001, 2)
    exact = 2.0/gamma(1.5)*res.times**0.5
    assert rel_error(res.with_values(res.values[:, 0]), exact) < 1e-5


@pytest.mark.parametrize('alpha', [1.2, 1.5, 1.8])
def test_memory_identity(alpha):
    f = SampledFunction.from_function(lambda t: np.sin(t) + t**2, 1.0, 1e-3)
    lhs = memory_identity_lhs(alpha, f, 1.0)
    rhs = caputo_12(alpha, f, f1=1.0)
    mask = f.times >= 0.1
    assert np.max(np.abs(lhs.values[mask] - rhs.values[mask])) < 1e-3


def test_memory_identity_scalar_solution():
    prob = ScalarProblem(1.5, 1.0, 1.0, 1.0)
    f = SampledFunction.from_function(lambda t: scalar_solution(prob, t),
                                      2.0, 1e-3)
    lhs = memory_identity_lhs(1.5, f, prob.y0)
    mask = f.times >= 0.1
    assert np.max(np.abs(lhs.values[mask] + f.values[mask])) < 5e-3


@given(st.floats(-5.0, 5.0), st.floats(-5.0, 5.0))
@settings(deadline=None, max_examples=25)
def test_linearity(a, b):
    f = SampledFunction.from_function(np.sin, 1.0, 1e-2)
    g = SampledFunction.from_function(np.exp, 1.0, 1e-2)
    combo = f.with_values(a*f.values + b*g.values)
    for oper in (lambda h: rl_integral(0.5, h),
                 lambda h: caputo_01(0.5, h),
                 lambda h: caputo_12(1.5, h)):
        ref = a*oper(f).values + b*oper(g).values
        np.testing.assert_allclose(oper(combo).values, ref,
                                   rtol=1e-10, atol=1e-10)


@given(st.floats(0.1, 10.0))
@settings(deadline=None, max_examples=20)
def test_homogeneity_in_step(scale):
    values = np.linspace(0.0, 1.0, 21)**2
    small = rl_integral(0.5, SampledFunction(0.0, 0.1, values))
    large = rl_integral(0.5, SampledFunction(0.0, 0.1*scale, values))
    np.testing.assert_allclose(large.values, small.values*scale**0.5,
                               rtol=1e-12, atol=1e-15)


def test_gagliardo_constant_and_linear():
    const = SampledFunction(0.0, 0.01, np.ones(101))
    assert gagliardo_seminorm(0.5, const) == 0.0
    lin = SampledFunction.from_function(lambda t: t, 1.0, 1e-2)
    semi, band = gagliardo_seminorm(0.25, lin, get_band=True)
    # int_0^1 int_0^1 |t-s|^(1-2b) = 2/((2-2b)(3-2b)) for b=1/4
    exact = np.sqrt(2.0/(1.5*2.5))
    assert semi < exact
    assert np.sqrt(semi**2 + band) == pytest.approx(exact, rel=2e-2)


def test_gagliardo_fine_grid():
    lin = SampledFunction.from_function(lambda t: t, 1.0, 1e-3)
    exact = np.sqrt(8.0/15.0)
    assert gagliardo_seminorm(0.25, lin) == pytest.approx(exact, rel=0.05)


def test_gagliardo_errors():
    f = power(1.0)
    with pytest.raises(ArgumentError):
        gagliardo_seminorm(1.0, f)
    with pytest.raises(ArgumentError):
        gagliardo_seminorm(0.5, SampledFunction(0.0, 0.1, [1.0]))


def test_sobolev_norm():
    lin = SampledFunction.from_function(lambda t: t, 1.0, 1e-2)
    l2sq = 1.0/3.0
    semi = gagliardo_seminorm(0.25, lin)
    assert sobolev_norm(0.25, lin) == pytest.approx(np.sqrt(l2sq + semi**2),
                                                    rel=1e-4)
