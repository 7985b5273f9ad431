"""Tests of the abstract spectral solver."""

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from fracspec.base import ArgumentError, DomainError, ZeroDataError
from fracspec.base.spectral import SpectralOperator, SpectralState, \
    classify_regularity, energy_bound_check, evolve, evolve_many, \
    frac_power_norm, tail_bound, theta_window, velocity_dual_norm, \
    weak_residual
from fracspec.tools.scalar import scalar_solution


def make_state(alpha=1.5, count=8, power=4, c1=True, regularity=None):
    index = np.arange(1, count+1, dtype=float)
    op = SpectralOperator(index**power)
    c0 = 1.0/index**2
    c1 = 0.5/index**2 if c1 else np.zeros(count)
    return SpectralState(c0, c1, alpha, op, regularity)


def test_operator_validation():
    with pytest.raises(ArgumentError):
        SpectralOperator([])
    with pytest.raises(ArgumentError):
        SpectralOperator([1.0, 1.0, 2.0])
    with pytest.raises(ArgumentError):
        SpectralOperator([-1.0, 2.0])
    with pytest.raises(ArgumentError):
        SpectralOperator([1.0, 4.0], coercivity=2.0)
    op = SpectralOperator([1.0, 4.0, 9.0])
    assert op.coercivity == 1.0
    assert len(op) == 3
    assert op.truncate(2).count == 2
    with pytest.raises(ValueError):
        op.eigenvalues[0] = 3.0


def test_state_validation():
    op = SpectralOperator([1.0, 4.0])
    with pytest.raises(ArgumentError):
        SpectralState([1.0], [0.0, 0.0], 1.5, op)
    with pytest.raises(ArgumentError):
        SpectralState([1.0, 0.0], [0.0, 0.0], 2.0, op)
    with pytest.raises(ArgumentError):
        SpectralState([1.0, 0.0], [0.0, 0.0], 1.5, op, 'smooth')
    state = SpectralState([1.0, 0.5], [0.0, 0.2], 1.5, op, 'weak')
    prob = state.mode(1)
    assert (prob.lam, prob.x0, prob.y0) == (4.0, 0.5, 0.2)
    assert state.truncate(1).operator.count == 1


def test_evolve_modes():
    state = make_state()
    traj = evolve(state, 0.7, 1)
    for index in range(state.operator.count):
        ref = scalar_solution(state.mode(index), 0.7)
        assert traj.u[index] == ref
    np.testing.assert_array_equal(traj.d_alpha_u,
                                  -state.operator.eigenvalues*traj.u)
    with pytest.raises(ArgumentError):
        evolve(state, -1.0)


def test_evolve_at_zero():
    state = make_state()
    traj = evolve(state, 0.0)
    np.testing.assert_allclose(traj.u, state.c0, rtol=1e-15)
    np.testing.assert_allclose(traj.du, state.c1, rtol=1e-15)
    np.testing.assert_array_equal(traj.memory, 0.0)


def test_evolve_thread_independence():
    state = make_state(count=12)
    times = np.linspace(0.0, 2.0, 7)
    serial = evolve_many(state, times, nthreads=1)
    threaded = evolve_many(state, times, nthreads=4)
    assert [traj.t for traj in threaded] == list(times)
    for one, two in zip(serial, threaded):
        np.testing.assert_array_equal(one.u, two.u)
        np.testing.assert_array_equal(one.du, two.du)
    single = evolve(state, 1.0, nthreads=1)
    multi = evolve(state, 1.0, nthreads=3)
    np.testing.assert_array_equal(single.memory, multi.memory)


def test_frac_power_norm():
    op = SpectralOperator([1.0, 4.0, 9.0])
    coef = [1.0, 1.0, 1.0]
    assert frac_power_norm(0.0, coef, op) == pytest.approx(np.sqrt(3.0))
    assert frac_power_norm(0.5, coef, op) == pytest.approx(np.sqrt(14.0))
    assert frac_power_norm(-0.5, coef, op) == pytest.approx(
        np.sqrt(1.0 + 1/4 + 1/9))
    with pytest.raises(ArgumentError):
        frac_power_norm(0.5, [1.0], op)


@given(st.floats(-1.0, 1.0), st.floats(-1.0, 1.0))
@settings(deadline=None, max_examples=25)
def test_frac_power_norm_monotone(theta1, theta2):
    op = SpectralOperator([1.0, 2.0, 5.0])
    coef = [0.3, -1.2, 0.7]
    low, high = sorted((theta1, theta2))
    assert frac_power_norm(low, coef, op) \
        <= frac_power_norm(high, coef, op)*(1+1e-14)


@pytest.mark.parametrize('alpha', [1.2, 1.5, 1.8])
@pytest.mark.parametrize('power', [2, 4])
def test_weak_residual(alpha, power):
    state = make_state(alpha, count=16, power=power)
    for m in (1, 4, 16):
        for t in (0.25, 1.0, 2.0):
            assert abs(weak_residual(state, t, m)) < 1e-6
            assert abs(weak_residual(state, t, m, analytic=True)) < 1e-10


def test_weak_residual_errors():
    state = make_state()
    with pytest.raises(ArgumentError):
        weak_residual(state, 1.0, 0)
    with pytest.raises(ArgumentError):
        weak_residual(state, 1.0, 9)
    with pytest.raises(ArgumentError):
        weak_residual(state, 1.0, 1, dt_fd=2.0)


def test_weak_residual_zero_mode():
    op = SpectralOperator([1.0, 4.0])
    state = SpectralState([1.0, 0.0], [0.0, 0.0], 1.5, op)
    assert weak_residual(state, 1.0, 2) == 0.0


def test_theta_window():
    assert theta_window(1.5) == pytest.approx((1/6, 0.5))
    low, high = theta_window(1.99)
    assert low < high
    for alpha in (1.0, 2.0):
        with pytest.raises(DomainError):
            theta_window(alpha)


@pytest.mark.parametrize('alpha', [1.2, 1.5, 1.8])
def test_energy_bound(alpha):
    state = make_state(alpha, power=2)
    ratio = energy_bound_check(state, 2.0, 41)
    assert 0.0 < ratio <= 3.0


def test_energy_bound_at_start():
    op = SpectralOperator([1.0])
    state = SpectralState([1.0], [0.0], 1.5, op)
    assert energy_bound_check(state, 1.0, 11) == pytest.approx(1.0)


def test_energy_bound_zero_data():
    op = SpectralOperator([1.0, 4.0])
    state = SpectralState([0.0, 0.0], [0.0, 0.0], 1.5, op)
    with pytest.raises(ZeroDataError):
        energy_bound_check(state, 1.0, 11)
    with pytest.raises(ArgumentError):
        energy_bound_check(make_state(), 1.0, 1)


def test_classify_declared():
    assert classify_regularity(make_state()).kind == 'weak_data'
    report = classify_regularity(make_state(regularity='strong'))
    assert report.kind == 'strong_data'
    assert report.declared == 'strong'
    assert 'D(A)' in report.u0_norms
    assert report.decay is None
    with pytest.raises(ArgumentError):
        classify_regularity(make_state(), 'exponential')


def test_classify_power_decay():
    count = 64
    index = np.arange(1, count+1, dtype=float)
    op = SpectralOperator(index**2)
    smooth = SpectralState(1.0/index**4, 1.0/index**3, 1.5, op)
    report = classify_regularity(smooth, 'power')
    assert report.kind == 'strong_data'
    assert report.decay['q'] == pytest.approx(2.0)
    assert report.decay['p0'] == pytest.approx(4.0)
    rough = SpectralState(1.0/index**2, 1.0/index, 1.5, op)
    report = classify_regularity(rough, 'power')
    assert report.kind == 'weak_data'
    assert 'D(A)' not in report.u0_norms


def test_tail_bound():
    state = make_state(count=16, power=2, c1=False)
    assert tail_bound(state, 16, 1.0) == 0.0
    assert tail_bound(state, 0, 1.0) == pytest.approx(
        frac_power_norm(0.5, state.c0, state.operator))
    with pytest.raises(ArgumentError):
        tail_bound(state, 17, 1.0)


def test_tail_bound_controls_dropped_modes():
    state = make_state(count=16, power=2)
    n_keep = 4
    c0 = np.concatenate((np.zeros(n_keep), state.c0[n_keep:]))
    c1 = np.concatenate((np.zeros(n_keep), state.c1[n_keep:]))
    tail = SpectralState(c0, c1, state.alpha, state.operator)
    bound = tail_bound(state, n_keep, 2.0)
    for t in np.linspace(0.0, 2.0, 9):
        traj = evolve(tail, t)
        assert frac_power_norm(0.5, traj.u, state.operator) <= 2*bound


def test_velocity_dual_norm():
    state = make_state()
    low, high = theta_window(state.alpha)
    theta = 0.5*(low + high)
    traj = evolve(state, 0.5)
    ref = frac_power_norm(-theta, traj.du, state.operator)
    assert velocity_dual_norm(state, theta, 0.5) == ref
    assert velocity_dual_norm(state, theta, 0.0) == pytest.approx(
        frac_power_norm(-theta, state.c1, state.operator))
