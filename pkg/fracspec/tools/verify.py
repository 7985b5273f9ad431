"""Verification suites of FRACSPEC.

Each check measures one quantity (an error, a ratio, an observed order)
and compares it with a tolerance.  The checks are grouped in suites:

mlf
    Mittag-Leffler and Gamma functions.
calculus
    Discrete fractional integrals and derivatives.
scalar
    Scalar Cauchy problems and the L1 time-stepper.
spectral
    Spectral solutions of the model problems.

Reports hold no timestamps nor machine information, so that identical
runs give identical reports.
"""

import json
import typing as tp

import mpmath
import numpy as np

from fracspec.base import SampledFunction
from fracspec.base.errors import ArgumentError
from fracspec.base.interval import IntervalProblem, eigenpair, \
    initial_state, solve_field
from fracspec.base.spectral import energy_bound_check, evolve, \
    weak_residual
from fracspec.data.numerics import NUMDEFS
from fracspec.logging import get_logger
from fracspec.tools.fractional import caputo_01, caputo_12, \
    memory_identity_lhs, rl_integral
from fracspec.tools.math import laplace_transform
from fracspec.tools.scalar import ScalarProblem, convergence_study, \
    l1_stepper, scalar_laplace, scalar_memory, scalar_solution, \
    scalar_velocity
from fracspec.tools.special import MLParams, crossover_radius, gamma, \
    ml_array, ml_asymptotic, ml_series, power_ratio_max

logger = get_logger(__name__)

TypeCheck = tp.Callable[[], tp.Tuple[float, float]]


# ==============
# Module Classes
# ==============

class CheckResult(tp.NamedTuple):
    """Outcome of a single check."""
    name: str
    measured: float
    tolerance: float
    passed: bool

    def to_dict(self) -> tp.Dict[str, tp.Any]:
        """Dictionary for JSON reports."""
        return {'name': self.name, 'measured': self.measured,
                'tolerance': self.tolerance, 'passed': self.passed}


class VerificationReport(object):
    """Results of a verification suite.

    Parameters
    ----------
    suite
        Name of the suite.
    checks
        Results, in the order of the suite.
    """

    def __init__(self, suite: str, checks: tp.Sequence[CheckResult]) -> None:
        self.__suite = suite
        self.__checks = tuple(checks)

    @property
    def suite(self) -> str:
        """Name of the suite."""
        return self.__suite

    @property
    def checks(self) -> tp.Tuple[CheckResult, ...]:
        """Check results."""
        return self.__checks

    @property
    def passed(self) -> bool:
        """True if every check passed."""
        return all(item.passed for item in self.__checks)

    @property
    def failed(self) -> tp.List[str]:
        """Names of the failed checks."""
        return [item.name for item in self.__checks if not item.passed]

    def to_dict(self) -> tp.Dict[str, tp.Any]:
        """Dictionary for JSON reports."""
        return {
            'suite': self.__suite,
            'passed': self.passed,
            'settings': {'ml_tol': NUMDEFS.ml_tol,
                         'schema_version': NUMDEFS.schema_version},
            'checks': [item.to_dict() for item in self.__checks],
        }

    def to_json(self) -> str:
        """Deterministic JSON text of the report."""
        return json.dumps(self.to_dict(), indent=2, sort_keys=True) + '\n'


# ===============
# Mittag-Leffler
# ===============

def _check_ml_exp() -> tp.Tuple[float, float]:
    xs = np.linspace(-30.0, 30.0, 121)
    vals = ml_array(1.0, 1.0, xs)
    return float(np.max(np.abs(vals/np.exp(xs) - 1.0))), 1.0e-12


def _check_ml_cos() -> tp.Tuple[float, float]:
    xs = np.linspace(0.0, 400.0, 201)
    vals = ml_array(2.0, 1.0, -xs)
    return float(np.max(np.abs(vals - np.cos(np.sqrt(xs))))), 1.0e-10


def _check_ml_sinc() -> tp.Tuple[float, float]:
    xs = np.linspace(0.5, 400.0, 200)
    vals = ml_array(2.0, 2.0, -xs)
    ref = np.sin(np.sqrt(xs))/np.sqrt(xs)
    return float(np.max(np.abs(vals - ref))), 1.0e-10


def _check_ml_continuity() -> tp.Tuple[float, float]:
    tol = 1.0e-9
    err = 0.0
    for alpha, beta in ((1.5, 1.0), (1.5, 1.5), (1.8, 2.0), (1.2, 1.0)):
        radius = crossover_radius(alpha, beta, tol)
        par = MLParams(alpha, beta, -radius)
        diff = ml_series(par).value - ml_asymptotic(par).value
        err = max(err, abs(diff))
    return err, 2*tol


def _check_ml_laplace() -> tp.Tuple[float, float]:
    err = 0.0
    for alpha, beta, lam, zval in ((1.5, 1.0, 1.0, 2.0),
                                   (1.5, 2.0, 0.5, 1.5),
                                   (1.2, 1.2, 1.0, 3.0)):
        def func(t: float) -> float:
            return t**(beta-1)*ml_array(alpha, beta, -lam*t**alpha).item()
        num = laplace_transform(func, zval)
        ref = zval**(alpha-beta)/(zval**alpha + lam)
        err = max(err, abs(num/ref - 1.0))
    return err, 1.0e-6


def _check_power_ratio() -> tp.Tuple[float, float]:
    xs = np.linspace(1.0e-6, 50.0, 500001)
    err = 0.0
    for beta in np.arange(1, 10)/10.0:
        _, vmax = power_ratio_max(beta)
        err = max(err, abs(vmax - float(np.max(xs**beta/(1.0+xs)))))
    return err, 1.0e-6


def _check_gamma() -> tp.Tuple[float, float]:
    err = 0.0
    for x in (0.5, 1.5, 2.5, 3.7, 10.2, -0.5, -1.5, -2.7):
        ref = float(mpmath.gamma(x))
        err = max(err, abs(gamma(x)/ref - 1.0))
    return err, NUMDEFS.gamma_rel_tol


# ===================
# Fractional calculus
# ===================

def _power(p: float, dt: float = 1.0e-3,
           t_max: float = 1.0) -> SampledFunction:
    return SampledFunction.from_function(lambda t: t**p, t_max, dt)


def _rel_error(approx: SampledFunction,
               exact: np.ndarray, t_min: float = 0.1) -> float:
    mask = approx.times >= t_min
    return float(np.max(np.abs(approx.values[mask]/exact[mask] - 1.0)))


def _check_rl_power() -> tp.Tuple[float, float]:
    err = 0.0
    for beta in (0.3, 0.5, 0.8):
        for p in (0.0, 1.0, 2.0, 3.0):
            f = _power(p)
            res = rl_integral(beta, f, scheme='quadratic')
            ref = gamma(p+1)/gamma(p+1+beta)*f.times**(p+beta)
            err = max(err, _rel_error(res, ref))
    return err, 1.0e-5


def _check_caputo01_power() -> tp.Tuple[float, float]:
    err = 0.0
    for beta in (0.3, 0.5, 0.8):
        for p in (1.0, 2.0, 3.0):
            f = _power(p)
            res = caputo_01(beta, f)
            ref = gamma(p+1)/gamma(p+1-beta)*f.times**(p-beta)
            err = max(err, _rel_error(res, ref))
    return err, 1.0e-5


def _check_caputo12_power() -> tp.Tuple[float, float]:
    err = 0.0
    for alpha in (1.2, 1.5, 1.8):
        for p in (2.0, 3.0):
            f = _power(p)
            res = caputo_12(alpha, f, f1=0.0)
            ref = gamma(p+1)/gamma(p+1-alpha)*f.times**(p-alpha)
            err = max(err, _rel_error(res, ref))
    return err, 1.0e-5


def _check_memory_identity() -> tp.Tuple[float, float]:
    f = SampledFunction.from_function(lambda t: np.sin(t) + t**2, 1.0,
                                      1.0e-3)
    err = 0.0
    for alpha in (1.2, 1.5, 1.8):
        lhs = memory_identity_lhs(alpha, f, 1.0)
        rhs = caputo_12(alpha, f, f1=1.0)
        mask = f.times >= 0.1
        err = max(err, float(np.max(np.abs(lhs.values[mask]
                                           - rhs.values[mask]))))
    return err, 1.0e-3


# ======
# Scalar
# ======

def _check_scalar_residual() -> tp.Tuple[float, float]:
    err = 0.0
    for alpha in (1.2, 1.5, 1.8):
        for lam in (0.5, 1.0, 10.0):
            prob = ScalarProblem(alpha, lam, 1.0, 0.5)
            f = SampledFunction.from_function(
                lambda t, p=prob: scalar_solution(p, t), 2.0, 1.0e-3)
            res = caputo_12(alpha, f, f1=prob.y0, start_powers=(alpha-1,))
            mask = f.times >= 0.1
            diff = res.values[mask] + lam*f.values[mask]
            err = max(err, float(np.max(np.abs(diff))))
    return err, 5.0e-3


def _check_l1_distance() -> tp.Tuple[float, float]:
    err = 0.0
    for alpha in (1.2, 1.5, 1.8):
        for lam in (0.5, 1.0, 10.0):
            prob = ScalarProblem(alpha, lam, 1.0, 0.5)
            approx = l1_stepper(prob, 1.0e-3, 2000)
            exact = scalar_solution(prob, approx.times)
            err = max(err, float(np.max(np.abs(approx.values - exact))))
    return err, 5.0e-3


def _check_l1_order() -> tp.Tuple[float, float]:
    dev = 0.0
    for alpha in (1.5, 1.8):
        prob = ScalarProblem(alpha, 1.0, 1.0, 0.0)
        _, orders = convergence_study(prob, (0.02, 0.01, 0.005), 1.0)
        dev = max(dev, float(np.max(np.abs(orders - (3.0-alpha)))))
    return dev, 0.3


def _check_scalar_laplace() -> tp.Tuple[float, float]:
    err = 0.0
    for alpha, lam, zval in ((1.5, 1.0, 1.0), (1.2, 0.5, 2.0),
                             (1.8, 2.0, 1.5)):
        prob = ScalarProblem(alpha, lam, 1.0, 0.5)
        num = laplace_transform(lambda t, p=prob: scalar_solution(p, t),
                                zval)
        err = max(err, abs(num/scalar_laplace(prob, zval) - 1.0))
    return err, 1.0e-6


# ========
# Spectral
# ========

def _check_weak_residual() -> tp.Tuple[float, float]:
    worst = 0.0
    for kind in ('wave', 'petrovsky'):
        prob = IntervalProblem(np.pi, kind, 32)
        state = initial_state(prob, 1.5, lambda x: x*(np.pi - x),
                              lambda x: np.sin(2*x))
        for t in (0.1, 0.5, 1.0, 2.0):
            traj = evolve(state, t, 1)
            for m in range(1, 33):
                res = weak_residual(state, t, m)
                scale = 1.0 + prob.eigenvalues[m-1]*abs(traj.u[m-1])
                worst = max(worst, abs(res)/scale)
    return worst, 1.0e-6


def _check_memory_quadrature() -> tp.Tuple[float, float]:
    err = 0.0
    for alpha in (1.2, 1.5, 1.8):
        prob = ScalarProblem(alpha, 1.0, 1.0, 0.5)
        vel = SampledFunction.from_function(
            lambda t, p=prob: scalar_velocity(p, t) - p.y0, 2.0, 1.0e-3)
        num = rl_integral(2-alpha, vel)
        exact = scalar_memory(prob, num.times)
        err = max(err, float(np.max(np.abs(num.values - exact))))
    return err, 1.0e-3


def _check_petrovsky_squares() -> tp.Tuple[float, float]:
    wave = IntervalProblem(np.pi, 'wave', 64).eigenvalues
    plate = IntervalProblem(np.pi, 'petrovsky', 64).eigenvalues
    index = np.arange(1, 65, dtype=float)
    err = max(float(np.max(np.abs(plate - wave**2))),
              float(np.max(np.abs(wave - index**2))))
    return err, 0.0


def _two_mode_field() -> tp.Tuple[np.ndarray, np.ndarray]:
    prob = IntervalProblem(np.pi, 'wave', 8)
    _, e1 = eigenpair(prob, 1)
    _, e3 = eigenpair(prob, 3)
    xs = np.linspace(0.0, np.pi, 65)
    field = solve_field(prob, 1.5, lambda x: e1(x) + 0.5*e3(x), None,
                        xs, (0.0, 0.5, 1.0), nthreads=1)
    return field.values, e1(xs) + 0.5*e3(xs)


def _check_initial_condition() -> tp.Tuple[float, float]:
    values, init = _two_mode_field()
    return float(np.max(np.abs(values[0] - init))), 1.0e-9


def _check_boundary() -> tp.Tuple[float, float]:
    values, _ = _two_mode_field()
    bound = float(np.max(np.abs(values[:, [0, -1]])))
    return bound/float(np.max(np.abs(values))), 1.0e-12


def _check_modal_relation() -> tp.Tuple[float, float]:
    prob = IntervalProblem(np.pi, 'petrovsky', 16)
    state = initial_state(prob, 1.7, lambda x: x*(np.pi - x), None)
    traj = evolve(state, 0.7, 1)
    return float(np.max(np.abs(traj.d_alpha_u
                               + prob.eigenvalues*traj.u))), 0.0


def _check_energy_ratio() -> tp.Tuple[float, float]:
    prob = IntervalProblem(np.pi, 'wave', 8)
    worst = 0.0
    data = ((lambda x: x*(np.pi - x), None),
            (None, lambda x: np.sin(x)),
            (lambda x: np.sin(3*x), lambda x: np.sin(2*x)),
            ([1.0, 0.5, 0.25], [0.0, 1.0]),
            (lambda x: x**2*(np.pi - x), lambda x: x*(np.pi - x)))
    for u0, u1 in data:
        state = initial_state(prob, 1.5, u0, u1)
        coarse = energy_bound_check(state, 2.0, 101)
        fine = energy_bound_check(state, 2.0, 201)
        if not np.isfinite(fine):
            return float('inf'), 0.01
        worst = max(worst, abs(fine/coarse - 1.0))
    return worst, 0.01


# =================
# Module Attributes
# =================

SUITES: tp.Dict[str, tp.List[tp.Tuple[str, TypeCheck]]] = {
    'mlf': [
        ('mlf.exp', _check_ml_exp),
        ('mlf.cos', _check_ml_cos),
        ('mlf.sinc', _check_ml_sinc),
        ('mlf.crossover_continuity', _check_ml_continuity),
        ('mlf.laplace', _check_ml_laplace),
        ('mlf.power_ratio_max', _check_power_ratio),
        ('mlf.gamma', _check_gamma),
    ],
    'calculus': [
        ('calculus.rl_power', _check_rl_power),
        ('calculus.caputo01_power', _check_caputo01_power),
        ('calculus.caputo12_power', _check_caputo12_power),
        ('calculus.memory_identity', _check_memory_identity),
    ],
    'scalar': [
        ('scalar.caputo_residual', _check_scalar_residual),
        ('scalar.l1_distance', _check_l1_distance),
        ('scalar.l1_order', _check_l1_order),
        ('scalar.laplace', _check_scalar_laplace),
    ],
    'spectral': [
        ('spectral.weak_residual', _check_weak_residual),
        ('spectral.petrovsky_squares', _check_petrovsky_squares),
        ('spectral.memory_quadrature', _check_memory_quadrature),
        ('spectral.initial_condition', _check_initial_condition),
        ('spectral.boundary', _check_boundary),
        ('spectral.modal_relation', _check_modal_relation),
        ('spectral.energy_ratio', _check_energy_ratio),
    ],
}
SUITE_NAMES = tuple(SUITES) + ('all',)


# ==============
# Module Methods
# ==============

def list_checks(suite: str) -> tp.List[str]:
    """Names of the checks of a suite."""
    if suite == 'all':
        return [name for key in SUITES for name, _ in SUITES[key]]
    if suite not in SUITES:
        raise ArgumentError('suite', f'Unknown suite: {suite}')
    return [name for name, _ in SUITES[suite]]


def run_check(name: str, func: TypeCheck) -> CheckResult:
    """Run a single check."""
    measured, tolerance = func()
    passed = bool(np.isfinite(measured) and measured <= tolerance)
    logger.info('%-32s %.3e (tol %.1e) %s', name, measured, tolerance,
                'ok' if passed else 'FAILED')
    return CheckResult(name, float(measured), float(tolerance), passed)


def run_suite(suite: str) -> VerificationReport:
    """Run a verification suite.

    Parameters
    ----------
    suite
        'mlf', 'calculus', 'scalar', 'spectral' or 'all'.

    Returns
    -------
    VerificationReport
        Results, one per check of the suite.
    """
    names = list_checks(suite)
    funcs = {name: func for key in SUITES for name, func in SUITES[key]}
    return VerificationReport(suite,
                              [run_check(name, funcs[name])
                               for name in names])
