"""Module on scalar fractional Cauchy problems.

Closed-form solution of

    D^a u(t) + lam*u(t) = 0,  u(0) = x0,  u'(0) = y0,

with 1 < a < 2, written with Mittag-Leffler functions, together with
its derivatives, its memory term and an independent L1 time-stepper
used as verification oracle.
"""

import typing as tp

import numpy as np
import numpy.typing as npt

from fracspec.base import ArgumentError, DomainError, InstabilityError, \
    SampledFunction
from fracspec.data.numerics import NUMDEFS
from fracspec.logging import get_logger
from fracspec.tools.math import refinement_orders
from fracspec.tools.special import gamma, ml_array

logger = get_logger(__name__)

TypeTime = tp.Union[float, npt.ArrayLike]


# ==============
# Module Classes
# ==============

class ScalarProblem(object):
    """Scalar fractional Cauchy problem.

    Parameters
    ----------
    alpha
        Order, 1 < alpha < 2.
    lam
        Coefficient lambda > 0.
    x0
        Initial value.
    y0
        Initial velocity.
    tol
        Accuracy target of the Mittag-Leffler evaluations.

    Raises
    ------
    ArgumentError
        Order or coefficient out of range.
    """

    def __init__(self, alpha: float, lam: float,
                 x0: float = 1.0, y0: float = 0.0,
                 tol: float = NUMDEFS.ml_tol) -> None:
        if not 1.0 < alpha < 2.0:
            raise ArgumentError('alpha', 'Order must be in (1, 2)')
        if not lam > 0.0:
            raise ArgumentError('lam', 'Coefficient must be positive')
        self.__alpha = float(alpha)
        self.__lam = float(lam)
        self.__x0 = float(x0)
        self.__y0 = float(y0)
        self.__tol = float(tol)

    def __repr__(self) -> str:
        return f'ScalarProblem(alpha={self.__alpha!r}, lam={self.__lam!r},' \
            + f' x0={self.__x0!r}, y0={self.__y0!r})'

    @property
    def alpha(self) -> float:
        """Order of the time derivative."""
        return self.__alpha

    @property
    def lam(self) -> float:
        """Coefficient lambda."""
        return self.__lam

    @property
    def x0(self) -> float:
        """Initial value."""
        return self.__x0

    @property
    def y0(self) -> float:
        """Initial velocity."""
        return self.__y0

    @property
    def tol(self) -> float:
        """Accuracy target of the Mittag-Leffler evaluations."""
        return self.__tol

    def ml(self, beta: float, t: np.ndarray) -> np.ndarray:
        """Evaluate E_{a,beta}(-lam*t^a)."""
        return ml_array(self.__alpha, beta,
                        -self.__lam*t**self.__alpha, self.__tol)


# ==============
# Module Methods
# ==============

def _times(t: TypeTime, strict: bool = False) -> np.ndarray:
    arr = np.asarray(t, dtype=float)
    if np.any(arr < 0.0):
        raise ArgumentError('t', 'Times must be non-negative')
    if strict and np.any(arr == 0.0):
        raise DomainError('scalar_acceleration',
                          'Acceleration is singular at t=0')
    return arr


def _out(arr: np.ndarray) -> tp.Union[float, np.ndarray]:
    return float(arr) if arr.ndim == 0 else arr


def scalar_solution(p: ScalarProblem,
                    t: TypeTime) -> tp.Union[float, np.ndarray]:
    """Solution u(t) = x0*E_{a,1}(-lam*t^a) + y0*t*E_{a,2}(-lam*t^a).

    Parameters
    ----------
    p
        Scalar problem.
    t
        Time(s), t >= 0.

    Returns
    -------
    float or np.ndarray
        u(t).
    """
    t = _times(t)
    res = p.x0*p.ml(1.0, t)
    if p.y0 != 0.0:
        res = res + p.y0*t*p.ml(2.0, t)
    return _out(res)


def scalar_velocity(p: ScalarProblem,
                    t: TypeTime) -> tp.Union[float, np.ndarray]:
    """Velocity u'(t).

    u'(t) = -lam*x0*t^(a-1)*E_{a,a}(-lam*t^a) + y0*E_{a,1}(-lam*t^a),
    equal to y0 at t=0.
    """
    t = _times(t)
    res = p.y0*p.ml(1.0, t)
    if p.x0 != 0.0:
        res = res - p.lam*p.x0*t**(p.alpha-1)*p.ml(p.alpha, t)
    return _out(res)


def scalar_acceleration(p: ScalarProblem,
                        t: TypeTime) -> tp.Union[float, np.ndarray]:
    """Acceleration u''(t), singular like t^(a-2) at 0.

    u''(t) = -lam*(x0*t^(a-2)*E_{a,a-1}(-lam*t^a)
                   + y0*t^(a-1)*E_{a,a}(-lam*t^a))

    Raises
    ------
    DomainError
        t = 0.
    """
    t = _times(t, strict=True)
    res = np.zeros_like(t)
    if p.x0 != 0.0:
        res = res + p.x0*t**(p.alpha-2)*p.ml(p.alpha-1, t)
    if p.y0 != 0.0:
        res = res + p.y0*t**(p.alpha-1)*p.ml(p.alpha, t)
    return _out(-p.lam*res)


def scalar_memory(p: ScalarProblem,
                  t: TypeTime) -> tp.Union[float, np.ndarray]:
    """Memory term I^(2-a)(u' - y0)(t).

    -lam*(x0*t*E_{a,2}(-lam*t^a) + y0*t^2*E_{a,3}(-lam*t^a)), 0 at t=0.
    """
    t = _times(t)
    res = np.zeros_like(t)
    if p.x0 != 0.0:
        res = res + p.x0*t*p.ml(2.0, t)
    if p.y0 != 0.0:
        res = res + p.y0*t**2*p.ml(3.0, t)
    return _out(-p.lam*res)


def scalar_caputo(p: ScalarProblem,
                  t: TypeTime) -> tp.Union[float, np.ndarray]:
    """Caputo derivative D^a u(t) = -lam*u(t)."""
    res = scalar_solution(p, t)
    return -p.lam*res


def scalar_laplace(p: ScalarProblem, z: float) -> float:
    """Laplace transform of the solution at z > 0.

    (x0*z^(a-1) + y0*z^(a-2))/(z^a + lam)
    """
    if not z > 0.0:
        raise ArgumentError('z', 'Laplace variable must be positive')
    a = p.alpha
    return (p.x0*z**(a-1) + p.y0*z**(a-2))/(z**a + p.lam)


def l1_stepper(p: ScalarProblem,
               dt: float,
               n_steps: int) -> SampledFunction:
    """March the Cauchy problem with the L1 scheme.

    The Caputo derivative is discretized by the L1 rule on the
    velocity increments du^(k-1/2) = (u^k - u^(k-1))/dt, the initial
    velocity entering the history term, and the equation is taken at
    half steps:

        mu*(du^(n-1/2) - H_n) + lam*(u^n + u^(n-1))/2 = 0,
        mu = dt^(1-a)/Gamma(3-a),
        H_n = sum_{k<n} (b_{n-k-1} - b_{n-k})*du^(k-1/2) + b_{n-1}*y0,
        b_m = (m+1)^(2-a) - m^(2-a).

    Parameters
    ----------
    p
        Scalar problem.
    dt
        Time step.
    n_steps
        Number of steps.

    Returns
    -------
    SampledFunction
        u on the grid k*dt, k=0..n_steps.

    Raises
    ------
    ArgumentError
        Non-positive step or negative number of steps.
    InstabilityError
        |u| exceeds the blow-up threshold.
    """
    if not dt > 0.0:
        raise ArgumentError('dt', 'Time step must be positive')
    if n_steps < 0:
        raise ArgumentError('n_steps', 'Number of steps must be >= 0')
    a = p.alpha
    mu = dt**(1-a)/gamma(3-a)
    lhs = mu/dt + p.lam/2
    if not lhs > 0.0:
        raise InstabilityError(0, lhs)
    rhs = mu/dt - p.lam/2
    m = np.arange(n_steps+1, dtype=float)
    bwgt = (m+1)**(2-a) - m**(2-a)
    dwgt = np.zeros(n_steps+1)
    dwgt[1:] = bwgt[:-1] - bwgt[1:]
    values = np.empty(n_steps+1)
    values[0] = p.x0
    incr = np.zeros(n_steps+1)
    for n in range(1, n_steps+1):
        hist = bwgt[n-1]*p.y0
        if n > 1:
            hist += np.dot(dwgt[n-1:0:-1], incr[1:n])
        values[n] = (values[n-1]*rhs + mu*hist)/lhs
        if abs(values[n]) > NUMDEFS.blowup:
            raise InstabilityError(n, values[n])
        incr[n] = (values[n] - values[n-1])/dt
    logger.debug('L1 stepper: %d steps of %g for %r', n_steps, dt, p)
    return SampledFunction(0.0, dt, values)


def convergence_study(p: ScalarProblem,
                      dts: tp.Sequence[float],
                      t_max: float) -> tp.Tuple[np.ndarray, np.ndarray]:
    """Sup-norm errors of the L1 stepper and observed orders.

    Parameters
    ----------
    p
        Scalar problem.
    dts
        Decreasing time steps.
    t_max
        Final time.

    Returns
    -------
    np.ndarray
        Sup-norm distance to the closed form on each grid.
    np.ndarray
        Observed orders log(e_k/e_{k+1})/log(dt_k/dt_{k+1}).
    """
    if len(dts) < 2:
        raise ArgumentError('dts', 'At least two time steps are needed')
    errors = []
    for dt in dts:
        num = int(round(t_max/dt))
        approx = l1_stepper(p, dt, num)
        exact = scalar_solution(p, approx.times)
        errors.append(float(np.max(np.abs(approx.values - exact))))
    errors = np.array(errors)
    orders = refinement_orders(errors, dts)
    logger.info('Convergence of L1 stepper: errors %s, orders %s',
                np.array2string(errors, precision=3),
                np.array2string(orders, precision=3))
    return errors, orders
