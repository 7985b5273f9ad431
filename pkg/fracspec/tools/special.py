"""Module providing special functions.

Real-argument evaluation of the Gamma function and of the
two-parameter Mittag-Leffler function

    E_{a,b}(x) = sum_k x^k/Gamma(a*k+b),

as needed by the fractional evolution solvers of FRACSPEC.

The Mittag-Leffler function is evaluated by two branches:

* the power series, summed in extended precision with `mpmath` so that
  the cancellation between terms for large negative arguments does not
  destroy the result,
* the large-argument expansion for negative arguments, truncated at
  its smallest term, supplemented for 1 <= a <= 2 by the pair of
  oscillating exponential contributions.

`mittag_leffler` dispatches between them using `crossover_radius`.
"""

from functools import lru_cache
import logging
from math import ceil, cos, exp, factorial, floor, isfinite, log, pi
import typing as tp

import mpmath
import numpy as np
import numpy.typing as npt

from fracspec.base.errors import ArgumentError, ConvergenceError, \
    DomainError, GammaOverflowError, GammaPoleError, NumericalError
from fracspec.data.numerics import LANCZOS, NUMDEFS
from fracspec.logging import get_logger
from fracspec.tools.math import sinpi

logger = get_logger(__name__)

_EPS = float(np.finfo(float).eps)
_BLOCK = 64


# ==============
# Module Classes
# ==============

class MLParams(object):
    """Request for a real-argument Mittag-Leffler evaluation.

    Parameters
    ----------
    alpha
        First order, alpha > 0.
    beta
        Second order, beta > 0.
    x
        Real argument.

    Raises
    ------
    ArgumentError
        Non-positive order or non-finite argument.
    """

    def __init__(self, alpha: float, beta: float, x: float) -> None:
        if not alpha > 0.0:
            raise ArgumentError('alpha', 'alpha must be strictly positive')
        if not beta > 0.0:
            raise ArgumentError('beta', 'beta must be strictly positive')
        if not isfinite(x):
            raise ArgumentError('x', 'Argument must be finite')
        self.__alpha = float(alpha)
        self.__beta = float(beta)
        self.__x = float(x)

    def __repr__(self) -> str:
        return f'MLParams(alpha={self.__alpha!r}, beta={self.__beta!r}, ' \
            + f'x={self.__x!r})'

    @property
    def alpha(self) -> float:
        """First order of the function."""
        return self.__alpha

    @property
    def beta(self) -> float:
        """Second order of the function."""
        return self.__beta

    @property
    def x(self) -> float:
        """Argument."""
        return self.__x


class EvalResult(tp.NamedTuple):
    """Value of a Mittag-Leffler evaluation with its diagnostics."""
    value: float
    est_abs_error: float
    terms_used: int
    branch: str  # 'series' or 'asymptotic'


# ==============
# Module Methods
# ==============

def _is_pole(x: float) -> bool:
    """Check if x is a non-positive integer."""
    return x <= 0.0 and x == floor(x)


def gamma(x: float) -> float:
    """Compute the Gamma function on the real axis.

    Uses the Lanczos approximation (g=607/128, n=15) for x >= 0.5 and the
    reflection formula pi/(sin(pi*x)*Gamma(1-x)) below.
    Positive integers are returned exactly as factorials.

    Parameters
    ----------
    x
        Argument.

    Returns
    -------
    float
        Gamma(x).

    Raises
    ------
    GammaPoleError
        `x` is a non-positive integer.
    GammaOverflowError
        `x` above the double-precision overflow threshold.
    """
    x = float(x)
    if _is_pole(x):
        raise GammaPoleError(x)
    if x > NUMDEFS.gamma_overflow:
        raise GammaOverflowError(x)
    if x == floor(x):
        return float(factorial(int(x) - 1))
    if x < 0.5:
        if 1.0 - x > NUMDEFS.gamma_overflow:
            # |Gamma(x)| is below the smallest subnormal
            return 0.0
        return pi/(sinpi(x)*gamma(1.0 - x))
    acc = LANCZOS.c0
    for i, coef in enumerate(LANCZOS.coefs, start=1):
        acc += coef/(x + i)
    t = x + LANCZOS.g + 0.5
    # Power split in two halves to stay finite up to the threshold
    half = t**((x + 0.5)/2)
    return LANCZOS.sqrt2pi*half*(exp(-t)*half)*acc/x


def rgamma(x: float) -> float:
    """Compute the reciprocal Gamma function, 1/Gamma(x).

    The function is entire: it vanishes exactly at the poles of Gamma
    and underflows to 0 above the overflow threshold.

    Parameters
    ----------
    x
        Argument.

    Returns
    -------
    float
        1/Gamma(x).
    """
    x = float(x)
    if _is_pole(x) or x > NUMDEFS.gamma_overflow:
        return 0.0
    if x < 0.5:
        return sinpi(x)*gamma(1.0 - x)/pi
    return 1.0/gamma(x)


def crossover_radius(alpha: float,
                     beta: float,
                     tol: tp.Optional[float] = None) -> float:
    """Radius separating the series and asymptotic branches.

    The base radius is max(10, (5*Gamma(alpha+beta))^(1/alpha)).
    When `tol` is given, the radius is raised to (ln(1/tol)+8)^alpha so
    that the truncation remainder of the asymptotic branch, of order
    exp(-|x|^(1/alpha)), stays below `tol`.

    Parameters
    ----------
    alpha
        First order.
    beta
        Second order.
    tol
        Accuracy target, 0 < tol < 1.

    Returns
    -------
    float
        Crossover radius.

    Raises
    ------
    ArgumentError
        Tolerance out of range.
    """
    radius = max(NUMDEFS.ml_min_radius,
                 (NUMDEFS.ml_gamma_factor*gamma(alpha+beta))**(1.0/alpha))
    if tol is not None:
        if not 0.0 < tol < 1.0:
            raise ArgumentError('tol', 'Tolerance must be in (0, 1)')
        pad = NUMDEFS.ml_remainder_pad
        radius = max(radius, (log(1.0/tol) + pad)**alpha)
    return radius


@lru_cache(maxsize=None)
def _mp_context(dps: int) -> mpmath.MPContext:
    """Private extended-precision context with `dps` digits."""
    ctx = mpmath.MPContext()
    ctx.dps = dps
    return ctx


@lru_cache(maxsize=1024)
def _series_coefs(alpha: float,
                  beta: float,
                  dps: int,
                  block: int) -> tp.Tuple[tp.Any, ...]:
    """Block of reciprocal Gamma coefficients 1/Gamma(alpha*k+beta)."""
    ctx = _mp_context(dps)
    mp_a = ctx.mpf(alpha)
    mp_b = ctx.mpf(beta)
    start = block*_BLOCK
    return tuple(ctx.rgamma(mp_a*k + mp_b)
                 for k in range(start, start+_BLOCK))


def _working_digits(alpha: float, x: float) -> int:
    """Digits needed to absorb the cancellation of the series."""
    dps = NUMDEFS.ml_guard_digits
    if x < 0.0:
        dps += int(ceil(abs(x)**(1.0/alpha)/log(10.0)))
    return dps


def ml_series(p: MLParams,
              tol: float = NUMDEFS.ml_tol,
              max_terms: int = NUMDEFS.ml_max_terms) -> EvalResult:
    """Sum the Mittag-Leffler power series.

    Terms are accumulated in ascending order in extended precision.
    The summation stops when the current term and the geometric bound
    on the remaining tail both fall below tol*|sum|, floored at the
    working precision.  The threshold is relative to the partial sum,
    not absolute, so exponentially small values such as E_{1,1}(-30)
    keep their relative accuracy.

    Parameters
    ----------
    p
        Evaluation request.
    tol
        Stopping threshold.
    max_terms
        Maximum number of terms.

    Returns
    -------
    EvalResult
        Value with `branch='series'`.

    Raises
    ------
    ArgumentError
        Non-positive tolerance.
    ConvergenceError
        Stopping rule not met within `max_terms` terms.
    """
    if not tol > 0.0:
        raise ArgumentError('tol', 'Tolerance must be positive')
    alpha, beta, x = p.alpha, p.beta, p.x
    if x == 0.0:
        return EvalResult(rgamma(beta), 0.0, 1, 'series')
    dps = _working_digits(alpha, x)
    ctx = _mp_context(dps)
    mp_x = ctx.mpf(x)
    power = ctx.mpf(1)
    total = ctx.mpf(0)
    prev = None
    tail = None
    for k in range(max_terms):
        block, pos = divmod(k, _BLOCK)
        term = _series_coefs(alpha, beta, dps, block)[pos]*power
        total += term
        power *= mp_x
        size = abs(term)
        thresh = tol*max(abs(total), ctx.eps)
        if prev is not None and size <= thresh:
            ratio = size/prev
            if ratio < 1:
                tail = ratio/(1-ratio)*size
                if tail <= thresh:
                    break
        prev = size
    else:
        raise ConvergenceError('Mittag-Leffler series', max_terms)
    value = float(total)
    if not isfinite(value):
        raise NumericalError(
            f'Mittag-Leffler value overflows at {p!r}')
    est = float(tail) + _EPS*abs(value)
    return EvalResult(value, est, k+1, 'series')


def _exp_contribution(alpha: float,
                      beta: float,
                      xabs: float) -> tp.Tuple[float, float]:
    """Oscillating exponential part of the expansion for x=-xabs.

    Returns the value and a rounding-error scale.
    """
    if alpha < 1.0:
        return 0.0, 0.0
    weight = 1.0/alpha if alpha == 1.0 else 2.0/alpha
    radius = xabs**(1.0/alpha)
    phi = 1.0/alpha  # in units of pi
    # cos(pi*phi) = sin(pi*(phi+1/2)) keeps exact zeros
    re_z = radius*sinpi(phi + 0.5)
    im_z = radius*sinpi(phi)
    scale = weight*radius**(1.0 - beta)*exp(re_z)
    value = scale*cos(pi*(1.0 - beta)*phi + im_z)
    return value, scale*(1.0 + radius)*_EPS


def ml_asymptotic(p: MLParams,
                  k_max: int = NUMDEFS.ml_kmax) -> EvalResult:
    """Large-argument expansion of E_{a,b}(x) for negative x.

    The algebraic part sum_{k=1}^K (-1)^(k-1) |x|^(-k)/Gamma(b-a*k) is
    truncated at its smallest term (terms at poles of Gamma vanish and
    are skipped in this comparison).
    For 1 <= a <= 2, the exponential contributions of the conjugate
    saddle points are added, with half weight at a=1.

    Parameters
    ----------
    p
        Evaluation request.
    k_max
        Maximum number of algebraic terms.

    Returns
    -------
    EvalResult
        Value with `branch='asymptotic'`; `est_abs_error` holds the
        magnitude of the first omitted term plus a rounding estimate.

    Raises
    ------
    DomainError
        Positive argument, order outside (0, 2] or |x| below the base
        crossover radius.
    """
    alpha, beta, x = p.alpha, p.beta, p.x
    if alpha > 2.0:
        raise DomainError('ml_asymptotic', 'Order alpha must be in (0, 2]')
    if k_max < 0:
        raise ArgumentError('k_max', 'Number of terms must be non-negative')
    radius = crossover_radius(alpha, beta)
    if x >= 0.0 or -x < radius:
        raise DomainError(
            'ml_asymptotic',
            f'Asymptotic expansion needs x < -{radius:g}, got x={x:g}')
    xabs = -x
    total = 0.0
    abs_sum = 0.0
    prev = None
    omitted = None
    nterms = 0
    for k in range(1, k_max+2):
        term = (-1)**(k-1)*rgamma(beta - alpha*k)/xabs**k
        if term == 0.0:
            continue
        size = abs(term)
        if (k > k_max or (prev is not None and size >= prev)
                or size <= _EPS*abs(total)):
            omitted = size
            break
        total += term
        abs_sum += size
        nterms = k
        prev = size
    exp_val, exp_err = _exp_contribution(alpha, beta, xabs)
    value = total + exp_val
    est = (omitted or 0.0) + _EPS*abs_sum + exp_err
    return EvalResult(value, est, nterms, 'asymptotic')


def mittag_leffler(p: MLParams,
                   tol: float = NUMDEFS.ml_tol) -> EvalResult:
    """Evaluate the two-parameter Mittag-Leffler function.

    The series is used for |x| <= R and the asymptotic expansion for
    x < -R, with R = crossover_radius(alpha, beta, tol).
    Large positive arguments stay on the series branch.

    Parameters
    ----------
    p
        Evaluation request, 0 < alpha <= 2.
    tol
        Accuracy target.

    Returns
    -------
    EvalResult
        Value and diagnostics of the selected branch.

    Raises
    ------
    DomainError
        alpha outside (0, 2].
    """
    if p.alpha > 2.0:
        raise DomainError('mittag_leffler', 'Order alpha must be in (0, 2]')
    radius = crossover_radius(p.alpha, p.beta, tol)
    if p.x < -radius:
        res = ml_asymptotic(p)
    else:
        res = ml_series(p, tol)
    if logger.isEnabledFor(logging.DEBUG):
        logger.debug('E(%g,%g; %g) = %.17g [%s, %d terms]', p.alpha, p.beta,
                     p.x, res.value, res.branch, res.terms_used)
    return res


def ml_value(alpha: float,
             beta: float,
             x: float,
             tol: float = NUMDEFS.ml_tol) -> float:
    """Return the value of E_{alpha,beta}(x) only."""
    return mittag_leffler(MLParams(alpha, beta, x), tol).value


def ml_array(alpha: float,
             beta: float,
             xs: npt.ArrayLike,
             tol: float = NUMDEFS.ml_tol) -> np.ndarray:
    """Evaluate E_{alpha,beta} on an array of arguments.

    Parameters
    ----------
    alpha
        First order.
    beta
        Second order.
    xs
        Arguments, any shape.
    tol
        Accuracy target.

    Returns
    -------
    np.ndarray
        Values, same shape as `xs`.
    """
    arr = np.asarray(xs, dtype=float)
    res = np.array([ml_value(alpha, beta, x, tol) for x in arr.ravel()])
    return res.reshape(arr.shape)


def power_ratio_max(beta: float) -> tp.Tuple[float, float]:
    """Maximum of x^beta/(1+x) on the positive half-line.

    Parameters
    ----------
    beta
        Exponent, 0 < beta < 1.

    Returns
    -------
    float
        Position of the maximum, beta/(1-beta).
    float
        Maximum value, beta^beta*(1-beta)^(1-beta).

    Raises
    ------
    DomainError
        `beta` outside (0, 1).
    """
    if not 0.0 < beta < 1.0:
        raise DomainError('power_ratio_max', 'beta must be in (0, 1)')
    return beta/(1.0-beta), beta**beta*(1.0-beta)**(1.0-beta)
