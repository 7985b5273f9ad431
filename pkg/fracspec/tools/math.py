"""Module providing mathematical functions.

A basic module providing methods for some useful numerical operations
on uniform grids, for FRACSPEC tools.

"""

from math import exp
import typing as tp

import numpy as np
import numpy.typing as npt
from scipy import integrate

from fracspec.base import ArgumentError


# ==============
# Module Methods
# ==============

def sinpi(x: npt.ArrayLike) -> tp.Union[float, np.ndarray]:
    """Compute sin(pi*x) with exact zeros at integers.

    The argument is reduced modulo 2 before multiplying by pi, so that
    integer arguments give exactly 0 and the result keeps its relative
    accuracy for large `x`.

    Parameters
    ----------
    x
        Argument(s).

    Returns
    -------
    float or np.ndarray
        sin(pi*x), same shape as `x`.
    """
    arr = np.asarray(x, dtype=float)
    red = np.remainder(arr, 2.0)
    sign = np.where(red > 1.0, -1.0, 1.0)
    red = np.where(red > 1.0, red - 1.0, red)
    red = np.minimum(red, 1.0 - red)
    res = sign*np.sin(np.pi*red)
    if res.ndim == 0:
        return float(res)
    return res


def derivative(f: npt.ArrayLike, dt: float, axis: int = 0) -> np.ndarray:
    """Differentiate uniformly sampled values.

    Uses fourth-order centered stencils inside the grid and one-sided
    fourth-order stencils at the first and last two points, so that
    polynomials up to degree 4 are differentiated exactly.
    With fewer than 5 samples, second-order stencils are used.

    Parameters
    ----------
    f
        Sampled values, time along `axis`.
    dt
        Grid spacing.
    axis
        Axis of the time variable.

    Returns
    -------
    np.ndarray
        Derivative at the nodes.

    Raises
    ------
    ArgumentError
        Fewer than 3 samples.
    """
    arr = np.moveaxis(np.asarray(f, dtype=float), axis, 0)
    npts = arr.shape[0]
    if npts < 3:
        raise ArgumentError('f', 'At least 3 samples needed to differentiate')
    if npts < 5:
        res = np.gradient(arr, dt, axis=0, edge_order=2)
        return np.moveaxis(res, 0, axis)
    res = np.empty_like(arr)
    res[2:-2] = (arr[:-4] - 8*arr[1:-3] + 8*arr[3:-1] - arr[4:])
    res[0] = (-25*arr[0] + 48*arr[1] - 36*arr[2] + 16*arr[3] - 3*arr[4])
    res[1] = (-3*arr[0] - 10*arr[1] + 18*arr[2] - 6*arr[3] + arr[4])
    res[-2] = (3*arr[-1] + 10*arr[-2] - 18*arr[-3] + 6*arr[-4] - arr[-5])
    res[-1] = (25*arr[-1] - 48*arr[-2] + 36*arr[-3] - 16*arr[-4]
               + 3*arr[-5])
    res /= 12*dt
    return np.moveaxis(res, 0, axis)


def second_derivative(f: npt.ArrayLike, dt: float) -> np.ndarray:
    """Second derivative of uniformly sampled values.

    Centered 3-point stencil inside the grid, one-sided second-order
    4-point stencils at both ends.

    Parameters
    ----------
    f
        Sampled values, time along the first axis.
    dt
        Grid spacing.

    Returns
    -------
    np.ndarray
        Second derivative at the nodes.

    Raises
    ------
    ArgumentError
        Fewer than 4 samples.
    """
    arr = np.asarray(f, dtype=float)
    if arr.shape[0] < 4:
        raise ArgumentError(
            'f', 'At least 4 samples needed for the second derivative')
    res = np.empty_like(arr)
    res[1:-1] = arr[:-2] - 2*arr[1:-1] + arr[2:]
    res[0] = 2*arr[0] - 5*arr[1] + 4*arr[2] - arr[3]
    res[-1] = 2*arr[-1] - 5*arr[-2] + 4*arr[-3] - arr[-4]
    return res/dt**2


def laplace_transform(func: tp.Callable[[float], float],
                      z: float,
                      t_max: tp.Optional[float] = None,
                      tail_tol: float = 1.0e-10,
                      growth: float = 1.0) -> float:
    """Numerical Laplace transform of a function on the half line.

    Computes int_0^T exp(-z*t)*func(t) dt by adaptive quadrature,
    with T chosen so that exp(-z*T)*T**growth < `tail_tol` unless given.

    Parameters
    ----------
    func
        Function of time.
    z
        Real, positive Laplace variable.
    t_max
        Truncation of the half line.
    tail_tol
        Target size of the neglected tail.
    growth
        Power-law growth of `func` used to set the truncation.

    Returns
    -------
    float
        Laplace transform at `z`.

    Raises
    ------
    ArgumentError
        Non-positive `z`.
    """
    if z <= 0.0:
        raise ArgumentError('z', 'Laplace variable must be positive')
    if t_max is None:
        t_max = 1.0
        while exp(-z*t_max)*t_max**growth > tail_tol:
            t_max *= 1.5
    res, _ = integrate.quad(lambda t: exp(-z*t)*func(t), 0.0, t_max,
                            limit=400, epsabs=tail_tol, epsrel=1.0e-11)
    return res


def refinement_orders(errors: tp.Sequence[float],
                      steps: tp.Sequence[float]) -> np.ndarray:
    """Observed convergence orders of a refinement sequence.

    Parameters
    ----------
    errors
        Errors for successively refined steps.
    steps
        Corresponding steps.

    Returns
    -------
    np.ndarray
        log(e_k/e_{k+1})/log(h_k/h_{k+1}), one entry less than `errors`.
    """
    err = np.asarray(errors, dtype=float)
    hval = np.asarray(steps, dtype=float)
    if err.size < 2 or err.size != hval.size:
        raise ArgumentError(
            'errors', 'At least two errors, one per step, are needed')
    return np.log(err[:-1]/err[1:])/np.log(hval[:-1]/hval[1:])
