"""Module providing discrete fractional operators.

Riemann-Liouville integrals, Caputo derivatives and Gagliardo
seminorms of functions sampled on uniform grids starting at t=0.

All operators are product-integration rules: the samples are
interpolated piecewise and integrated exactly against the kernel
(t-tau)^(b-1)/Gamma(b).  The weights only depend on the order and the
number of samples; they are cached for a unit step and scaled by the
actual grid step, so the operators are linear in the samples.

Notes
-----
* The rules presume continuous samples.  For genuinely rough data,
  the results are not controlled.
* Solutions of fractional evolution problems have derivatives behaving
  like t^s with non-integer s near 0.  The Caputo derivatives accept
  these exponents through `start_powers` and add starting weights so
  that the rule is exact on them.
"""

from functools import lru_cache
import typing as tp

import numpy as np
from scipy import integrate

from fracspec.base import ArgumentError, FracOrder, SampledFunction
from fracspec.tools.math import derivative, second_derivative
from fracspec.tools.special import gamma


# ==============
# Module Methods
# ==============

def _columns(values: np.ndarray) -> tp.Tuple[np.ndarray, bool]:
    """Return samples as (N, D) columns and a flag for scalar data."""
    arr = np.asarray(values, dtype=float)
    if arr.ndim == 1:
        return arr[:, None], True
    return arr, False


def _restore(arr: np.ndarray, scalar: bool) -> np.ndarray:
    return arr[:, 0] if scalar else arr


def _causal_conv(weights: np.ndarray,
                 data: np.ndarray,
                 nout: int) -> np.ndarray:
    """First `nout` entries of the convolution of weights and columns."""
    res = np.zeros((nout, data.shape[1]))
    if nout <= 0 or data.shape[0] == 0:
        return res
    for col in range(data.shape[1]):
        full = np.convolve(weights, data[:, col])
        num = min(nout, full.size)
        res[:num, col] = full[:num]
    return res


def _moments(expo: float, m: np.ndarray) -> np.ndarray:
    """Cell moments (m^e - (m-1)^e)/e."""
    return (m**expo - (m-1.0)**expo)/expo


def _check_grid(f: SampledFunction, nmin: int, name: str) -> None:
    if f.t0 != 0.0:
        raise ArgumentError('f', f'{name} requires a grid starting at t=0')
    if len(f) < nmin:
        raise ArgumentError(
            'f', f'{name} requires at least {nmin} samples, got {len(f)}')


@lru_cache(maxsize=64)
def _trap_weights(beta: float,
                  npts: int) -> tp.Tuple[np.ndarray, np.ndarray]:
    """Unit-step product-trapezoid weights.

    Returns the convolution weights w(m), m=0..npts-2, and the weights
    a0(n) of the first sample, n=1..npts-1.
    """
    m = np.arange(1, max(npts-1, 1), dtype=float)
    wgt = np.empty(max(npts-1, 1))
    wgt[0] = 1.0
    wgt[1:] = (m+1)**(beta+1) - 2*m**(beta+1) + (m-1)**(beta+1)
    n = np.arange(1, npts, dtype=float)
    first = (n-1)**(beta+1) - (n-1-beta)*n**beta
    wgt.setflags(write=False)
    first.setflags(write=False)
    return wgt, first


@lru_cache(maxsize=64)
def _quad_weights(beta: float, npts: int) -> np.ndarray:
    """Unit-step weights of the second-difference correction, m=1..npts-1.

    Integral over a cell at distance m of (m-s)^(b-1)*s*(s-1)/2.
    """
    m = np.arange(1, npts, dtype=float)
    res = (m*(m-1)*_moments(beta, m) - (2*m-1)*_moments(beta+1, m)
           + _moments(beta+2, m))/2
    res.setflags(write=False)
    return res


def _second_diff_corr(weights: np.ndarray, data: np.ndarray) -> np.ndarray:
    """Apply cell corrections weighted on second differences.

    Cell j uses the second difference over (j, j+1, j+2), except the
    last cell of each integral, which uses (j-1, j, j+1).
    Rows correspond to n=1..N-1.
    """
    npts = data.shape[0]
    res = np.zeros((npts-1, data.shape[1]))
    if npts < 3:
        return res
    dd2 = data[:-2] - 2*data[1:-1] + data[2:]
    res[0] = weights[0]*dd2[0]
    res[1:] = _causal_conv(weights[1:], dd2, npts-2) + weights[0]*dd2
    return res


def _cubic_cell(order: float,
                m: tp.Union[float, np.ndarray],
                q: float) -> tp.Union[float, np.ndarray]:
    """Integral over a cell at distance m of (m-s)^(-b)*d/ds[s(s-1)(s-q)]."""
    return (3*_moments(3-order, m) - (6*m - 2*(1+q))*_moments(2-order, m)
            + (3*m**2 - 2*(1+q)*m + q)*_moments(1-order, m))


@lru_cache(maxsize=64)
def _cubic_weights(order: float,
                   npts: int) -> tp.Tuple[np.ndarray, np.ndarray]:
    """Unit-step weights of the third-difference correction.

    Each cell gets the cubic through four consecutive nodes containing
    it, written as the quadratic of the L1-2 rule plus a term
    s(s-1)(s-q)/6 times a third difference, which vanishes at both
    ends of the cell.

    Returns the weights of the first third difference at nodes 1 and
    2, and the convolution weights of the third differences starting
    at node n-3-l, l=0..npts-4, for nodes n >= 3.
    """
    head = np.array([_cubic_cell(order, 1.0, 2.0),
                     _cubic_cell(order, 2.0, 2.0)
                     + _cubic_cell(order, 1.0, -1.0)])/6
    m = np.arange(3, npts, dtype=float)
    body = _cubic_cell(order, m, 2.0)
    body[0] += _cubic_cell(order, 2.0, 2.0) + _cubic_cell(order, 1.0, -1.0)
    body /= 6
    head.setflags(write=False)
    body.setflags(write=False)
    return head, body


def _l12_rule(order: float, data: np.ndarray, dt: float) -> np.ndarray:
    """Caputo derivative of order in (0, 1) by the L1-2 product rule.

    The samples are interpolated linearly plus quadratic and cubic
    corrections on each cell; the derivative of the interpolant is
    integrated exactly against the kernel.  The rule is exact on
    cubics when at least 4 samples are given.  Row 0 is set to 0.
    """
    npts = data.shape[0]
    m = np.arange(1, npts, dtype=float)
    lin = m**(1-order) - (m-1)**(1-order)
    quad = (m-0.5)*_moments(1-order, m) - _moments(2-order, m)
    res = np.zeros_like(data)
    res[1:] = _causal_conv(lin, np.diff(data, axis=0), npts-1) \
        / gamma(2-order)
    corr = np.zeros_like(data)
    corr[1:] = _second_diff_corr(quad, data)
    if npts >= 4:
        head, body = _cubic_weights(order, npts)
        dd3 = np.diff(data, n=3, axis=0)
        corr[1] += head[0]*dd3[0]
        corr[2] += head[1]*dd3[0]
        corr[3:] += _causal_conv(body, dd3, npts-3)
    res += corr/gamma(1-order)
    return res*dt**(-order)


def _exact_caputo_power(order: float, sigma: float,
                        t: np.ndarray) -> np.ndarray:
    """Caputo derivative of order in (0, 1) of t^sigma."""
    return gamma(sigma+1)/gamma(sigma+1-order)*t**(sigma-order)


@lru_cache(maxsize=64)
def _start_weights(order: float,
                   powers: tp.Tuple[float, ...],
                   npts: int) -> np.ndarray:
    """Unit-step starting weights making the L1-2 rule exact on t^s.

    Returns an (npts-1, K) array; row n-1 holds the weights of
    (g_k - g_0), k=1..K, at node n.
    """
    nodes = np.arange(npts, dtype=float)
    resid = np.empty((npts-1, len(powers)))
    for i, sigma in enumerate(powers):
        approx = _l12_rule(order, (nodes**sigma)[:, None], 1.0)[1:, 0]
        resid[:, i] = _exact_caputo_power(order, sigma, nodes[1:]) - approx
    kidx = np.arange(1, len(powers)+1, dtype=float)
    mat = np.array([kidx**sigma for sigma in powers])
    res = np.linalg.solve(mat, resid.T).T
    res.setflags(write=False)
    return res


def _caputo_low(order: float,
                data: np.ndarray,
                dt: float,
                start_powers: tp.Sequence[float]) -> np.ndarray:
    """L1-2 rule with optional starting weights."""
    res = _l12_rule(order, data, dt)
    if start_powers:
        powers = tuple(float(p) for p in start_powers)
        if any(p <= 0.0 for p in powers):
            raise ArgumentError('start_powers', 'Powers must be positive')
        if len(set(powers)) != len(powers):
            raise ArgumentError('start_powers', 'Powers must be distinct')
        if data.shape[0] <= len(powers):
            raise ArgumentError('f', 'Too few samples for starting weights')
        wgt = _start_weights(order, powers, data.shape[0])
        res[1:] += dt**(-order)*(wgt @ (data[1:len(powers)+1] - data[0]))
    return res


def rl_integral(beta: float,
                f: SampledFunction,
                scheme: str = 'trapezoid') -> SampledFunction:
    """Riemann-Liouville fractional integral of order beta.

    Computes I^b f(t) = 1/Gamma(b) int_0^t (t-tau)^(b-1) f(tau) dtau
    at every node by product integration: the samples are interpolated
    piecewise-linearly (`trapezoid`) or piecewise-quadratically
    (`quadratic`) and integrated exactly against the kernel.

    Parameters
    ----------
    beta
        Order, 0 < beta <= 1.
    f
        Samples on a grid starting at t=0.
    scheme
        Interpolation: 'trapezoid' or 'quadratic'.

    Returns
    -------
    SampledFunction
        Fractional integral on the same grid, 0 at t=0.

    Raises
    ------
    ArgumentError
        Order out of range, grid not starting at 0 or unknown scheme.
    """
    beta = FracOrder(beta, 'rl_integral').order
    _check_grid(f, 1, 'rl_integral')
    if scheme not in ('trapezoid', 'quadratic'):
        raise ArgumentError('scheme', f'Unknown quadrature scheme: {scheme}')
    data, scalar = _columns(f.values)
    npts = data.shape[0]
    res = np.zeros_like(data)
    if npts > 1:
        wgt, first = _trap_weights(beta, npts)
        res[1:] = _causal_conv(wgt, data[1:], npts-1) \
            + first[:, None]*data[0]
        res *= f.dt**beta/gamma(beta+2)
        if scheme == 'quadratic' and npts >= 3:
            corr = _second_diff_corr(_quad_weights(beta, npts), data)
            res[1:] += corr*f.dt**beta/gamma(beta)
    return f.with_values(_restore(res, scalar))


def caputo_01(beta: float,
              f: SampledFunction,
              start_powers: tp.Sequence[float] = ()) -> SampledFunction:
    """Caputo derivative of order beta in (0, 1).

    Computes I^(1-b)(f') by the L1-2 product rule: f is interpolated
    piecewise-cubically and the derivative of the interpolant is
    integrated exactly against the kernel of order 1-b.

    Parameters
    ----------
    beta
        Order, 0 < beta < 1.
    f
        Samples on a grid starting at t=0.
    start_powers
        Exponents s > 0 of singular terms t^s of f near 0.

    Returns
    -------
    SampledFunction
        Caputo derivative on the same grid, 0 at t=0.

    Raises
    ------
    ArgumentError
        Order out of range or fewer than 3 samples.
    """
    beta = FracOrder(beta, 'caputo_01').order
    _check_grid(f, 3, 'caputo_01')
    data, scalar = _columns(f.values)
    res = _caputo_low(beta, data, f.dt, start_powers)
    return f.with_values(_restore(res, scalar))


def caputo_12(alpha: float,
              f: SampledFunction,
              f1: tp.Optional[tp.Union[float, np.ndarray]] = None,
              method: str = 'l12',
              start_powers: tp.Sequence[float] = ()) -> SampledFunction:
    """Caputo derivative of order alpha in (1, 2).

    The derivative is I^(2-a)(f'') = D^(a-1)(f'), the Caputo derivative
    of order a-1 of the first derivative.

    With `method='l12'`, nodal values of f' are obtained by
    fourth-order stencils and differentiated with the L1-2 rule.
    The initial slope f'(0) is `f1` if given, the one-sided stencil
    value otherwise.
    With `method='direct'`, f'' is computed by second-order stencils
    and integrated with `rl_integral`.

    Parameters
    ----------
    alpha
        Order, 1 < alpha < 2.
    f
        Samples on a grid starting at t=0.
    f1
        Known initial slope f'(0).
    method
        'l12' or 'direct'.
    start_powers
        Exponents s > 0 of singular terms t^s of f' near 0 (l12 only).

    Returns
    -------
    SampledFunction
        Caputo derivative on the same grid.

    Raises
    ------
    ArgumentError
        Order out of range, fewer than 4 samples or unknown method.
    """
    alpha = FracOrder(alpha, 'caputo_12').order
    _check_grid(f, 4, 'caputo_12')
    if method == 'direct':
        return rl_integral(2-alpha,
                           f.with_values(second_derivative(f.values, f.dt)))
    elif method != 'l12':
        raise ArgumentError('method', f'Unknown method: {method}')
    data, scalar = _columns(derivative(f.values, f.dt))
    if f1 is not None:
        data[0] = f1
    res = _caputo_low(alpha-1, data, f.dt, start_powers)
    return f.with_values(_restore(res, scalar))


def memory_identity_lhs(alpha: float,
                        f: SampledFunction,
                        f1: tp.Union[float, np.ndarray]) -> SampledFunction:
    """Compute d/dt I^(2-a)(f' - f'(0)).

    The memory form of the Caputo derivative of order a in (1, 2),
    which coincides with it when f' is absolutely continuous.

    Parameters
    ----------
    alpha
        Order, 1 < alpha < 2.
    f
        Samples on a grid starting at t=0.
    f1
        Exact initial slope f'(0), scalar or vector.

    Returns
    -------
    SampledFunction
        Derivative of the memory term on the same grid.
    """
    alpha = FracOrder(alpha, 'caputo_12').order
    _check_grid(f, 4, 'memory_identity_lhs')
    slope = derivative(f.values, f.dt) - np.asarray(f1, dtype=float)
    memory = rl_integral(2-alpha, f.with_values(slope), scheme='quadratic')
    return f.with_values(derivative(memory.values, f.dt))


def gagliardo_seminorm(beta: float,
                       f: SampledFunction,
                       get_band: bool = False
                       ) -> tp.Union[float, tp.Tuple[float, float]]:
    """Gagliardo seminorm of order beta on the grid interval.

    Double trapezoid sum of |f(t)-f(tau)|^2/|t-tau|^(1+2b), with the
    diagonal band |t-tau| < dt excluded.  The norm inside is Euclidean
    for vector-valued samples.

    Parameters
    ----------
    beta
        Order, 0 < beta < 1.
    f
        Samples, at least 2.
    get_band
        Also return an estimate of the excluded band contribution,
        sum_i dt*|f'_i|^2*2*dt^(2-2b)/(2-2b), on the squared scale.

    Returns
    -------
    float
        Seminorm.
    float, optional
        Estimated contribution of the excluded band (squared).

    Raises
    ------
    ArgumentError
        Order out of range or fewer than 2 samples.
    """
    if not 0.0 < beta < 1.0:
        raise ArgumentError('beta', 'Order must be in (0, 1)')
    if len(f) < 2:
        raise ArgumentError('f', 'At least 2 samples are needed')
    data, _ = _columns(f.values)
    npts = data.shape[0]
    wgt = np.full(npts, f.dt)
    wgt[[0, -1]] *= 0.5
    idx = np.arange(npts)
    dist = np.abs(idx[:, None] - idx[None, :])*f.dt
    np.fill_diagonal(dist, 1.0)
    kernel = dist**(-1.0-2*beta)
    np.fill_diagonal(kernel, 0.0)
    diff2 = np.zeros((npts, npts))
    for col in range(data.shape[1]):
        diff2 += (data[:, col, None] - data[None, :, col])**2
    total = float(wgt @ (diff2*kernel) @ wgt)
    semi = np.sqrt(total)
    if not get_band:
        return semi
    if npts >= 3:
        slope = derivative(data, f.dt)
    else:
        slope = np.repeat(np.diff(data, axis=0)/f.dt, 2, axis=0)
    band = float(wgt @ np.sum(slope**2, axis=1)) \
        * 2*f.dt**(2-2*beta)/(2-2*beta)
    return semi, band


def sobolev_norm(beta: float, f: SampledFunction) -> float:
    """Norm of f in H^b(0, T): (|f|_{L2}^2 + [f]_b^2)^(1/2)."""
    data, _ = _columns(f.values)
    l2sq = integrate.trapezoid(np.sum(data**2, axis=1), dx=f.dt)
    return float(np.sqrt(l2sq + gagliardo_seminorm(beta, f)**2))
