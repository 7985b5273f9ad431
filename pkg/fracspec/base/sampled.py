"""Functions sampled on uniform time grids.

Provides the containers on which the discrete fractional operators
work.

Classes
-------
SampledFunction
    Scalar or vector values on a uniform grid t_i = t0 + i*dt.
FracOrder
    Order and kind of a fractional operator.
"""

import typing as tp

import numpy as np

from fracspec.base.errors import ArgumentError
from fracspec.base.types import TypeFunc, TypeSamples


# ================
# Module Constants
# ================

FRAC_KINDS = {
    'rl_integral': (0.0, 1.0, True),  # (low, high, high included)
    'caputo_01': (0.0, 1.0, False),
    'caputo_12': (1.0, 2.0, False),
}


# ==============
# Module Classes
# ==============

class SampledFunction(object):
    """Function sampled on a uniform time grid.

    Parameters
    ----------
    t0
        First time.
    dt
        Grid spacing.
    values
        Samples, shape (N,) for scalar functions or (N, D) for vector
        valued functions.

    Raises
    ------
    ArgumentError
        Empty samples, non-positive step or inconsistent shapes.
    """

    def __init__(self, t0: float, dt: float, values: TypeSamples) -> None:
        arr = np.array(values, dtype=float)
        if arr.ndim not in (1, 2) or arr.shape[0] == 0:
            raise ArgumentError(
                'values', 'Samples must be a non-empty (N,) or (N, D) array')
        if not dt > 0.0:
            raise ArgumentError('dt', 'Grid spacing must be positive')
        arr.setflags(write=False)
        self.__t0 = float(t0)
        self.__dt = float(dt)
        self.__values = arr

    def __len__(self) -> int:
        return self.__values.shape[0]

    def __repr__(self) -> str:
        return f'SampledFunction(t0={self.__t0!r}, dt={self.__dt!r}, ' \
            + f'npts={len(self)}, shape={self.__values.shape[1:]})'

    @classmethod
    def from_function(cls, func: TypeFunc,
                      t_max: float,
                      dt: float,
                      t0: float = 0.0) -> 'SampledFunction':
        """Sample a vectorized function on [t0, t_max].

        The number of intervals is round((t_max-t0)/dt).

        Parameters
        ----------
        func
            Function of time, vectorized on arrays.
        t_max
            Last time.
        dt
            Grid spacing.
        t0
            First time.

        Returns
        -------
        SampledFunction
            Sampled function.
        """
        nint = int(round((t_max - t0)/dt))
        if nint < 0:
            raise ArgumentError('t_max', 'Upper bound below lower bound')
        times = t0 + dt*np.arange(nint+1)
        return cls(t0, dt, func(times))

    @property
    def t0(self) -> float:
        """First time of the grid."""
        return self.__t0

    @property
    def dt(self) -> float:
        """Grid spacing."""
        return self.__dt

    @property
    def values(self) -> np.ndarray:
        """Samples (read-only)."""
        return self.__values

    @property
    def times(self) -> np.ndarray:
        """Times of the grid."""
        return self.__t0 + self.__dt*np.arange(len(self))

    def with_values(self, values: TypeSamples) -> 'SampledFunction':
        """Build a sampled function on the same grid."""
        return SampledFunction(self.__t0, self.__dt, values)

    def index(self, t: float) -> int:
        """Index of the grid point closest to `t`."""
        i = int(round((t - self.__t0)/self.__dt))
        if i < 0 or i >= len(self):
            raise ArgumentError('t', f'Time {t:g} outside the grid')
        return i

    def at(self, t: float) -> tp.Union[float, np.ndarray]:
        """Value at the grid point closest to `t`."""
        res = self.__values[self.index(t)]
        return float(res) if res.ndim == 0 else res.copy()


class FracOrder(object):
    """Order and kind of a fractional operator.

    Parameters
    ----------
    order
        Order of the operator.
    kind
        One of 'rl_integral' (order in (0, 1]), 'caputo_01' (order in
        (0, 1)) or 'caputo_12' (order in (1, 2)).

    Raises
    ------
    ArgumentError
        Unknown kind or order outside the range of the kind.
    """

    def __init__(self, order: float, kind: str) -> None:
        if kind not in FRAC_KINDS:
            raise ArgumentError('kind', f'Unknown operator kind: {kind}')
        low, high, closed = FRAC_KINDS[kind]
        order = float(order)
        ok = low < order < high or (closed and order == high)
        if not ok:
            bracket = ']' if closed else ')'
            raise ArgumentError(
                'order',
                f'Order of {kind} must be in ({low:g}, {high:g}{bracket}, '
                + f'got {order:g}')
        self.__order = order
        self.__kind = kind

    def __repr__(self) -> str:
        return f'FracOrder({self.__order!r}, {self.__kind!r})'

    @property
    def order(self) -> float:
        """Order of the operator."""
        return self.__order

    @property
    def kind(self) -> str:
        """Kind of the operator."""
        return self.__kind
