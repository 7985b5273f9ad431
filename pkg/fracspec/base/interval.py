"""Model problems on the interval (0, L).

Two instances of the abstract operator with explicit eigenpairs:

- 'wave': Dirichlet Laplacian, lam_n = (n pi/L)^2, for the
  time-fractional wave equation D^a u = u_xx.
- 'petrovsky': hinged biharmonic operator (u = u_xx = 0 at both ends),
  lam_n = (n pi/L)^4, for D^a u + u_xxxx = 0.

Both share the eigenfunctions e_n(x) = sqrt(2/L) sin(n pi x/L).

Classes
-------
IntervalProblem
    Kind, length, number of modes and projection quadrature.
FieldGrid
    Space-time samples of a field, time-major.
"""

import typing as tp

import numpy as np
import numpy.typing as npt
from scipy import integrate

from fracspec.base.errors import ArgumentError
from fracspec.base.spectral import SpectralOperator, SpectralState, \
    evolve_many, frac_power_norm
from fracspec.data.numerics import NUMDEFS
from fracspec.logging import get_logger
from fracspec.tools.math import sinpi

logger = get_logger(__name__)

INTERVAL_KINDS = ('wave', 'petrovsky')

# Initial data: function of x, modal coefficients or None (zero)
TypeInitial = tp.Optional[tp.Union[tp.Callable[[np.ndarray], npt.ArrayLike],
                                   tp.Sequence[float], np.ndarray]]


# ==============
# Module Classes
# ==============

class IntervalProblem(object):
    """Fractional evolution problem on (0, L).

    Parameters
    ----------
    length
        Length L of the interval.
    kind
        'wave' or 'petrovsky'.
    n_modes
        Number of modes kept.
    quadrature_points
        Number of nodes of the composite Simpson projection rule.

    Raises
    ------
    ArgumentError
        Invalid length, kind, number of modes or of nodes.
    """

    def __init__(self, length: float,
                 kind: str,
                 n_modes: int,
                 quadrature_points: int = NUMDEFS.quad_points) -> None:
        if not length > 0.0:
            raise ArgumentError('length', 'Interval length must be positive')
        if kind not in INTERVAL_KINDS:
            raise ArgumentError('kind', f'Unknown problem kind: {kind}')
        if n_modes < 1:
            raise ArgumentError('n_modes', 'At least one mode is needed')
        if quadrature_points < 2:
            raise ArgumentError('quadrature_points',
                                'At least 2 quadrature points are needed')
        self.__length = float(length)
        self.__kind = kind
        self.__nmodes = int(n_modes)
        self.__qpts = int(quadrature_points)
        index = np.arange(1, self.__nmodes+1, dtype=float)
        # (pi/L)^2 first, so that L = pi gives integer eigenvalues
        evals = (np.pi/self.__length)**2*index**2
        if kind == 'petrovsky':
            evals = evals**2
        self.__operator = SpectralOperator(evals)

    def __repr__(self) -> str:
        return f'IntervalProblem(length={self.__length!r}, ' \
            + f'kind={self.__kind!r}, n_modes={self.__nmodes})'

    @property
    def length(self) -> float:
        """Length of the interval."""
        return self.__length

    @property
    def kind(self) -> str:
        """Kind of problem."""
        return self.__kind

    @property
    def n_modes(self) -> int:
        """Number of modes."""
        return self.__nmodes

    @property
    def quadrature_points(self) -> int:
        """Number of nodes of the projection rule."""
        return self.__qpts

    @property
    def operator(self) -> SpectralOperator:
        """Truncated spectrum, with coercivity constant lam_1."""
        return self.__operator

    @property
    def eigenvalues(self) -> np.ndarray:
        """Eigenvalues lam_1..lam_N."""
        return self.__operator.eigenvalues


class FieldGrid(object):
    """Samples of a space-time field.

    Parameters
    ----------
    x
        Positions, in [0, L].
    t
        Times, t >= 0.
    values
        Samples, shape (len(t), len(x)).
    """

    def __init__(self, x: npt.ArrayLike,
                 t: npt.ArrayLike,
                 values: npt.ArrayLike) -> None:
        xarr = np.array(x, dtype=float).ravel()
        tarr = np.array(t, dtype=float).ravel()
        arr = np.array(values, dtype=float)
        if arr.shape != (tarr.size, xarr.size):
            raise ArgumentError(
                'values', f'Expected shape {(tarr.size, xarr.size)}, '
                + f'got {arr.shape}')
        for item in (xarr, tarr, arr):
            item.setflags(write=False)
        self.__x = xarr
        self.__t = tarr
        self.__values = arr

    def __repr__(self) -> str:
        return f'FieldGrid(nt={self.__t.size}, nx={self.__x.size})'

    @property
    def x(self) -> np.ndarray:
        """Positions."""
        return self.__x

    @property
    def t(self) -> np.ndarray:
        """Times."""
        return self.__t

    @property
    def values(self) -> np.ndarray:
        """Samples, one row per time."""
        return self.__values


# ==============
# Module Methods
# ==============

def _check_index(p: IntervalProblem, n: int) -> None:
    if not 1 <= n <= p.n_modes:
        raise ArgumentError('n', f'Mode index must be in [1, {p.n_modes}]')


def eigenpair(p: IntervalProblem,
              n: int) -> tp.Tuple[float, tp.Callable[[npt.ArrayLike],
                                                     np.ndarray]]:
    """Eigenvalue and normalized eigenfunction of mode n (from 1).

    Raises
    ------
    ArgumentError
        Index out of range.
    """
    _check_index(p, n)
    length = p.length
    norm = np.sqrt(2.0/length)

    def efun(x: npt.ArrayLike) -> np.ndarray:
        return norm*sinpi(np.asarray(x, dtype=float)/length*n)

    return float(p.eigenvalues[n-1]), efun


def sample_modes(p: IntervalProblem, x: npt.ArrayLike) -> np.ndarray:
    """Values of all eigenfunctions at positions x.

    Returns
    -------
    np.ndarray
        Array of shape (n_modes, len(x)), exactly 0 at x=0 and x=L.
    """
    xred = np.asarray(x, dtype=float).ravel()/p.length
    index = np.arange(1, p.n_modes+1, dtype=float)
    return np.sqrt(2.0/p.length)*sinpi(np.outer(index, xred))


def project(p: IntervalProblem,
            f: tp.Callable[[np.ndarray], npt.ArrayLike]) -> np.ndarray:
    """Modal coefficients <f, e_n> by composite Simpson quadrature.

    Parameters
    ----------
    p
        Interval problem.
    f
        Vectorized function of x.

    Returns
    -------
    np.ndarray
        Coefficients for n = 1..n_modes.

    Raises
    ------
    ArgumentError
        Fewer than 3 quadrature points.
    """
    if p.quadrature_points < 3:
        raise ArgumentError('quadrature_points',
                            'Simpson projection needs at least 3 points')
    xgrid = np.linspace(0.0, p.length, p.quadrature_points)
    fvals = np.broadcast_to(np.asarray(f(xgrid), dtype=float), xgrid.shape)
    return integrate.simpson(sample_modes(p, xgrid)*fvals, x=xgrid, axis=1)


def _coefficients(p: IntervalProblem, data: TypeInitial) -> np.ndarray:
    if data is None:
        return np.zeros(p.n_modes)
    if callable(data):
        return project(p, data)
    coefs = np.asarray(data, dtype=float).ravel()
    if coefs.size > p.n_modes:
        raise ArgumentError('coefficients',
                            f'More coefficients than modes ({p.n_modes})')
    return np.concatenate((coefs, np.zeros(p.n_modes - coefs.size)))


def initial_state(p: IntervalProblem,
                  alpha: float,
                  u0: TypeInitial,
                  u1: TypeInitial,
                  regularity: tp.Optional[str] = None,
                  tol: float = NUMDEFS.ml_tol) -> SpectralState:
    """Modal state of initial data given as functions or coefficients.

    Functions of x are projected on the eigenbasis, sequences are taken
    as the leading modal coefficients (the rest set to 0), None is the
    zero function.
    """
    return SpectralState(_coefficients(p, u0), _coefficients(p, u1),
                         alpha, p.operator, regularity, tol)


def _assemble(p: IntervalProblem,
              x: np.ndarray,
              modal: np.ndarray) -> np.ndarray:
    """Sum modal values (nt, N) on the eigenfunctions, in ascending n."""
    modes = sample_modes(p, x)
    res = np.zeros((modal.shape[0], x.size))
    for n in range(p.n_modes):
        res += np.outer(modal[:, n], modes[n])
    return res


def _grids(x: npt.ArrayLike,
           t: npt.ArrayLike,
           length: float) -> tp.Tuple[np.ndarray, np.ndarray]:
    xarr = np.asarray(x, dtype=float).ravel()
    tarr = np.asarray(t, dtype=float).ravel()
    if np.any(xarr < 0.0) or np.any(xarr > length):
        raise ArgumentError('x', 'Positions must be in [0, L]')
    if np.any(tarr < 0.0):
        raise ArgumentError('t', 'Times must be non-negative')
    return xarr, tarr


def solve_field(p: IntervalProblem,
                alpha: float,
                u0: TypeInitial,
                u1: TypeInitial,
                x: npt.ArrayLike,
                t: npt.ArrayLike,
                tol: float = NUMDEFS.ml_tol,
                nthreads: tp.Optional[int] = None) -> FieldGrid:
    """Solution u(t, x) on a space-time grid.

    Parameters
    ----------
    p
        Interval problem.
    alpha
        Order, 1 < alpha < 2.
    u0
        Initial value (function of x, coefficients or None).
    u1
        Initial velocity (function of x, coefficients or None).
    x
        Positions in [0, L].
    t
        Times.
    tol
        Accuracy target of the Mittag-Leffler evaluations.
    nthreads
        Number of threads over times.

    Returns
    -------
    FieldGrid
        u sampled at (t, x), time-major.
    """
    xarr, tarr = _grids(x, t, p.length)
    state = initial_state(p, alpha, u0, u1, tol=tol)
    trajs = evolve_many(state, tarr, nthreads)
    modal = np.array([traj.u for traj in trajs]).reshape(tarr.size,
                                                         p.n_modes)
    logger.info('Field of %r: %d times x %d positions',
                p, tarr.size, xarr.size)
    return FieldGrid(xarr, tarr, _assemble(p, xarr, modal))


def field_velocity_and_caputo(p: IntervalProblem,
                              alpha: float,
                              u0: TypeInitial,
                              u1: TypeInitial,
                              x: npt.ArrayLike,
                              t: npt.ArrayLike,
                              tol: float = NUMDEFS.ml_tol,
                              nthreads: tp.Optional[int] = None
                              ) -> tp.Tuple[FieldGrid, FieldGrid]:
    """Velocity u_t and Caputo derivative D^a u on a space-time grid.

    Same arguments as `solve_field`.  The Caputo derivative is
    assembled from the modal relation D^a u_n = -lam_n u_n.

    Returns
    -------
    FieldGrid
        u_t.
    FieldGrid
        D^a u.
    """
    xarr, tarr = _grids(x, t, p.length)
    state = initial_state(p, alpha, u0, u1, tol=tol)
    trajs = evolve_many(state, tarr, nthreads)
    shape = (tarr.size, p.n_modes)
    dmodal = np.array([traj.du for traj in trajs]).reshape(shape)
    cmodal = np.array([traj.d_alpha_u for traj in trajs]).reshape(shape)
    return (FieldGrid(xarr, tarr, _assemble(p, xarr, dmodal)),
            FieldGrid(xarr, tarr, _assemble(p, xarr, cmodal)))


def field_energy(p: IntervalProblem, grid: FieldGrid) -> np.ndarray:
    """Energy norm |sqrt(A) u(t)| of each time row of a field.

    The rows are projected back on the eigenbasis by Simpson quadrature
    on the positions of the grid, which must cover [0, L] uniformly.
    """
    if grid.x.size < 3:
        raise ArgumentError('grid', 'At least 3 positions are needed')
    modes = sample_modes(p, grid.x)
    res = np.empty(grid.t.size)
    for i, row in enumerate(grid.values):
        coefs = integrate.simpson(modes*row, x=grid.x, axis=1)
        res[i] = frac_power_norm(0.5, coefs, p.operator)
    return res
