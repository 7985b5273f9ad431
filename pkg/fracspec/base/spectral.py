"""Spectral solutions of abstract fractional evolution equations.

Solutions of D^a u + A u = 0, 1 < a < 2, for a self-adjoint positive
operator A with distinct eigenvalues lam_1 < lam_2 < ..., expanded on
its eigenbasis (e_n):

    u(t) = sum_n [<u0,e_n> E_{a,1}(-lam_n t^a)
                  + <u1,e_n> t E_{a,2}(-lam_n t^a)] e_n

Each mode is a scalar Cauchy problem (see `fracspec.tools.scalar`).
Reductions over modes are always done in ascending mode order, so that
results do not depend on the number of threads.

Classes
-------
SpectralOperator
    Truncated spectrum of A.
SpectralState
    Modal coefficients of the initial data.
ModalTrajectory
    Modal values of u, u', D^a u and of the memory term at time t.
RegularityReport
    Norms of the initial data and regularity class.
"""

from math import cos, pi
import typing as tp

import numpy as np

from fracspec.base.errors import ArgumentError, DomainError, ZeroDataError
from fracspec.base.types import TypeCoeffs, TypeRange
from fracspec.data.numerics import NUMDEFS
from fracspec.logging import get_logger
from fracspec.tools.comp import ordered_map
from fracspec.tools.scalar import ScalarProblem, scalar_caputo, \
    scalar_memory, scalar_solution, scalar_velocity

logger = get_logger(__name__)

REGULARITY_TAGS = ('weak', 'strong')


# ==============
# Module Classes
# ==============

class SpectralOperator(object):
    """Truncated spectrum of a positive self-adjoint operator.

    Parameters
    ----------
    eigenvalues
        Strictly increasing positive eigenvalues.
    coercivity
        Constant a with <Ax,x> >= a|x|^2 (default: first eigenvalue).

    Raises
    ------
    ArgumentError
        Empty, non-increasing or non-positive spectrum, or coercivity
        constant above the first eigenvalue.
    """

    def __init__(self, eigenvalues: TypeCoeffs,
                 coercivity: tp.Optional[float] = None) -> None:
        evals = np.array(eigenvalues, dtype=float).ravel()
        if evals.size == 0:
            raise ArgumentError('eigenvalues', 'At least one eigenvalue')
        if np.any(np.diff(evals) <= 0.0):
            raise ArgumentError('eigenvalues',
                                'Eigenvalues must be strictly increasing')
        if coercivity is None:
            coercivity = float(evals[0])
        if not 0.0 < coercivity <= evals[0]:
            raise ArgumentError(
                'coercivity',
                'Coercivity constant must be in (0, first eigenvalue]')
        evals.setflags(write=False)
        self.__evals = evals
        self.__coerc = float(coercivity)

    def __len__(self) -> int:
        return self.__evals.size

    def __repr__(self) -> str:
        return f'SpectralOperator(count={self.count}, ' \
            + f'lam_1={self.__evals[0]!r}, lam_N={self.__evals[-1]!r})'

    @property
    def eigenvalues(self) -> np.ndarray:
        """Eigenvalues (read-only)."""
        return self.__evals

    @property
    def count(self) -> int:
        """Number of modes."""
        return self.__evals.size

    @property
    def coercivity(self) -> float:
        """Coercivity constant."""
        return self.__coerc

    def truncate(self, count: int) -> 'SpectralOperator':
        """Keep the first `count` modes."""
        if not 1 <= count <= self.count:
            raise ArgumentError('count', 'Invalid number of modes')
        return SpectralOperator(self.__evals[:count], self.__coerc)


class SpectralState(object):
    """Modal coefficients of the initial data of a fractional problem.

    Parameters
    ----------
    c0
        Coefficients <u0, e_n>.
    c1
        Coefficients <u1, e_n>.
    alpha
        Order, 1 < alpha < 2.
    operator
        Spectrum of A.
    regularity
        Declared regularity of the data: 'weak' for D(sqrt(A))xH,
        'strong' for D(A)xD(sqrt(A)), None if unknown.
    tol
        Accuracy target of the Mittag-Leffler evaluations.

    Raises
    ------
    ArgumentError
        Inconsistent lengths, order out of range or unknown tag.
    """

    def __init__(self, c0: TypeCoeffs,
                 c1: TypeCoeffs,
                 alpha: float,
                 operator: SpectralOperator,
                 regularity: tp.Optional[str] = None,
                 tol: float = NUMDEFS.ml_tol) -> None:
        coef0 = np.array(c0, dtype=float).ravel()
        coef1 = np.array(c1, dtype=float).ravel()
        if coef0.size != operator.count or coef1.size != operator.count:
            raise ArgumentError(
                'c0', 'Coefficients must have one entry per mode')
        if not 1.0 < alpha < 2.0:
            raise ArgumentError('alpha', 'Order must be in (1, 2)')
        if regularity is not None and regularity not in REGULARITY_TAGS:
            raise ArgumentError('regularity',
                                f'Unknown regularity tag: {regularity}')
        coef0.setflags(write=False)
        coef1.setflags(write=False)
        self.__c0 = coef0
        self.__c1 = coef1
        self.__alpha = float(alpha)
        self.__op = operator
        self.__reg = regularity
        self.__tol = float(tol)

    def __repr__(self) -> str:
        return f'SpectralState(alpha={self.__alpha!r}, ' \
            + f'count={self.__op.count}, regularity={self.__reg!r})'

    @property
    def c0(self) -> np.ndarray:
        """Coefficients of the initial value."""
        return self.__c0

    @property
    def c1(self) -> np.ndarray:
        """Coefficients of the initial velocity."""
        return self.__c1

    @property
    def alpha(self) -> float:
        """Order of the time derivative."""
        return self.__alpha

    @property
    def operator(self) -> SpectralOperator:
        """Spectrum of A."""
        return self.__op

    @property
    def regularity(self) -> tp.Optional[str]:
        """Declared regularity of the data."""
        return self.__reg

    @property
    def tol(self) -> float:
        """Accuracy target of the Mittag-Leffler evaluations."""
        return self.__tol

    def mode(self, index: int) -> ScalarProblem:
        """Scalar problem of mode `index` (starting at 0)."""
        return ScalarProblem(self.__alpha, self.__op.eigenvalues[index],
                             self.__c0[index], self.__c1[index], self.__tol)

    def truncate(self, count: int) -> 'SpectralState':
        """Keep the first `count` modes."""
        return SpectralState(self.__c0[:count], self.__c1[:count],
                             self.__alpha, self.__op.truncate(count),
                             self.__reg, self.__tol)


class ModalTrajectory(tp.NamedTuple):
    """Modal values at time t."""
    t: float
    u: np.ndarray
    du: np.ndarray
    d_alpha_u: np.ndarray
    memory: np.ndarray


class RegularityReport(tp.NamedTuple):
    """Regularity class of initial data with the supporting norms."""
    kind: str  # 'weak_data' or 'strong_data'
    declared: tp.Optional[str]
    u0_norms: tp.Dict[str, float]
    u1_norms: tp.Dict[str, float]
    decay: tp.Optional[tp.Dict[str, float]]


# ==============
# Module Methods
# ==============

def _mode_values(s: SpectralState,
                 index: int,
                 t: float) -> tp.Tuple[float, float, float, float]:
    prob = s.mode(index)
    return (scalar_solution(prob, t), scalar_velocity(prob, t),
            scalar_caputo(prob, t), scalar_memory(prob, t))


def evolve(s: SpectralState,
           t: float,
           nthreads: tp.Optional[int] = None) -> ModalTrajectory:
    """Modal solution at time t.

    Parameters
    ----------
    s
        Initial data.
    t
        Time, t >= 0.
    nthreads
        Number of threads over modes (default: from the environment).

    Returns
    -------
    ModalTrajectory
        u_n(t), u_n'(t), D^a u_n(t) = -lam_n u_n(t) and the memory
        term I^(2-a)(u_n' - u1_n)(t).
    """
    if not t >= 0.0:
        raise ArgumentError('t', 'Time must be non-negative')
    vals = ordered_map(lambda n: _mode_values(s, n, t),
                       range(s.operator.count), nthreads)
    arr = np.array(vals, dtype=float).reshape(s.operator.count, 4)
    return ModalTrajectory(float(t), arr[:, 0].copy(), arr[:, 1].copy(),
                           arr[:, 2].copy(), arr[:, 3].copy())


def evolve_many(s: SpectralState,
                ts: tp.Sequence[float],
                nthreads: tp.Optional[int] = None
                ) -> tp.List[ModalTrajectory]:
    """Modal solutions at several times, in the order of `ts`."""
    return ordered_map(lambda t: evolve(s, t, 1), ts, nthreads)


def frac_power_norm(theta: float,
                    coeffs: TypeCoeffs,
                    op: SpectralOperator) -> float:
    """Norm in D(A^theta): (sum_n lam_n^(2 theta) c_n^2)^(1/2).

    Negative `theta` gives the norm of the dual space.
    """
    coef = np.asarray(coeffs, dtype=float).ravel()
    if coef.size != op.count:
        raise ArgumentError('coeffs', 'One coefficient per mode expected')
    return float(np.sqrt(np.sum(op.eigenvalues**(2*theta)*coef**2)))


def _auto_fd_step(prob: ScalarProblem, t: float) -> float:
    """Finite-difference step adapted to the time scale of a mode."""
    tau = prob.lam**(-1.0/prob.alpha)
    damping = -cos(pi/prob.alpha)
    scale = t if damping*t/tau > 40.0 else min(t, tau)
    return min(NUMDEFS.fd_step*scale, 0.5*t)


def weak_residual(s: SpectralState,
                  t: float,
                  m: int,
                  dt_fd: tp.Optional[float] = None,
                  analytic: bool = False) -> float:
    """Residual of the weak formulation tested against e_m.

    Computes d/dt <I^(2-a)(u'-u1), e_m> + <sqrt(A)u, sqrt(A)e_m>, the
    first term by central finite differences of the closed-form memory
    term, the second as lam_m*u_m(t).

    Parameters
    ----------
    s
        Initial data.
    t
        Time, t > dt_fd.
    m
        Mode index, starting at 1.
    dt_fd
        Finite-difference step (default: scaled on the mode).
    analytic
        Use d/dt[t E_{a,2}] = E_{a,1} and d/dt[t^2 E_{a,3}] = t E_{a,2}
        instead of finite differences.

    Returns
    -------
    float
        Signed residual.

    Raises
    ------
    ArgumentError
        Mode index out of range or invalid step.
    """
    if not 1 <= m <= s.operator.count:
        raise ArgumentError('m', f'Mode index must be in [1, '
                            f'{s.operator.count}], got {m}')
    prob = s.mode(m-1)
    if prob.x0 == 0.0 and prob.y0 == 0.0:
        return 0.0
    if analytic:
        tarr = np.asarray(t, dtype=float)
        rate = prob.x0*prob.ml(1.0, tarr)
        if prob.y0 != 0.0:
            rate = rate + prob.y0*tarr*prob.ml(2.0, tarr)
        rate = -prob.lam*float(rate)
    else:
        if dt_fd is None:
            dt_fd = _auto_fd_step(prob, t)
        if not 0.0 < dt_fd < t:
            raise ArgumentError('dt_fd', 'Step must be in (0, t)')
        rate = (scalar_memory(prob, t+dt_fd)
                - scalar_memory(prob, t-dt_fd))/(2*dt_fd)
    return rate + prob.lam*scalar_solution(prob, t)


def theta_window(alpha: float) -> TypeRange:
    """Range ((2-a)/(2a), 1/2) of theta with u' in C([0,T]; D(A^-theta)).

    Raises
    ------
    DomainError
        alpha outside (1, 2).
    """
    if not 1.0 < alpha < 2.0:
        raise DomainError('theta_window', 'Order must be in (1, 2)')
    return (2.0-alpha)/(2.0*alpha), 0.5


def energy_bound_check(s: SpectralState,
                       T: float,
                       samples: int) -> float:
    """Measure the ratio bounded by the energy estimate.

    Sweeps t on a uniform grid of [0, T] and returns the maximum of

        |sqrt(A) u(t)|^2/(|sqrt(A) u0|^2 + T^(2-a) |u1|^2).

    Parameters
    ----------
    s
        Initial data.
    T
        Final time.
    samples
        Number of times, >= 2.

    Returns
    -------
    float
        Maximum ratio over the grid.

    Raises
    ------
    ZeroDataError
        The normalization vanishes.
    """
    if not T > 0.0:
        raise ArgumentError('T', 'Final time must be positive')
    if samples < 2:
        raise ArgumentError('samples', 'At least 2 times are needed')
    evals = s.operator.eigenvalues
    denom = np.sum(evals*s.c0**2) + T**(2-s.alpha)*np.sum(s.c1**2)
    if denom == 0.0:
        raise ZeroDataError('energy_bound_check')
    times = np.linspace(0.0, T, samples)
    energy = np.zeros(samples)
    for index in range(s.operator.count):
        if s.c0[index] == 0.0 and s.c1[index] == 0.0:
            continue
        energy += evals[index]*scalar_solution(s.mode(index), times)**2
    ratio = float(np.max(energy)/denom)
    logger.info('Energy ratio over [0, %g] (%d times): %.6g',
                T, samples, ratio)
    return ratio


def _fit_exponent(values: np.ndarray) -> tp.Optional[float]:
    """Least-squares p with |v_n| ~ n^(-p), None if not fittable."""
    index = np.arange(1, values.size+1, dtype=float)
    absval = np.abs(values)
    if not np.any(absval > 0.0):
        return None
    keep = absval > 1.0e-12*np.max(absval)
    if np.count_nonzero(keep) < 2:
        return None
    slope = np.polyfit(np.log(index[keep]), np.log(absval[keep]), 1)[0]
    return float(-slope)


def classify_regularity(s: SpectralState,
                        decay_model: str = 'none') -> RegularityReport:
    """Classify the initial data as weak or strong.

    With `decay_model='none'`, finite coefficient vectors have finite
    norms in every space, so the class is the declared one ('strong'
    gives strong_data, anything else weak_data).
    With `decay_model='power'`, |c0_n| ~ n^-p0, |c1_n| ~ n^-p1 and
    lam_n ~ n^q are fitted and the data are strong when the tails of
    sum lam_n^2 c0_n^2 and sum lam_n c1_n^2 are summable.

    Parameters
    ----------
    s
        Initial data.
    decay_model
        'none' or 'power'.

    Returns
    -------
    RegularityReport
        Class and norms.  The D(A) norm of u0 and the D(sqrt(A)) norm
        of u1 are only reported for strong data.
    """
    if decay_model not in ('none', 'power'):
        raise ArgumentError('decay_model',
                            f'Unknown decay model: {decay_model}')
    op = s.operator
    decay = None
    if decay_model == 'power':
        qexp = _fit_exponent(1.0/op.eigenvalues) if op.count > 1 else None
        p0 = _fit_exponent(s.c0)
        p1 = _fit_exponent(s.c1)
        decay = {'q': qexp, 'p0': p0, 'p1': p1}
        if qexp is None:
            strong = True
        else:
            ok0 = p0 is None or 2*qexp - 2*p0 < -1.0
            ok1 = p1 is None or qexp - 2*p1 < -1.0
            strong = ok0 and ok1
    else:
        strong = s.regularity == 'strong'
    u0_norms = {'H': frac_power_norm(0.0, s.c0, op),
                'D(sqrtA)': frac_power_norm(0.5, s.c0, op)}
    u1_norms = {'H': frac_power_norm(0.0, s.c1, op)}
    if strong:
        u0_norms['D(A)'] = frac_power_norm(1.0, s.c0, op)
        u1_norms['D(sqrtA)'] = frac_power_norm(0.5, s.c1, op)
    kind = 'strong_data' if strong else 'weak_data'
    return RegularityReport(kind, s.regularity, u0_norms, u1_norms, decay)


def tail_bound(s: SpectralState, n_keep: int, T: float) -> float:
    """Indicator of the truncation error after `n_keep` modes.

    (sum_{n>N} lam_n c0_n^2 + T^(2-a) sum_{n>N} c1_n^2)^(1/2), the
    energy estimate applied to the dropped modes with constant 1.
    """
    if not 0 <= n_keep <= s.operator.count:
        raise ArgumentError('n_keep', 'Invalid number of kept modes')
    evals = s.operator.eigenvalues[n_keep:]
    tail0 = np.sum(evals*s.c0[n_keep:]**2)
    tail1 = np.sum(s.c1[n_keep:]**2)
    return float(np.sqrt(tail0 + T**(2-s.alpha)*tail1))


def velocity_dual_norm(s: SpectralState, theta: float, t: float) -> float:
    """Norm of u'(t) in D(A^-theta)."""
    traj = evolve(s, t)
    return frac_power_norm(-theta, traj.du, s.operator)
