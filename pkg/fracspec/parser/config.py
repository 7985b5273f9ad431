"""Run configurations of the FRACSPEC solver.

A run is described by five groups of options, stored in INI files as
sections or in JSON documents as objects:

Problem
    kind (wave, petrovsky, scalar), alpha, length, n_modes, lam (scalar)
Initial
    u0, u1: initial data selectors
Grid
    t_max, n_t, n_x
Tolerances
    ml_tol
Output
    prefix

Initial data selectors, for interval problems:

- ``single_mode k``: the k-th eigenfunction,
- ``parabola``: x(L-x),
- ``coeffs c1, c2, ...``: leading modal coefficients,
- ``expr <expression of x>``: natural mathematical expression, where
  ``L`` is the length of the interval,
- ``zero``.

For scalar problems, u0 and u1 are numbers.

JSON documents carry a ``schema_version`` key.  The run manifest written
by the solver is a JSON document of this kind, so it can be read back
as configuration.
"""

import configparser as cfg
import json
import typing as tp

import numpy as np

from fracspec.base.errors import ArgumentError, ConfigError
from fracspec.base.interval import IntervalProblem, TypeInitial
from fracspec.data.numerics import NUMDEFS
from fracspec.tools.char import convert_floats, expr_function

# ================
# Module Constants
# ================

PROBLEM_KINDS = ('wave', 'petrovsky', 'scalar')
SELECTORS = ('single_mode', 'parabola', 'coeffs', 'expr', 'zero')

TMPL_INI = r"""[Problem]
# Kind of problem: wave, petrovsky or scalar
Kind = wave
# Order of the time derivative, in (1, 2)
Alpha = 1.5
# Length of the interval (wave, petrovsky)
Length = 3.141592653589793
# Number of modes (wave, petrovsky)
N_Modes = 16
# Coefficient lambda (scalar)
# Lam = 1.0

[Initial]
# Initial value and velocity.  Selectors:
#   single_mode k | parabola | coeffs c1, c2, ... | expr <f(x)> | zero
# For the scalar problem, give numbers.
U0 = single_mode 1
U1 = zero

[Grid]
# Final time, number of times (including t=0), number of positions
T_Max = 2.0
N_T = 21
N_X = 33

[Tolerances]
# Accuracy target of the Mittag-Leffler evaluations
ML_Tol = 1e-15

[Output]
# Output files are <prefix>_u.csv, <prefix>_ut.csv, <prefix>_caputo.csv
#   and <prefix>_manifest.json
Prefix = fracspec_run
"""

_KEYS = {
    'problem': ('kind', 'alpha', 'length', 'n_modes', 'lam'),
    'initial': ('u0', 'u1'),
    'grid': ('t_max', 'n_t', 'n_x'),
    'tolerances': ('ml_tol',),
    'output': ('prefix',),
}


# ==============
# Module Classes
# ==============

class RunConfig(object):
    """Validated configuration of a run.

    Parameters
    ----------
    kind
        'wave', 'petrovsky' or 'scalar'.
    alpha
        Order, 1 < alpha < 2.
    u0
        Selector of the initial value.
    u1
        Selector of the initial velocity.
    t_max
        Final time.
    n_t
        Number of times, t=0 included.
    length
        Length of the interval.
    n_modes
        Number of modes.
    n_x
        Number of positions.
    lam
        Coefficient of the scalar problem.
    ml_tol
        Accuracy target of the Mittag-Leffler evaluations.
    prefix
        Prefix of the output files.

    Raises
    ------
    ConfigError
        Invalid option.
    """

    def __init__(self, kind: str,
                 alpha: float,
                 u0: str = 'single_mode 1',
                 u1: str = 'zero',
                 t_max: float = 1.0,
                 n_t: int = 11,
                 length: float = np.pi,
                 n_modes: int = 16,
                 n_x: int = 33,
                 lam: float = 1.0,
                 ml_tol: float = NUMDEFS.ml_tol,
                 prefix: str = 'fracspec_run') -> None:
        kind = str(kind).strip().lower()
        if kind not in PROBLEM_KINDS:
            raise ConfigError('kind', f'Unknown problem kind: {kind}')
        self.__kind = kind
        self.__alpha = _number('alpha', alpha)
        if not 1.0 < self.__alpha < 2.0:
            raise ConfigError('alpha', 'Order must be in (1, 2)')
        self.__tmax = _number('t_max', t_max)
        if not self.__tmax > 0.0:
            raise ConfigError('t_max', 'Final time must be positive')
        self.__nt = _integer('n_t', n_t, 2)
        self.__length = _number('length', length)
        if not self.__length > 0.0:
            raise ConfigError('length', 'Length must be positive')
        self.__nmodes = _integer('n_modes', n_modes, 1)
        self.__nx = _integer('n_x', n_x, 2)
        self.__lam = _number('lam', lam)
        if not self.__lam > 0.0:
            raise ConfigError('lam', 'Coefficient must be positive')
        self.__mltol = _number('ml_tol', ml_tol)
        if not 0.0 < self.__mltol < 1.0:
            raise ConfigError('ml_tol', 'Tolerance must be in (0, 1)')
        self.__prefix = str(prefix).strip()
        if not self.__prefix:
            raise ConfigError('prefix', 'Empty output prefix')
        self.__u0 = str(u0).strip()
        self.__u1 = str(u1).strip()
        # Selectors are checked now so that errors surface before solving
        for key, text in (('u0', self.__u0), ('u1', self.__u1)):
            if kind == 'scalar':
                _number(key, text)
            else:
                self.initial_data(key)

    def __repr__(self) -> str:
        return f'RunConfig(kind={self.__kind!r}, alpha={self.__alpha!r})'

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, RunConfig):
            return NotImplemented
        return self.to_dict() == other.to_dict()

    @property
    def kind(self) -> str:
        """Kind of problem."""
        return self.__kind

    @property
    def alpha(self) -> float:
        """Order of the time derivative."""
        return self.__alpha

    @property
    def u0(self) -> str:
        """Selector of the initial value."""
        return self.__u0

    @property
    def u1(self) -> str:
        """Selector of the initial velocity."""
        return self.__u1

    @property
    def t_max(self) -> float:
        """Final time."""
        return self.__tmax

    @property
    def n_t(self) -> int:
        """Number of times."""
        return self.__nt

    @property
    def length(self) -> float:
        """Length of the interval."""
        return self.__length

    @property
    def n_modes(self) -> int:
        """Number of modes."""
        return self.__nmodes

    @property
    def n_x(self) -> int:
        """Number of positions."""
        return self.__nx

    @property
    def lam(self) -> float:
        """Coefficient of the scalar problem."""
        return self.__lam

    @property
    def ml_tol(self) -> float:
        """Accuracy target of the Mittag-Leffler evaluations."""
        return self.__mltol

    @property
    def prefix(self) -> str:
        """Prefix of the output files."""
        return self.__prefix

    @property
    def times(self) -> np.ndarray:
        """Output times."""
        return np.linspace(0.0, self.__tmax, self.__nt)

    @property
    def positions(self) -> np.ndarray:
        """Output positions."""
        return np.linspace(0.0, self.__length, self.__nx)

    def problem(self) -> IntervalProblem:
        """Interval problem of the run."""
        if self.__kind == 'scalar':
            raise ConfigError('kind', 'Scalar runs have no interval problem')
        return IntervalProblem(self.__length, self.__kind, self.__nmodes)

    def initial_data(self, which: str) -> TypeInitial:
        """Initial data described by the selector `which` ('u0' or 'u1').

        Returns
        -------
        function, list or None
            Function of x, modal coefficients or None for zero data.

        Raises
        ------
        ConfigError
            Unknown or invalid selector.
        """
        text = self.__u0 if which == 'u0' else self.__u1
        name, _, arg = text.partition(' ')
        name = name.lower()
        arg = arg.strip()
        if name not in SELECTORS:
            raise ConfigError(which, f'Unknown initial data selector: {name}')
        if name == 'zero':
            return None
        if name == 'parabola':
            length = self.__length
            return lambda x: x*(length - x)
        try:
            if name == 'single_mode':
                index = int(arg)
                if not 1 <= index <= self.__nmodes:
                    raise ConfigError(
                        which, f'Mode {index} not in [1, {self.__nmodes}]')
                coefs = [0.0]*index
                coefs[-1] = 1.0
                return coefs
            if name == 'coeffs':
                coefs = convert_floats(arg)
                if not coefs or len(coefs) > self.__nmodes:
                    raise ConfigError(
                        which, f'Between 1 and {self.__nmodes} coefficients '
                        + 'expected')
                return coefs
            return expr_function(arg, 'x', {'L': self.__length})
        except (ArgumentError, ValueError) as err:
            raise ConfigError(which, str(err)) from err

    def scalar_data(self) -> tp.Tuple[float, float]:
        """Initial value and velocity of the scalar problem."""
        return _number('u0', self.__u0), _number('u1', self.__u1)

    def to_dict(self) -> tp.Dict[str, tp.Dict[str, tp.Any]]:
        """Nested dictionary of the options, with the schema version."""
        return {
            'schema_version': NUMDEFS.schema_version,
            'problem': {'kind': self.__kind, 'alpha': self.__alpha,
                        'length': self.__length, 'n_modes': self.__nmodes,
                        'lam': self.__lam},
            'initial': {'u0': self.__u0, 'u1': self.__u1},
            'grid': {'t_max': self.__tmax, 'n_t': self.__nt,
                     'n_x': self.__nx},
            'tolerances': {'ml_tol': self.__mltol},
            'output': {'prefix': self.__prefix},
        }

    @classmethod
    def from_dict(cls, data: tp.Dict[str, tp.Any]) -> 'RunConfig':
        """Build a configuration from a nested dictionary.

        Unknown top-level keys (for instance the outputs recorded in a
        run manifest) are ignored.

        Raises
        ------
        ConfigError
            Missing or unsupported schema version, unknown option.
        """
        if not isinstance(data, dict):
            raise ConfigError('schema', 'Configuration must be an object')
        version = data.get('schema_version')
        if version != NUMDEFS.schema_version:
            raise ConfigError('schema_version',
                              f'Unsupported schema version: {version}')
        opts = {}
        for sec, keys in _KEYS.items():
            block = data.get(sec, {})
            if not isinstance(block, dict):
                raise ConfigError(sec, 'Section must be an object')
            for key in block:
                if key not in keys:
                    raise ConfigError(f'{sec}.{key}', 'Unknown option')
            opts.update(block)
        if 'kind' not in opts or 'alpha' not in opts:
            raise ConfigError('problem', 'kind and alpha are mandatory')
        return cls(**opts)


# ==============
# Module Methods
# ==============

def _number(key: str, value: tp.Any) -> float:
    try:
        res = float(value)
    except (TypeError, ValueError) as err:
        raise ConfigError(key, f'Number expected, got {value!r}') from err
    if not np.isfinite(res):
        raise ConfigError(key, 'Finite number expected')
    return res


def _integer(key: str, value: tp.Any, low: int) -> int:
    try:
        res = int(value)
    except (TypeError, ValueError) as err:
        raise ConfigError(key, f'Integer expected, got {value!r}') from err
    if isinstance(value, float) and value != res:
        raise ConfigError(key, f'Integer expected, got {value!r}')
    if res < low:
        raise ConfigError(key, f'Value must be at least {low}')
    return res


def parse_inifile(fname: str) -> RunConfig:
    """Parse INI file.

    Section and option names are case-insensitive.

    Parameters
    ----------
    fname
        Filename.

    Returns
    -------
    RunConfig
        Validated configuration.

    Raises
    ------
    ConfigError
        Invalid file, unknown section or option, invalid value.
    """
    opts = cfg.ConfigParser(inline_comment_prefixes=('#', ';'))
    try:
        with open(fname, 'r', encoding='utf-8') as fobj:
            opts.read_file(fobj)
    except cfg.Error as err:
        raise ConfigError('ini', f'Malformed INI file: {err}') from err
    secs = {key.strip().lower(): key for key in opts.sections()}
    data = {}
    for sec, name in secs.items():
        if sec not in _KEYS:
            raise ConfigError(name, 'Unknown section')
        optsec = opts[name]
        block = {}
        for key in optsec:
            if key not in _KEYS[sec]:
                raise ConfigError(f'{name}.{key}', 'Unknown option')
            block[key] = optsec.get(key)
        data[sec] = block
    data['schema_version'] = NUMDEFS.schema_version
    if 'problem' not in data:
        raise ConfigError('problem', 'Missing [Problem] section')
    return RunConfig.from_dict(data)


def parse_jsonfile(fname: str) -> RunConfig:
    """Parse a JSON configuration or run manifest."""
    try:
        with open(fname, 'r', encoding='utf-8') as fobj:
            data = json.load(fobj)
    except json.JSONDecodeError as err:
        raise ConfigError('json', f'Malformed JSON file: {err}') from err
    return RunConfig.from_dict(data)
