"""Module providing basic error classes

A basic module providing exceptions for FRACSPEC.

Classes
-------
ArgumentError
    Generates an error for inconsistency/errors in arguments.
DomainError
    Generates an error if a function is evaluated outside its domain.
GammaPoleError
    Generates an error if Gamma is evaluated at a pole.
ConfigError
    Generates an error for invalid run configurations.
NumericalError
    Basic container for numerical failures.
ConvergenceError
    Generates an error if a series does not converge within its cap.
GammaOverflowError
    Generates an error if Gamma overflows double precision.
InstabilityError
    Generates an error if a time-stepper blows up.
ZeroDataError
    Generates an error if a normalization vanishes.
"""

import typing as tp


# ==============
# Module Classes
# ==============

class ArgumentError(ValueError):
    """Generates an error for inconsistency/errors in arguments.

    Generates an error if inconsistency/errors are found in arguments in
    calls to functions/methods.

    Parameters
    ----------
    name : str
        Name of the argument
    msg : str, optional
        Message to be printed instead of default one
    """
    def __init__(self, name: str, msg: tp.Optional[str] = None) -> None:
        if msg is None:
            msg = f'Error in argument: {name}'
        super(ArgumentError, self).__init__(msg)


class DomainError(ArgumentError):
    """Generates an error if a function is evaluated outside its domain.

    Parameters
    ----------
    name : str
        Name of the function.
    msg : str, optional
        Message to be printed instead of default one.
    """
    def __init__(self, name: str, msg: tp.Optional[str] = None) -> None:
        if msg is None:
            msg = f'Argument outside the domain of {name}'
        super(DomainError, self).__init__(name, msg)


class GammaPoleError(DomainError):
    """Generates an error if Gamma is evaluated at a pole.

    Parameters
    ----------
    x : float
        Non-positive integer where Gamma was requested.
    """
    def __init__(self, x: float) -> None:
        super(GammaPoleError, self).__init__(
            'gamma', f'Gamma function has a pole at x={x:g}')


class ConfigError(Exception):
    """Generates an error for invalid run configurations.

    Parameters
    ----------
    key : str
        Configuration key at fault.
    msg : str, optional
        Message to be printed instead of default one.
    """
    def __init__(self, key: str, msg: tp.Optional[str] = None) -> None:
        if msg is None:
            msg = f'Invalid configuration entry: {key}'
        super(ConfigError, self).__init__(msg)
        self.key = key


class NumericalError(ArithmeticError):
    """Basic container for numerical failures."""


class ConvergenceError(NumericalError):
    """Generates an error if a series does not converge within its cap.

    Parameters
    ----------
    name : str
        Name of the series.
    nterms : int
        Number of terms summed before giving up.
    """
    def __init__(self, name: str, nterms: int) -> None:
        super(ConvergenceError, self).__init__(
            f'{name} did not converge within {nterms} terms')


class GammaOverflowError(NumericalError):
    """Generates an error if Gamma overflows double precision.

    Parameters
    ----------
    x : float
        Argument above the overflow threshold.
    """
    def __init__(self, x: float) -> None:
        super(GammaOverflowError, self).__init__(
            f'Gamma function overflows at x={x:g}')


class InstabilityError(NumericalError):
    """Generates an error if a time-stepper blows up.

    Parameters
    ----------
    step : int
        Step index where the threshold was exceeded.
    value : float
        Offending value.
    """
    def __init__(self, step: int, value: float) -> None:
        super(InstabilityError, self).__init__(
            f'Unstable time marching at step {step} (|u|={abs(value):.3e})')


class ZeroDataError(NumericalError):
    """Generates an error if a normalization vanishes.

    Parameters
    ----------
    name : str
        Name of the quantity that vanished.
    """
    def __init__(self, name: str) -> None:
        super(ZeroDataError, self).__init__(f'Vanishing data in {name}')
