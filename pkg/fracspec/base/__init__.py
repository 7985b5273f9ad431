"""Module providing basic classes and methods for FRACSPEC

Attributes
----------
TypeCoeffs : list, np.ndarray
    Static type for modal coefficients.
TypeFunc : callable
    Static type for a vectorized function of space or time.
TypeRange : tuple
    Static type for a (lower, upper) pair.
TypeSamples : list, np.ndarray
    Static type for scalar or vector samples.

Classes
-------
ArgumentError
    Generates an error for inconsistency/errors in arguments.
ConfigError
    Generates an error for invalid run configurations.
ConvergenceError
    Generates an error if a series does not converge.
DomainError
    Generates an error if a function is evaluated outside its domain.
GammaOverflowError
    Generates an error if Gamma overflows.
GammaPoleError
    Generates an error if Gamma is evaluated at a pole.
InstabilityError
    Generates an error if a time-stepper blows up.
NumericalError
    Basic container for numerical failures.
ZeroDataError
    Generates an error if a normalization vanishes.
SampledFunction
    Function sampled on a uniform time grid.
FracOrder
    Order and kind of a fractional operator.
"""

# flake8: noqa: F401

from fracspec.base.types import ConstDict, TypeCoeffs, TypeFunc, TypeRange, \
    TypeSamples

from fracspec.base.errors import ArgumentError, ConfigError, \
    ConvergenceError, DomainError, GammaOverflowError, GammaPoleError, \
    InstabilityError, NumericalError, ZeroDataError

from fracspec.base.sampled import FracOrder, SampledFunction
