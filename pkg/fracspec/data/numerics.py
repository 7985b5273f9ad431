"""Module on numerical defaults and related data.

This module provides the default tolerances, caps and constants used
by the numerical kernels and the run configuration.

Attributes
----------
NUMDEFS : dict
    Numerical defaults.
LANCZOS : dict
    Lanczos approximation parameters (g=607/128, n=15).
"""

from math import pi, sqrt

from fracspec.base.types import ConstDict


# ================
# Module Constants
# ================

NUMDEFS = ConstDict([
    ('ml_tol', 1.0e-15),  # Relative target of the Mittag-Leffler series
    ('ml_max_terms', 10000),  # Term cap of the power series
    ('ml_kmax', 40),  # Terms of the asymptotic expansion
    ('ml_min_radius', 10.0),  # Lower bound of the crossover radius
    ('ml_gamma_factor', 5.0),  # (5*Gamma(a+b))^(1/a) term of the radius
    ('ml_remainder_pad', 8.0),  # Added to ln(1/tol) for the radius
    ('ml_guard_digits', 30),  # Base working digits of the series
    ('gamma_rel_tol', 1.0e-13),  # Target accuracy of gamma
    ('gamma_overflow', 171.6243769563027),  # Gamma(x) > DBL_MAX above
    ('quad_points', 2049),  # Projection nodes (odd for Simpson)
    ('fd_step', 1.0e-5),  # Finite-difference step for weak residuals
    ('blowup', 1.0e12),  # Instability threshold of the stepper
    ('csv_digits', 17),  # Significant digits in CSV files
    ('schema_version', 1),  # Run manifest schema
])

LANCZOS = ConstDict([
    ('g', 4.7421875),  # 607/128
    ('c0', 0.999999999999997092),
    ('coefs', (57.1562356658629235, -59.5979603554754912,
               14.1360979747417471, -0.491913816097620199,
               0.339946499848118887e-4, 0.465236289270485756e-4,
               -0.983744753048795646e-4, 0.158088703224912494e-3,
               -0.210264441724104883e-3, 0.217439618115212643e-3,
               -0.164318106536763890e-3, 0.844182239838527433e-4,
               -0.261908384015814087e-4, 0.368991826595316234e-5)),
    ('sqrt2pi', sqrt(2*pi)),
])
