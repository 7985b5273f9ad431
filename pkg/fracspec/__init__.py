"""FRACSPEC: Fractional evolution equations solved by spectral expansions.

A library to evaluate Mittag-Leffler functions, discrete fractional
integrals and derivatives, and the spectral solutions of
time-fractional evolution equations of order between 1 and 2.

List of sub-modules
-------------------
`base`
    Basic classes: errors, sampled functions, spectral operators and
    states, 1D model problems.
`data`
    Numerical defaults.
`parser`
    Run configurations, CSV fields and run manifests.
`tools`
    Special functions, fractional operators, scalar problems,
    verification suites.
"""

__version__ = '0.1.0'
