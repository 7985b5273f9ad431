"""Module with different tools to facilitate numerical operations in FRACSPEC

The tools are gathered by submodules based on their intended use:

List of sub-modules
-------------------
`char`
    Conversion of natural mathematical expressions.
`comp`
    Related to basic computing operations (threads, ordered maps).
`fractional`
    Discrete fractional integrals, derivatives and seminorms.
`math`
    Simple math functions, stencils and quadratures.
`scalar`
    Scalar fractional Cauchy problems and the L1 time-stepper.
`special`
    Gamma and Mittag-Leffler functions.
`verify`
    Verification suites and reports.

See submodules for details.
"""
