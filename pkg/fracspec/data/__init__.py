"""Module providing basic data for FRACSPEC

List of sub-modules
-------------------
`numerics`
    Default tolerances, caps and approximation coefficients.
"""
