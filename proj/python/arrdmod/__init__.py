"""Exact combinatorics of twisted D-modules on hyperplane arrangements.

Hyperplane indices are 0-based throughout the Python API. Rationals are
returned as fractions.Fraction and accepted as int, Fraction or "p/q".
"""

from ._arrdmod import (
    Arrangement,
    Error,
    Hyperplane,
    PreconditionError,
    ResourceError,
    UnsupportedDimensionError,
    ValidationError,
    certificate,
    classify,
    closure,
    count_general_position,
    decomposition_factors,
    enumerate_flats,
    essentialize,
    flat_count_general_position,
    hasse_dot,
    irreducibility_verdict,
    load_input,
    plane_resolution,
    pullback_exponents,
    pullback_factors,
    run_cli,
    user_resolution,
)

__all__ = [
    "Arrangement",
    "Error",
    "Hyperplane",
    "PreconditionError",
    "ResourceError",
    "UnsupportedDimensionError",
    "ValidationError",
    "arrangement",
    "certificate",
    "classify",
    "closure",
    "count_general_position",
    "decomposition_factors",
    "enumerate_flats",
    "essentialize",
    "flat_count_general_position",
    "hasse_dot",
    "irreducibility_verdict",
    "load_input",
    "plane_resolution",
    "pullback_exponents",
    "pullback_factors",
    "run_cli",
    "user_resolution",
]


def arrangement(dim, rows):
    """Builds an Arrangement from (coeffs, constant) pairs."""
    return Arrangement(dim, [Hyperplane(list(coeffs), constant) for coeffs, constant in rows])
