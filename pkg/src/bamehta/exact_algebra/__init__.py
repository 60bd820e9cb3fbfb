"""Exact arithmetic: quadratic-field scalars, sparse polynomials, operators."""

from .scalar import QF, Field
from .poly import (
    ExpPoly,
    MultiPoly,
    dir_derivative,
    divmod_linear,
    exact_div_linear,
    reduce_mod_linear,
)
from .operators import apply_cm, apply_shifted_cm

__all__ = [
    "QF",
    "Field",
    "ExpPoly",
    "MultiPoly",
    "dir_derivative",
    "divmod_linear",
    "exact_div_linear",
    "reduce_mod_linear",
    "apply_cm",
    "apply_shifted_cm",
]
