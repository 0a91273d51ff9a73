"""Exact and arbitrary-precision polynomial substrate."""

from .algebra import (
    INFINITY,
    InterpolationResult,
    ProjectivePoint,
    Root,
    cross_ratio,
    determinant,
    discriminant,
    distinct_roots,
    interpolate_homogeneous,
    rank,
    resultant,
    roots,
    sylvester_matrix,
)
from .multivariate import MPoly, TernaryForm, laplacian, monomials, quadratic_norm, symbols
from .scalars import DEFAULT_PRECISION, Gauss, I, context, is_exact, simplify, to_mpc
from .univariate import Poly, poly_gcd, square_free_decomposition

__all__ = [
    "DEFAULT_PRECISION", "Gauss", "I", "INFINITY", "InterpolationResult", "MPoly", "Poly",
    "ProjectivePoint", "Root", "TernaryForm", "context", "cross_ratio", "determinant",
    "discriminant", "distinct_roots", "interpolate_homogeneous", "is_exact", "laplacian",
    "monomials", "poly_gcd", "quadratic_norm", "rank", "resultant", "roots",
    "simplify", "square_free_decomposition", "sylvester_matrix", "symbols", "to_mpc",
]
