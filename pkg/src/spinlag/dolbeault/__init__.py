"""Dolbeault representatives on P^1 and the curves they cut out."""

from .calculus import (
    DbarSolution,
    DimensionCount,
    DolbeaultClass,
    NullConeResult,
    PolarResult,
    RegularityReport,
    binom,
    bracket,
    conic_class,
    dimension_count,
    family_form,
    naive_integral,
    null_cone_test,
    pairing,
    polar_coefficients,
    polar_part,
    regularity,
    six_points,
    six_points_exact,
    solve_dbar,
)
from .curves import (
    C4Brackets,
    C6Matrix,
    TropeQuadraticForm,
    c4_brackets,
    c4_equation,
    c4_value,
    c6_equation,
    c6_matrix,
    c6_value,
    fit_curve,
    line_class,
    localized_bracket,
    on_conic,
    sample_classes,
    symbolic_class,
    trope_form_constant,
    trope_quadratic_form,
)
from .yexpansion import YExpansion

__all__ = [
    "C4Brackets", "C6Matrix", "DbarSolution", "DimensionCount", "DolbeaultClass",
    "NullConeResult", "PolarResult", "RegularityReport", "TropeQuadraticForm", "YExpansion",
    "binom", "bracket", "c4_brackets", "c4_equation", "c4_value", "c6_equation", "c6_matrix",
    "c6_value", "conic_class", "dimension_count", "family_form", "fit_curve", "line_class",
    "localized_bracket", "naive_integral", "null_cone_test", "on_conic", "pairing",
    "polar_coefficients", "polar_part", "regularity", "sample_classes", "six_points",
    "six_points_exact", "solve_dbar", "symbolic_class", "trope_form_constant",
    "trope_quadratic_form",
]
