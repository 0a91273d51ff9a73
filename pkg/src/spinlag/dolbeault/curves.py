"""Plane curves in P(H^1(P^1, O(-4))) cut out by obstruction computations.

For a sextic p = q r split into a quadratic q and a quartic r, a class
[beta] is tested by chains of dbar-equations solved with the y-expansion
calculus:

* the standard trope: a singular quadratic form on sections u0 + u2 z^2,
* the quartic: [q beta] C - [q b beta]^2 with dbar b = r beta in O(0),
* the sextic: det of the map u -> [q b2 beta] on H^0(O(1)), where
  dbar b1 = q u beta and dbar b2 = r b1 beta are solved in O(-1).

All routines accept exact or symbolic (MPoly) class coordinates.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Sequence

from ..errors import CalculusError, ConditioningError, DomainError
from ..poly_core import DEFAULT_PRECISION, MPoly, Poly, interpolate_homogeneous
from ..poly_core.univariate import exact_div
from .calculus import (
    DolbeaultClass,
    RegularityReport,
    bracket,
    naive_integral,
    polar_part,
    solve_dbar,
)
from .yexpansion import YExpansion


# -- the standard trope ------------------------------------------------------------

@dataclass
class TropeQuadraticForm:
    matrix: tuple  # Q[j][k] for (u0, u2)
    det: object
    polar: YExpansion  # polar part removed from u0 f
    section_report: RegularityReport  # u0 f - polar as a section of O(-2)


@lru_cache(maxsize=None)
def _trope_basis():
    beta = DolbeaultClass(0, 1, 0).form()
    f = naive_integral(beta)
    pr = polar_part(f, -2)
    b_u0 = pr.corrected
    b_u2 = f.times_z(2)
    table = {}
    basis = (b_u0, b_u2)
    for j in range(2):
        for k in range(2):
            prod = basis[j] * basis[k] * beta
            table[(j, k)] = tuple(bracket(prod.times_z(i)) for i in range(7))
    return table, pr


def trope_quadratic_form(p: Poly | Sequence) -> TropeQuadraticForm:
    """Q(u) = integral of b1^2 p beta at beta = zbar / y^4, b1 = (u0 + u2 z^2) f - polar.

    ``p`` is a Poly or the coefficient list c0..c6 (entries may be symbolic).
    """
    cs = list(p.coeffs) if isinstance(p, Poly) else list(p)
    if len(cs) > 7:
        raise DomainError("trope_quadratic_form expects a sextic")
    cs += [0] * (7 - len(cs))
    table, pr = _trope_basis()
    Q = [[0, 0], [0, 0]]
    for j in range(2):
        for k in range(2):
            total = 0
            for i, c in enumerate(cs):
                w = table[(j, k)][i]
                if w != 0:
                    total = total + c * w
            Q[j][k] = total
    det = Q[0][0] * Q[1][1] - Q[0][1] * Q[1][0]
    return TropeQuadraticForm(tuple(tuple(r) for r in Q), det, pr.polar, pr.report)


def trope_form_constant() -> Fraction:
    """kappa with det Q = kappa (c3^2 - 4 c1 c5), from the symbolic determinant."""
    cs = MPoly.gens(7)
    det = trope_quadratic_form(cs).det
    target = cs[3] * cs[3] - 4 * cs[1] * cs[5]
    kappa = exact_div(det.coefficient((0, 0, 0, 2, 0, 0, 0)), 1)
    if det != target * kappa:
        raise AssertionError("det Q is not proportional to c3^2 - 4 c1 c5")
    return kappa


# -- the quartic ----------------------------------------------------------------------

@dataclass
class C4Brackets:
    q_beta: object  # [q beta]
    qb_beta: object  # [q b beta]
    cubic: object  # C([beta]) = integral of b^2 q beta
    b: YExpansion
    report: RegularityReport

    @property
    def quartic(self):
        return self.q_beta * self.cubic - self.qb_beta * self.qb_beta


def c4_brackets(q: Poly, r: Poly, v: DolbeaultClass) -> C4Brackets:
    beta = v.form()
    sol = solve_dbar(beta.times_section(r, 4), 0)
    if not sol.report.is_global_section:
        raise CalculusError(f"dbar b = r beta has no global solution: {sol.report}")
    b = sol.section
    q_beta = beta.times_section(q, 2)
    return C4Brackets(bracket(q_beta), bracket(q_beta * b), bracket(q_beta * b * b), b,
                      sol.report)


def c4_value(q: Poly, r: Poly, v: DolbeaultClass):
    return c4_brackets(q, r, v).quartic


def line_class(z1, z2, c1, c2) -> DolbeaultClass:
    """The class on the line [q beta] = 0 with coordinates (c1 : c2).

    (1, 2 z_i, z_i^2) is the conic point annihilating z - z_i; the weights
    1/(z1 - z2), 1/(z2 - z1) make the localized bracket formula hold exactly.
    """
    w1 = exact_div(c1, z1 - z2)
    w2 = exact_div(c2, z2 - z1)
    return DolbeaultClass(w1 + w2, 2 * (w1 * z1 + w2 * z2), w1 * z1 * z1 + w2 * z2 * z2)


def localized_bracket(r: Poly, z1, z2, c1, c2):
    """r(z1) c1^2 / (2 (z1 - z2)) + r(z2) c2^2 / (2 (z2 - z1))."""
    return (exact_div(r(z1) * c1 * c1, 2 * (z1 - z2))
            + exact_div(r(z2) * c2 * c2, 2 * (z2 - z1)))


# -- the sextic -------------------------------------------------------------------------

@dataclass
class C6Matrix:
    matrix: tuple  # M[sigma][u] for sigma, u in the basis (1, z)
    det: object
    reports: list  # regularity of every b1, b2 solved along the way


def c6_matrix(q: Poly, r: Poly, v: DolbeaultClass) -> C6Matrix:
    """Pair [q b2 beta] in H^1(O(-3)) with sigma in {1, z}, for u in {1, z}."""
    beta = v.form()
    basis = (Poly([1]), Poly([0, 1]))
    M = [[0, 0], [0, 0]]
    reports = []
    for col, u in enumerate(basis):
        s1 = solve_dbar(beta.times_section(q * u, 3), -1)
        s2 = solve_dbar((s1.section * beta).times_section(r, 4), -1)
        reports.extend([s1.report, s2.report])
        for rep in (s1.report, s2.report):
            if not rep.is_global_section:
                raise CalculusError(f"dbar-solve in O(-1) is not global: {rep}")
        target = (s2.section * beta).times_section(q, 2)
        for row, sigma in enumerate(basis):
            M[row][col] = bracket(target.times_section(sigma, 1))
    det = M[0][0] * M[1][1] - M[0][1] * M[1][0]
    return C6Matrix(tuple(tuple(x) for x in M), det, reports)


def c6_value(q: Poly, r: Poly, v: DolbeaultClass):
    return c6_matrix(q, r, v).det


# -- symbolic and interpolated equations ----------------------------------------------------

def symbolic_class() -> DolbeaultClass:
    v0, v1, v2 = MPoly.gens(3)
    return DolbeaultClass(v0, v1, v2)


def on_conic(form: MPoly) -> Poly:
    """Restrict a form in (v0, v1, v2) to the conic (1, -2t, t^2), as a polynomial in t."""
    return form(Poly([1]), Poly([0, -2]), Poly([0, 0, 1]))


def sample_classes(count: int, seed: int, height: int = 20) -> list[DolbeaultClass]:
    rng = random.Random(seed)

    def coord():
        return Fraction(rng.randint(-height, height), rng.randint(1, height))

    out = []
    while len(out) < count:
        v = DolbeaultClass(coord(), coord(), coord())
        if any(x != 0 for x in v.as_tuple()):
            out.append(v)
    return out


def fit_curve(value: Callable[[DolbeaultClass], object], degree: int, seed: int = 0,
              samples: int | None = None, precision_bits: int = DEFAULT_PRECISION,
              attempts: int = 5):
    """Interpolate a homogeneous form of ``degree`` through exact sample values.

    Resamples on a rank-deficient sample set.
    """
    needed = (degree + 1) * (degree + 2) // 2
    count = samples if samples is not None else 2 * needed
    last = None
    for attempt in range(attempts):
        pts = sample_classes(count, seed + attempt)
        data = [(v.as_tuple(), value(v)) for v in pts]
        try:
            return interpolate_homogeneous(degree, data, precision_bits)
        except ConditioningError as exc:
            last = exc
    raise last


def c4_equation(q: Poly, r: Poly, seed: int = 0, degree: int = 4,
                precision_bits: int = DEFAULT_PRECISION):
    return fit_curve(lambda v: c4_value(q, r, v), degree, seed, precision_bits=precision_bits)


def c6_equation(q: Poly, r: Poly, seed: int = 0, degree: int = 6,
                precision_bits: int = DEFAULT_PRECISION):
    return fit_curve(lambda v: c6_value(q, r, v), degree, seed, precision_bits=precision_bits)
