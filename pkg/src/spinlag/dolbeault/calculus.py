"""The dbar-calculus on P^1 for representatives in the y-expansion class.

Bundle conventions: a coefficient h in the z-chart is a section of O(n); in
the chart w = 1/z the same section is h z^(-n). Under this convention a
polynomial of degree <= n is a global section of O(n), and f dz^k is a
section of O(-2k).

Brackets are integrals over P^1 of (0,1)-forms with values in K = O(-2),
i.e. of g dz dzbar, divided by pi (with the area element dx dy, so the
volume form 1/y^2 has bracket 1).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from ..errors import DegeneracyError, DivergenceError, DomainError, LogarithmicTermError
from ..poly_core import DEFAULT_PRECISION, Poly, discriminant
from ..poly_core.algebra import distinct_roots
from ..poly_core.univariate import exact_div
from .yexpansion import YExpansion


def binom(e: int, j: int) -> int:
    """Generalized binomial coefficient C(e, j) for any integer e and j >= 0."""
    if j < 0:
        return 0
    num, den = 1, 1
    for t in range(j):
        num *= e - t
        den *= t + 1
    return num // den


# -- integration in zbar ------------------------------------------------------------

def naive_integral(g: YExpansion) -> YExpansion:
    """The primitive in zbar obtained by integrating in y = 1 + z zbar at fixed z.

    Each term z^A y^E becomes z^(A-1) y^(E+1) / (E+1). A term with E = -1
    would need log y and E >= 0 does not decay as zbar -> infinity.
    """
    for a, e in g.canonical:
        if e >= 0:
            raise DivergenceError(f"term z^{a} y^{e} has no decaying primitive")
    out = {}
    for (a, e), c in g.canonical.items():
        if e == -1:
            raise LogarithmicTermError(f"term z^{a} y^-1 integrates to a logarithm")
        out[(a - 1, e + 1)] = exact_div(c, e + 1)
    return YExpansion(out, g.twist, 0)


# -- regularity -------------------------------------------------------------------

@dataclass
class RegularityReport:
    bundle_degree: int
    pole_orders_at_zero: list  # [(a, order)] for sectors still singular at 0
    decay_exponent_at_infinity: Fraction | None  # leading |w|-exponent of h z^(-n) at w = 0
    regular_at_zero: bool
    regular_at_infinity: bool
    failing_sectors_at_infinity: list = field(default_factory=list)

    @property
    def is_global_section(self) -> bool:
        return self.regular_at_zero and self.regular_at_infinity


def _order_at_zero(series: dict, limit: int) -> int:
    """Order of vanishing at s = 0 of sum_e c_e (1 + s)^e, capped at ``limit``."""
    for j in range(limit):
        if sum(c * binom(e, j) for e, c in series.items()) != 0:
            return j
    return limit


def regularity(h: YExpansion, bundle_degree: int) -> RegularityReport:
    """Is h a smooth section of O(bundle_degree) on all of P^1?

    Near z = 0 the sector z^a H_a(|z|^2) is smooth iff H_a vanishes to order
    |a| when a < 0. Near w = 0 the sector becomes w^(n-a) G_a(|w|^2) with
    G_a(s) = sum_e c_e s^(-e) (1 + s)^e, whose order at s = 0 is exactly
    -max(e); smoothness needs that order to be at least max(0, a - n).
    """
    n = bundle_degree
    poles = []
    failing = []
    decay = None
    for a in h.z_exponents():
        series = h.y_series(a)
        if a < 0:
            order = _order_at_zero(series, -a)
            if order < -a:
                poles.append((a, -a - order))
        ord_inf = -max(series)
        if ord_inf < max(0, a - n):
            failing.append(a)
        exponent = Fraction(n - a + 2 * ord_inf)
        decay = exponent if decay is None else min(decay, exponent)
    return RegularityReport(n, poles, decay, not poles, not failing, failing)


@dataclass
class PolarResult:
    polar: YExpansion  # the Laurent tail sum_{a<0} H_a(0) z^a
    corrected: YExpansion  # h - polar
    report: RegularityReport


def polar_part(h: YExpansion, bundle_degree: int) -> PolarResult:
    """Subtract the dbar-closed Laurent tail that cancels the constant terms of the poles at 0.

    Only the s^0 coefficient of each H_a can be changed by a holomorphic
    term c z^a; anything left over is reported as a genuine pole.
    """
    tail = {}
    for a in h.z_exponents():
        if a < 0:
            value = sum(h.y_series(a).values())
            if value != 0:
                tail[(a, 0)] = value
    polar = YExpansion(tail, h.twist, 0)
    corrected = h - polar
    return PolarResult(polar, corrected, regularity(corrected, bundle_degree))


@dataclass
class DbarSolution:
    section: YExpansion
    polar: YExpansion
    report: RegularityReport


def solve_dbar(g: YExpansion, bundle_degree: int) -> DbarSolution:
    """Naive integral followed by polar correction; the report says if it is global."""
    pr = polar_part(naive_integral(g), bundle_degree)
    return DbarSolution(pr.corrected.with_meta(twist=bundle_degree), pr.polar, pr.report)


# -- integration over P^1 -------------------------------------------------------------

def bracket(g: YExpansion):
    """(1/pi) * integral over P^1 of g dx dy for a K-valued (0,1)-form coefficient g.

    Sectors a != 0 integrate to zero over circles. The a = 0 sector is
    radial: integral_0^inf (1 + t)^e dt = -1/(e + 1) for e <= -2.
    """
    total = 0
    for (a, e), c in g.canonical.items():
        if a != 0:
            continue
        if e >= -1:
            raise DivergenceError(f"radial integral of y^{e} diverges")
        total = total + exact_div(c, -e - 1)
    return total


# -- the representative family zbar^m / y^n dz^k dzbar -----------------------------------

def family_form(m: int, k: int) -> YExpansion:
    """zbar^m / y^n dz^k dzbar with n = 2k, or n = 2k + 1 for m = 2k - 1 (n = 2k would need a log)."""
    if k < 1 or m < 0:
        raise DomainError("need k >= 1 and m >= 0")
    n = 2 * k + 1 if m == 2 * k - 1 else 2 * k
    return YExpansion.zbar_poly([0] * m + [1], n, twist=-2 * k, form_degree=1)


@dataclass
class DimensionCount:
    k: int
    nontrivial: list  # m with no global primitive in O(-2k)
    trivial: list  # m whose corrected primitive is a global section

    @property
    def dimension(self) -> int:
        return len(self.nontrivial)


def dimension_count(k: int) -> DimensionCount:
    """Which of the representatives m = 0 .. 2k-1 define nonzero classes in H^1(O(-2k))."""
    nontrivial, trivial = [], []
    for m in range(2 * k):
        sol = solve_dbar(family_form(m, k), -2 * k)
        (trivial if sol.report.is_global_section else nontrivial).append(m)
    return DimensionCount(k, nontrivial, trivial)


# -- classes in H^1(P^1, O(-4)) ---------------------------------------------------------

@dataclass(frozen=True)
class DolbeaultClass:
    """[beta] = (v0 + v1 zbar + v2 zbar^2) / y^4 dz^2 dzbar."""

    v0: object
    v1: object
    v2: object

    def form(self) -> YExpansion:
        return YExpansion.zbar_poly((self.v0, self.v1, self.v2), 4, twist=-4, form_degree=1)

    def as_tuple(self) -> tuple:
        return (self.v0, self.v1, self.v2)

    def scale(self, c) -> "DolbeaultClass":
        return DolbeaultClass(c * self.v0, c * self.v1, c * self.v2)

    def __add__(self, other: "DolbeaultClass") -> "DolbeaultClass":
        return DolbeaultClass(self.v0 + other.v0, self.v1 + other.v1, self.v2 + other.v2)


def conic_class(t) -> DolbeaultClass:
    """The null-cone point (1, -2t, t^2)."""
    return DolbeaultClass(1, -2 * t, t * t)


def pairing(v: DolbeaultClass, s: Poly):
    """[beta s] for a section s of O(2); equals s0 v0/3 + s1 v1/6 + s2 v2/3."""
    return bracket(v.form().times_section(s, 2))


@dataclass
class NullConeResult:
    value: object
    kernel: tuple | None  # (w0, w1) with (w0 + w1 z) beta exact


def null_cone_test(v: DolbeaultClass) -> NullConeResult:
    """v1^2 - 4 v0 v2, with a kernel vector of 2 v0 w0 + v1 w1 = v1 w0 + 2 v2 w1 = 0 on the cone."""
    if v.v0 == 0 and v.v1 == 0 and v.v2 == 0:
        raise DomainError("the zero class is not a point of the plane")
    value = v.v1 * v.v1 - 4 * v.v0 * v.v2
    if value != 0:
        return NullConeResult(value, None)
    if v.v0 == 0 and v.v1 == 0:
        return NullConeResult(value, (1, 0))
    return NullConeResult(value, (v.v1, -2 * v.v0))


def polar_coefficients(v: DolbeaultClass, u: Sequence) -> tuple:
    """The z^-1 and z^-2 polar coefficients of (w0 + w1 z) f for f the naive primitive of beta."""
    w0, w1 = u
    f = naive_integral(v.form())
    uf = f.times_section(Poly([w0, w1]), 1)
    pr = polar_part(uf, -3)
    return (pr.polar.canonical.get((-1, 0), 0), pr.polar.canonical.get((-2, 0), 0))


def six_points(p: Poly, precision_bits: int = DEFAULT_PRECISION) -> list:
    """Conic parameters t with (1, -2t, t^2) annihilating the section z - z_i, z_i a root of p.

    The kernel section of (1, -2t, t^2) is z + t, so the point attached to
    the root z_i is t = -z_i.
    """
    if p.degree != 6:
        raise DomainError(f"six_points needs a sextic, got degree {p.degree}")
    if discriminant(p) == 0:
        raise DegeneracyError("the sextic has a repeated root")
    return [-z for z in distinct_roots(p, precision_bits)]


def six_points_exact(roots: Sequence) -> list:
    """The same parameters for a sextic given by its (exact) roots."""
    if len(roots) != 6 or len(set(roots)) != 6:
        raise DegeneracyError("need six distinct roots")
    return [-z for z in roots]
