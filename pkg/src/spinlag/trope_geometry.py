"""Genus-2 plane geometry: harmonic cubics, the standard-trope sextic, and the 16_6 incidence.

Sextics p(z) = c0 + c1 z + ... + c6 z^6 correspond to harmonic cubics on C^3
through the quadratic (x1 + i x2) + 2 x3 z - (x1 - i x2) z^2, which is a
perfect square (z - t)^2 exactly on the null conic (x, x) = 0.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from math import comb
from typing import Iterable, Sequence

from .dolbeault import DolbeaultClass, c4_brackets, line_class, pairing
from .errors import DegeneracyError, DomainError
from .poly_core import (
    DEFAULT_PRECISION,
    INFINITY,
    I,
    MPoly,
    Poly,
    ProjectivePoint,
    TernaryForm,
    context,
    cross_ratio,
    discriminant,
    is_exact,
    laplacian,
    quadratic_norm,
    roots,
    simplify,
    square_free_decomposition,
    to_mpc,
)
from .poly_core.algebra import distinct_roots
from .poly_core.univariate import exact_div

MODES = ("literal", "apolar")


# -- hyperelliptic data ---------------------------------------------------------------

@dataclass
class HyperellipticData:
    """The curve y^2 = p(z); ``roots`` are exact when the curve was built from them."""

    p: Poly
    roots: tuple
    exact_roots: bool

    @classmethod
    def from_poly(cls, p: Poly, precision_bits: int = DEFAULT_PRECISION) -> "HyperellipticData":
        if p.degree != 6:
            raise DomainError(f"a genus-2 curve needs a sextic, got degree {p.degree}")
        if discriminant(p) == 0:
            raise DegeneracyError("the sextic has a repeated root")
        return cls(p, tuple(distinct_roots(p, precision_bits)), False)

    @classmethod
    def from_roots(cls, rts: Sequence, lead=1) -> "HyperellipticData":
        if len(rts) != 6 or len(set(rts)) != 6:
            raise DegeneracyError("need six distinct roots")
        return cls(Poly.from_roots(rts, lead), tuple(rts), all(is_exact(r) for r in rts))

    def split(self, i: int, j: int) -> tuple[Poly, Poly]:
        """p = q r with q = (z - z_i)(z - z_j), indices 1-based."""
        if i == j:
            raise DomainError("the pair must have two distinct indices")
        zi, zj = self.roots[i - 1], self.roots[j - 1]
        q = Poly.from_roots([zi, zj])
        rest = [z for k, z in enumerate(self.roots, start=1) if k not in (i, j)]
        return q, Poly.from_roots(rest, self.p.lc)


# -- harmonic cubics ---------------------------------------------------------------------

def _twistor_quadratic() -> list[TernaryForm]:
    """Coefficients of z^0, z^1, z^2 in (x1 + i x2) + 2 x3 z - (x1 - i x2) z^2."""
    x1, x2, x3 = TernaryForm.x()
    return [x1 + x2 * I, x3 * 2, -(x1 - x2 * I)]


@lru_cache(maxsize=None)
def _cube_coefficients() -> tuple:
    """The z^k coefficients (k = 0..6) of the cube of the twistor quadratic."""
    A, B, C = _twistor_quadratic()
    coeffs = [TernaryForm(3) for _ in range(7)]
    for i in range(4):
        for j in range(4 - i):
            k = 3 - i - j
            mult = comb(3, i) * comb(3 - i, j)
            term = (A ** i) * (B ** j) * (C ** k) * mult
            coeffs[j + 2 * k] = coeffs[j + 2 * k] + term
    return tuple(coeffs)


def _weight(mode: str, j: int):
    if mode == "literal":
        return 1
    if mode == "apolar":
        return Fraction((-1) ** j, comb(6, j))
    raise DomainError(f"mode must be one of {MODES}, got {mode!r}")


def harmonic_cubic(p: Poly | Sequence, mode: str = "literal") -> TernaryForm:
    """phi = sum_j w_j c_j [z^(6-j)] (twistor quadratic)^3.

    ``literal`` takes w_j = 1, i.e. the z^6 coefficient of the cube times p;
    ``apolar`` takes w_j = (-1)^j / C(6, j), which makes phi(x(t)) = p(t).
    """
    cs = list(p.coeffs) if isinstance(p, Poly) else list(p)
    if len(cs) > 7:
        raise DomainError("harmonic_cubic expects degree <= 6")
    cube = _cube_coefficients()
    phi = TernaryForm(3)
    for j, c in enumerate(cs):
        if c != 0:
            phi = phi + cube[6 - j] * (_weight(mode, j) * c)
    return phi


PHI_SQUARE_CONSTANT = 3456


def trope_sextic(p: Poly | Sequence, mode: str = "literal",
                 phi_constant=PHI_SQUARE_CONSTANT) -> TernaryForm:
    """(x,x)^2 Lap^2(phi^2) - 16 (x,x) Lap(phi^2) - phi_constant phi^2."""
    phi = harmonic_cubic(p, mode)
    phi2 = phi * phi
    lap1 = laplacian(phi2)
    lap2 = laplacian(lap1)
    xx = quadratic_norm()
    out = xx * xx * lap2 - xx * lap1 * 16 - phi2 * phi_constant
    if not isinstance(out, TernaryForm):
        out = TernaryForm.from_mpoly(out, 6)
    return out


def sextic_value_form(point: Sequence, mode: str = "literal",
                      phi_constant=PHI_SQUARE_CONSTANT) -> dict:
    """S_p(point) as an exact quadratic form in c0..c6, {(i, j): coeff} with i <= j.

    S_p is quadratic in p, so its values on e_i and e_i + e_j determine it.
    """
    def value(cs):
        return simplify(evaluate(trope_sextic(cs, mode, phi_constant), point))

    diag = {}
    for i in range(7):
        e = [0] * 7
        e[i] = 1
        diag[i] = value(e)
    out = {}
    for i in range(7):
        if diag[i] != 0:
            out[(i, i)] = diag[i]
        for j in range(i + 1, 7):
            e = [0] * 7
            e[i] = e[j] = 1
            cross = value(e) - diag[i] - diag[j]
            if cross != 0:
                out[(i, j)] = cross
    return out


@dataclass
class PoleValueReport:
    """S(0,0,1) as a quadratic form in c0..c6, compared with c3^2 - 4 c1 c5."""

    mode: str
    phi_constant: object
    form: dict
    ratio: object  # S(0,0,1) / (c3^2 - 4 c1 c5) when proportional, else None
    consistent_constant: object  # the phi^2 constant making S(0,0,1) proportional, or None

    @property
    def proportional(self) -> bool:
        return self.ratio is not None


def _proportional_to_anchor(form: dict):
    c33 = form.get((3, 3), 0)
    if c33 == 0 or set(form) - {(3, 3), (1, 5)}:
        return None
    return c33 if form.get((1, 5), 0) == -4 * c33 else None


def pole_value_report(mode: str = "literal", phi_constant=PHI_SQUARE_CONSTANT) -> PoleValueReport:
    """Decide whether S(0,0,1) is a multiple of c3^2 - 4 c1 c5.

    S = A - k phi^2 with A independent of k, so the only k that can work is
    fixed by the c3^2 and c1 c5 coefficients; it is reported alongside.
    """
    form = sextic_value_form((0, 0, 1), mode, phi_constant)
    base = sextic_value_form((0, 0, 1), mode, 0)
    square = {key: -c for key, c in sextic_value_form((0, 0, 1), mode, 1).items()}
    for key, c in base.items():
        square[key] = square.get(key, 0) + c
    # square now holds phi(0,0,1)^2 as a quadratic form
    consistent = None
    f33 = square.get((3, 3), 0)
    if f33 != 0:
        k = exact_div(base.get((3, 3), 0) + exact_div(base.get((1, 5), 0), 4), f33)
        trial = {key: base.get(key, 0) - k * square.get(key, 0) for key in set(base) | set(square)}
        if _proportional_to_anchor({key: c for key, c in trial.items() if c != 0}) is not None:
            consistent = k
    return PoleValueReport(mode, phi_constant, form, _proportional_to_anchor(form), consistent)


def conic_point(t) -> tuple:
    """x(t) = ((t^2 - 1)/2, -i (t^2 + 1)/2, -t); infinity maps to (1, -i, 0)."""
    if isinstance(t, ProjectivePoint):
        if t.is_infinity:
            return (1, -I, 0)
        t = t.value
    half = Fraction(1, 2)
    return ((t * t - 1) * half, -I * (t * t + 1) * half, -t)


def evaluate(form: MPoly, point: Sequence):
    return form(*point)


def pull_back_to_conic(form: MPoly) -> Poly:
    """form(x(t)) as a polynomial in t."""
    half = Fraction(1, 2)
    x1 = Poly([-half, 0, half])
    x2 = Poly([-I * half, 0, -I * half])
    x3 = Poly([0, -1])
    out = form(x1, x2, x3)
    return out if isinstance(out, Poly) else Poly([out])


def tangency_parameter_polynomial(p: Poly | Sequence, mode: str = "literal") -> Poly:
    """phi(x(t)): sum C(6,j) c_j (-t)^j for literal, p(t) for apolar."""
    cs = list(p.coeffs) if isinstance(p, Poly) else list(p)
    cs += [0] * (7 - len(cs))
    if mode == "apolar":
        return Poly(cs)
    _weight(mode, 0)
    return Poly(comb(6, j) * c * (-1) ** j for j, c in enumerate(cs))


@dataclass
class TangencyReport:
    mode: str
    pulled_back: Poly  # S(x(t)), degree 12
    factors: list  # [(square-free factor, multiplicity)]
    points: list  # [(t, multiplicity)]
    total_multiplicity: int
    all_even: bool
    double_points: int
    equals_phi_squared: bool  # S(x(t)) == -3456 phi(x(t))^2
    parameter_polynomial: Poly
    matches_roots_of_p: bool | None  # do the tangency parameters coincide with the roots of p?
    notes: list = field(default_factory=list)


def conic_tangency_report(p: Poly, mode: str = "literal",
                          precision_bits: int = DEFAULT_PRECISION) -> TangencyReport:
    S = trope_sextic(p, mode)
    pulled = pull_back_to_conic(S)
    if pulled.is_zero():
        raise DegeneracyError("the sextic vanishes identically on the conic")
    phi_t = pull_back_to_conic(harmonic_cubic(p, mode))
    equals = pulled == phi_t * phi_t * (-3456)
    factors = square_free_decomposition(pulled)
    points = []
    for factor, mult in factors:
        for rt in roots(factor, precision_bits):
            points.append((rt.value, mult))
    total = sum(m for _, m in points)
    all_even = all(m % 2 == 0 for _, m in points)
    doubles = sum(1 for _, m in points if m == 2)
    param = tangency_parameter_polynomial(p, mode)
    matches = None
    if p.degree == 6 and not param.is_zero():
        # same roots iff the monic versions agree
        matches = param.monic() == p.monic()
    notes = [f"tangency parameters are the roots of {'p(t)' if mode == 'apolar' else 'sum C(6,j) c_j (-t)^j'}"]
    return TangencyReport(mode, pulled, factors, points, total, all_even, doubles, equals, param,
                          matches, notes)


# -- symmetries ------------------------------------------------------------------------

def act_on_sextic(p: Poly, g: Sequence) -> Poly:
    """(c z + d)^6 p((a z + b)/(c z + d)) for g = (a, b, c, d)."""
    a, b, c, d = g
    num, den = Poly([b, a]), Poly([d, c])
    out = Poly()
    for j, cj in enumerate(p.coeffs):
        out = out + (num ** j) * (den ** (6 - j)) * cj
    return out


def rotate_form(form: MPoly, R: Sequence[Sequence]) -> MPoly:
    """x -> form(R x) for a 3x3 matrix R."""
    xs = TernaryForm.x()
    images = []
    for row in R:
        acc = TernaryForm(1)
        for coeff, x in zip(row, xs):
            if coeff != 0:
                acc = acc + x * coeff
        images.append(acc)
    return form(*images)


# z -> i z and z -> -1/z with the rotations R such that phi_{g.p}(x) is a multiple of phi_p(R x)
MOBIUS_GENERATORS = {
    "quarter_turn": ((I, 0, 0, 1), ((0, -1, 0), (1, 0, 0), (0, 0, 1))),
    "inversion": ((0, -1, 1, 0), ((-1, 0, 0), (0, 1, 0), (0, 0, -1))),
}


# -- theta characteristics and the 16_6 configuration ------------------------------------

BRANCH = frozenset(range(1, 7))


def _normalize(subset: Iterable[int], allowed_sizes: tuple) -> frozenset:
    s = frozenset(subset)
    if not s <= BRANCH:
        raise DomainError(f"{sorted(s)} is not a subset of {{1..6}}")
    comp = BRANCH - s
    if len(s) == 3:
        return s if 1 in s else comp
    if len(s) in allowed_sizes:
        return s
    if len(comp) in allowed_sizes:
        return comp
    raise DomainError(f"subset {sorted(s)} has the wrong parity")


@dataclass(frozen=True)
class ThetaChar:
    """An odd-size subset of the branch points modulo complement; size 1 is odd, size 3 even."""

    subset: frozenset

    def __init__(self, subset: Iterable[int]):
        object.__setattr__(self, "subset", _normalize(subset, (1, 3)))

    def __repr__(self):
        return f"ThetaChar({sorted(self.subset)})"


@dataclass(frozen=True)
class TwoTorsion:
    """An even-size subset modulo complement: the empty set or a pair."""

    subset: frozenset

    def __init__(self, subset: Iterable[int] = ()):
        object.__setattr__(self, "subset", _normalize(subset, (0, 2)))

    def __repr__(self):
        return f"TwoTorsion({sorted(self.subset)})"


def all_theta_chars() -> list[ThetaChar]:
    out = {ThetaChar(c) for k in (1, 3) for c in combinations(sorted(BRANCH), k)}
    return sorted(out, key=lambda t: (len(t.subset), sorted(t.subset)))


def all_two_torsion() -> list[TwoTorsion]:
    out = [TwoTorsion()] + [TwoTorsion(c) for c in combinations(sorted(BRANCH), 2)]
    return out


def theta_parity(t: ThetaChar) -> str:
    return "odd" if len(t.subset) == 1 else "even"


def translate(t: ThetaChar, e: TwoTorsion) -> ThetaChar:
    return ThetaChar(t.subset ^ e.subset)


@dataclass
class IncidenceTable:
    base: ThetaChar
    tropes: list  # two-torsion e' labelling the trope of translate(base, e')
    nodes: list  # two-torsion e labelling the nodes
    table: list  # table[row][col] in {0, 1}

    def row_sums(self) -> list[int]:
        return [sum(r) for r in self.table]

    def column_sums(self) -> list[int]:
        return [sum(col) for col in zip(*self.table)]

    def is_symmetric(self) -> bool:
        n = len(self.table)
        return all(self.table[i][j] == self.table[j][i] for i in range(n) for j in range(n))

    def incident_nodes(self, trope: TwoTorsion) -> list:
        row = self.table[self.tropes.index(trope)]
        return [e for e, x in zip(self.nodes, row) if x]


def kummer_incidence(kappa: ThetaChar | None = None) -> IncidenceTable:
    """Node e lies on the trope of translate(kappa, e') iff kappa + e' + e is odd."""
    if kappa is None:
        kappa = ThetaChar({1, 2, 3})
    labels = all_two_torsion()
    table = [[1 if theta_parity(translate(translate(kappa, ep), e)) == "odd" else 0
              for e in labels] for ep in labels]
    return IncidenceTable(kappa, labels, list(labels), table)


# -- the line where two tropes meet ----------------------------------------------------------

@dataclass
class LineReport:
    pair: tuple
    linear_form: tuple  # coefficients of v -> [q beta] in (v0, v1, v2)
    on_conic: Poly  # [q beta] at (1, -2t, t^2)
    expected_parameters: tuple  # -z_i, -z_j
    meets_conic_at_pair: bool
    avoids_other_points: bool
    bitangent_points: tuple | None = None  # ((c1/c2)^2, s, -s) for the two points of C4
    cross_ratio: object = None


def trope_line_intersection(data: HyperellipticData, pair: tuple[int, int],
                            with_quartic: bool = True,
                            precision_bits: int = DEFAULT_PRECISION) -> LineReport:
    """The line [q beta] = 0 for q = (z - z_i)(z - z_j) and its contact with the conic.

    The conic point annihilating z - z_k has parameter t = -z_k.
    """
    i, j = pair
    q, r = data.split(i, j)
    form = tuple(pairing(DolbeaultClass(*e), q) for e in ((1, 0, 0), (0, 1, 0), (0, 0, 1)))
    on_conic = Poly([form[0], -2 * form[1]]) + Poly([0, 0, form[2]])
    params = (-data.roots[i - 1], -data.roots[j - 1])
    tol = None if data.exact_roots else 1e-30

    def vanishes(x):
        return x == 0 if tol is None else abs(x) < tol

    meets = all(vanishes(on_conic(t)) for t in params)
    others = [-z for k, z in enumerate(data.roots, start=1) if k not in pair]
    avoids = all(not vanishes(on_conic(t)) for t in others)
    report = LineReport(pair, form, on_conic, params, meets, avoids)
    if with_quartic and data.exact_roots:
        zi, zj = data.roots[i - 1], data.roots[j - 1]
        # on the line the quartic is -[q b beta]^2 with [q b beta] = A c1^2 + B c2^2
        A = c4_brackets(q, r, line_class(zi, zj, 1, 0)).qb_beta
        B = c4_brackets(q, r, line_class(zi, zj, 0, 1)).qb_beta
        ratio = exact_div(-B, A)  # (c1/c2)^2 at the two points
        ctx = context(precision_bits)
        s = ctx.sqrt(to_mpc(ratio, ctx))
        report.bitangent_points = (ratio, s, -s)
        report.cross_ratio = cross_ratio(INFINITY, 0, s, -s)
    return report
