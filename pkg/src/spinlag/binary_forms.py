"""SL(2,C) on odd symmetric powers: symplectic form, isotropic flag, moment maps.

A binary form of odd degree m is stored by its coefficients a_0..a_m with
p(z) = a_0 z^m + a_1 z^(m-1) + ... + a_m. The homogeneous version is
P(x, y) = sum a_i x^(m-i) y^i, and ``act`` is the substitution
P(x, y) -> P(a x + b y, c x + d y).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial
from typing import Sequence

from .errors import DegeneracyError, DomainError
from .poly_core import DEFAULT_PRECISION, MPoly, Poly, context, determinant, to_mpc
from .poly_core.algebra import distinct_roots
from .poly_core.univariate import exact_div


@dataclass(frozen=True)
class BinaryForm:
    m: int
    coeffs: tuple  # a_0 .. a_m, a_0 multiplies z^m

    def __post_init__(self):
        if self.m < 1 or self.m % 2 == 0:
            raise DomainError(f"binary forms here have odd degree, got m={self.m}")
        if len(self.coeffs) != self.m + 1:
            raise DomainError(f"need {self.m + 1} coefficients, got {len(self.coeffs)}")
        object.__setattr__(self, "coeffs", tuple(self.coeffs))

    @classmethod
    def from_poly(cls, p: Poly, m: int | None = None) -> "BinaryForm":
        m = p.degree if m is None else m
        return cls(m, tuple(p[m - i] for i in range(m + 1)))

    def to_poly(self) -> Poly:
        return Poly(self.coeffs[self.m - j] for j in range(self.m + 1))

    def __add__(self, other: "BinaryForm") -> "BinaryForm":
        _same_degree(self, other)
        return BinaryForm(self.m, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def scale(self, c) -> "BinaryForm":
        return BinaryForm(self.m, tuple(c * a for a in self.coeffs))


def _same_degree(p: BinaryForm, q: BinaryForm) -> None:
    if p.m != q.m:
        raise DomainError(f"degree mismatch: {p.m} vs {q.m}")


@dataclass(frozen=True)
class MomentImage:
    """b0 z^2 + b1 z + b2, i.e. the traceless matrix [[b1/2, b2], [-b0, -b1/2]]."""

    b0: object
    b1: object
    b2: object

    def matrix(self):
        half = Fraction(1, 2)
        return ((self.b1 * half, self.b2), (-self.b0, -self.b1 * half))

    def det(self):
        return self.b0 * self.b2 - self.b1 * self.b1 * Fraction(1, 4)

    def discriminant(self):
        return self.b1 * self.b1 - 4 * self.b0 * self.b2

    def to_poly(self) -> Poly:
        return Poly([self.b2, self.b1, self.b0])

    def as_tuple(self) -> tuple:
        return (self.b0, self.b1, self.b2)

    def is_zero(self) -> bool:
        return self.b0 == 0 and self.b1 == 0 and self.b2 == 0

    def scale(self, c) -> "MomentImage":
        return MomentImage(c * self.b0, c * self.b1, c * self.b2)


@dataclass(frozen=True)
class Sl2Action:
    """The matrix [[alpha, beta], [gamma, delta]] with unit determinant."""

    alpha: object
    beta: object
    gamma: object
    delta: object

    def __post_init__(self):
        if self.alpha * self.delta - self.beta * self.gamma != 1:
            raise DomainError("SL(2) element must have determinant 1")

    def __matmul__(self, other: "Sl2Action") -> "Sl2Action":
        return Sl2Action(self.alpha * other.alpha + self.beta * other.gamma,
                         self.alpha * other.beta + self.beta * other.delta,
                         self.gamma * other.alpha + self.delta * other.gamma,
                         self.gamma * other.beta + self.delta * other.delta)

    def inverse(self) -> "Sl2Action":
        return Sl2Action(self.delta, -self.beta, -self.gamma, self.alpha)

    @classmethod
    def identity(cls) -> "Sl2Action":
        return cls(1, 0, 0, 1)


# -- symplectic structure -----------------------------------------------------

def symplectic_weight(m: int, ell: int) -> int:
    return (-1) ** ell * factorial(ell) * factorial(m - ell)


def symplectic_form(p: BinaryForm, q: BinaryForm):
    """sum_{l<k} (-1)^l l! (m-l)! (a_l b_{m-l} - a_{m-l} b_l), m = 2k - 1."""
    _same_degree(p, q)
    m = p.m
    k = (m + 1) // 2
    total = 0
    for ell in range(k):
        wedge = p.coeffs[ell] * q.coeffs[m - ell] - p.coeffs[m - ell] * q.coeffs[ell]
        total = total + symplectic_weight(m, ell) * wedge
    return total


def act(g: Sl2Action, p: BinaryForm) -> BinaryForm:
    """p(z) -> (cz + d)^m p((az + b)/(cz + d)).

    This is the substitution P(x, y) -> P(ax + by, cx + dy), so it composes as
    a right action: ``act(g @ h, p) == act(h, act(g, p))``.
    """
    m = p.m
    num = Poly([g.beta, g.alpha])
    den = Poly([g.delta, g.gamma])
    total = Poly()
    for i, a in enumerate(p.coeffs):
        total = total + (num ** (m - i)) * (den ** i) * a
    return BinaryForm.from_poly(total, m)


def act_quadratic(g: Sl2Action, mu: MomentImage) -> MomentImage:
    """The same substitution on binary quadratics (the adjoint action)."""
    num = Poly([g.beta, g.alpha])
    den = Poly([g.delta, g.gamma])
    total = num * num * mu.b0 + num * den * mu.b1 + den * den * mu.b2
    return MomentImage(total[2], total[1], total[0])


# -- isotropic flag -----------------------------------------------------------

@dataclass
class FlagReport:
    m: int
    subspaces: dict  # dimension j -> basis (forms z^{j-1}, ..., 1)
    isotropic: dict  # dimension j -> bool
    lagrangian_dimension: int
    maximal: bool  # no coordinate extension of the Lagrangian stays isotropic

    @property
    def lagrangian(self) -> list[BinaryForm]:
        return self.subspaces[self.lagrangian_dimension]


def _basis_form(m: int, power: int) -> BinaryForm:
    coeffs = [0] * (m + 1)
    coeffs[m - power] = 1
    return BinaryForm(m, tuple(coeffs))


def _is_isotropic(basis: Sequence[BinaryForm]) -> bool:
    return all(symplectic_form(u, v) == 0 for u in basis for v in basis)


def isotropic_flag(m: int) -> FlagReport:
    """Subspaces V_j = span{1, z, ..., z^(j-1)} of forms vanishing to order m+1-j at infinity.

    V_k with k = (m+1)/2 is the subspace a_0 = ... = a_(k-1) = 0; the report
    records that it is isotropic for the symplectic form and that adjoining
    any further coordinate direction destroys isotropy.
    """
    if m < 1 or m % 2 == 0:
        raise DomainError(f"isotropic flag needs odd m, got {m}")
    k = (m + 1) // 2
    subspaces, isotropic = {}, {}
    for j in range(m + 2):
        basis = [_basis_form(m, power) for power in range(j)]
        subspaces[j] = basis
        isotropic[j] = _is_isotropic(basis)
    lag = subspaces[k]
    maximal = isotropic[k] and all(
        not _is_isotropic(lag + [_basis_form(m, power)]) for power in range(k, m + 1))
    return FlagReport(m, subspaces, isotropic, k, maximal)


# -- roots and powers ---------------------------------------------------------

def skew_matrix(alphas: Sequence, m: int) -> list[list]:
    """A_ij = (alpha_j - alpha_i)^m."""
    return [[(aj - ai) ** m for aj in alphas] for ai in alphas]


@dataclass
class KernelResult:
    vector: list
    residual: object
    rank_warning: bool
    singular_values: list


def skew_matrix_kernel(alphas: Sequence, m: int, precision_bits: int = DEFAULT_PRECISION) -> KernelResult:
    """A null vector of A_ij = (alpha_j - alpha_i)^m, largest entry scaled to 1."""
    if m % 2 == 0:
        raise DomainError("the skew matrix needs odd m")
    ctx = context(precision_bits)
    al = [to_mpc(a, ctx) for a in alphas]
    n = len(al)
    for i in range(n):
        for j in range(i + 1, n):
            if abs(al[i] - al[j]) <= ctx.mpf(2) ** (-(precision_bits // 2)):
                raise DegeneracyError("repeated roots in skew_matrix_kernel")
    if n == 1:
        return KernelResult([ctx.mpc(1)], ctx.mpf(0), False, [ctx.mpf(0)])
    A = ctx.matrix([[(aj - ai) ** m for aj in al] for ai in al])
    U, S, V = ctx.svd_c(A)
    svals = sorted((S[i] for i in range(n)), reverse=True)
    # right singular vector of the smallest singular value
    idx = min(range(n), key=lambda i: S[i])
    vec = [ctx.conj(V[idx, j]) for j in range(n)]
    big = max(vec, key=abs)
    vec = [v / big for v in vec]
    Ab = A * ctx.matrix(vec)
    residual = max(abs(Ab[i]) for i in range(n))
    tol = ctx.mpf(2) ** (-(precision_bits // 2)) * svals[0]
    rank_warning = n > 1 and svals[-2] <= tol
    return KernelResult(vec, residual, rank_warning, svals)


@dataclass
class Reconstruction:
    b: list
    alphas: list
    residual: object  # max coefficient error of sum b_i (z - alpha_i)^m - p
    precision_bits: int


def _powers_sum(b, alphas, m, ctx) -> list:
    """Descending coefficients of sum_i b_i (z - alpha_i)^m."""
    out = [ctx.mpc(0)] * (m + 1)
    for bi, ai in zip(b, alphas):
        for j in range(m + 1):
            out[j] += bi * comb(m, j) * (-ai) ** j
    return out


def reconstruct_from_powers(p: BinaryForm, precision_bits: int = DEFAULT_PRECISION) -> Reconstruction:
    """Write p = sum_i b_i (z - alpha_i)^m over its distinct roots alpha_i."""
    if p.coeffs[0] == 0:
        raise DomainError("leading coefficient a_0 must be nonzero")
    ctx = context(precision_bits)
    alphas = distinct_roots(p.to_poly(), precision_bits)
    kernel = skew_matrix_kernel(alphas, p.m, precision_bits)
    a0 = to_mpc(p.coeffs[0], ctx)
    total = ctx.fsum(kernel.vector)
    if abs(total) == 0:
        raise DegeneracyError("kernel vector has zero sum; cannot match a_0")
    b = [v * a0 / total for v in kernel.vector]
    rebuilt = _powers_sum(b, alphas, p.m, ctx)
    target = [to_mpc(a, ctx) for a in p.coeffs]
    residual = max(abs(x - y) for x, y in zip(rebuilt, target))
    return Reconstruction(b, alphas, residual, precision_bits)


def moment_map_roots(p: BinaryForm, precision_bits: int = DEFAULT_PRECISION) -> MomentImage:
    """sum_{i,j} b_i b_j (alpha_i - alpha_j)^(m-1) (z - alpha_i)(z - alpha_j).

    For m = 1 the single diagonal term survives with 0^0 = 1.
    """
    rec = reconstruct_from_powers(p, precision_bits)
    ctx = context(precision_bits)
    b0 = b1 = b2 = ctx.mpc(0)
    for bi, ai in zip(rec.b, rec.alphas):
        for bj, aj in zip(rec.b, rec.alphas):
            w = bi * bj * ((ai - aj) ** (p.m - 1) if p.m > 1 else 1)
            if w == 0:
                continue
            b0 += w
            b1 += -w * (ai + aj)
            b2 += w * ai * aj
    return MomentImage(b0, b1, b2)


def moment_map_m3(p: BinaryForm) -> MomentImage:
    """Exact coefficient form of a_0^2 sum_cyc (a2-a3)(a3-a1)(z-a1)(z-a2) over the roots.

    The cyclic sum expands to (3 s2 - s1^2) z^2 + (s1 s2 - 9 s3) z + (3 s1 s3 - s2^2)
    in the elementary symmetric functions of the roots.
    """
    if p.m != 3:
        raise DomainError("moment_map_m3 is only defined for cubics")
    a0, a1, a2, a3 = p.coeffs
    return MomentImage(3 * a0 * a2 - a1 * a1, 9 * a0 * a3 - a1 * a2, 3 * a1 * a3 - a2 * a2)


# -- transvectant ---------------------------------------------------------------

@dataclass(frozen=True)
class ContractionTable:
    """mu(p) = sum over (i, j) of table[d][(i, j)] a_i a_j for d = 0, 1, 2.

    ``table[d]`` holds the z^(2-d) coefficient, i.e. b_d.
    """

    m: int
    table: tuple


@lru_cache(maxsize=None)
def contraction_table(m: int) -> ContractionTable:
    """Coefficients of the (m-1)-th transvectant (p, p)_(m-1).

    With P(x, y) = sum a_i x^(m-i) y^i the transvectant is
    sum_s (-1)^s C(r, s) d^r P/dx^(r-s) dy^s * d^r P/dx^s dy^(r-s), r = m - 1,
    the iterated contraction with the unit skew form on C^2.
    """
    if m < 1 or m % 2 == 0:
        raise DomainError(f"transvectant moment map needs odd m, got {m}")
    r = m - 1
    out = [dict(), dict(), dict()]
    # d^r (x^(m-i) y^i) / dx^u dy^v = falling factorials times x^(m-i-u) y^(i-v)
    for s in range(r + 1):
        sign = (-1) ** s * comb(r, s)
        for i in range(m + 1):
            ex1, ey1 = m - i, i
            u1, v1 = r - s, s
            if ex1 < u1 or ey1 < v1:
                continue
            c1 = _falling(ex1, u1) * _falling(ey1, v1)
            x1 = ex1 - u1
            for j in range(m + 1):
                ex2, ey2 = m - j, j
                u2, v2 = s, r - s
                if ex2 < u2 or ey2 < v2:
                    continue
                c2 = _falling(ex2, u2) * _falling(ey2, v2)
                xdeg = x1 + ex2 - u2  # total x-degree of the product: 2 - ydeg
                d = 2 - xdeg  # index of b_d
                key = (min(i, j), max(i, j))
                out[d][key] = out[d].get(key, 0) + sign * c1 * c2
    table = tuple({k: v for k, v in t.items() if v} for t in out)
    return ContractionTable(m, table)


def _falling(n: int, k: int) -> int:
    out = 1
    for t in range(k):
        out *= n - t
    return out


def moment_map_coeffs(p: BinaryForm) -> MomentImage:
    """The transvectant moment map S^m C^2 -> S^2 C^2, exact in the coefficients."""
    tab = contraction_table(p.m).table
    a = p.coeffs
    bs = []
    for d in range(3):
        total = 0
        for (i, j), c in tab[d].items():
            total = total + c * a[i] * a[j]
        bs.append(total)
    return MomentImage(*bs)


def coefficient_tables(m: int) -> dict:
    """The c_i, c_i', c_i'' of b_0 = sum c_i a_i a_(m-i-1), b_1 = sum c_i' a_i a_(m-i),
    b_2 = sum c_i'' a_i a_(m-i+1), read off the contraction table (ordered pairs)."""
    tab = contraction_table(m).table
    out = {}
    for d, name, shift in ((0, "b0", -1), (1, "b1", 0), (2, "b2", 1)):
        row = {}
        for i in range(m + 2):
            j = m - i + shift
            if not 0 <= j <= m or not 0 <= i <= m:
                continue
            key = (min(i, j), max(i, j))
            c = tab[d].get(key, 0)
            row[i] = Fraction(c, 1 if i == j else 2)
        out[name] = row
    return out


# -- m = 1 and arithmetic of the nilpotent cone ---------------------------------

def nilpotent_moment(u: Sequence) -> MomentImage:
    """u (x) u for u = (u0, u1) read as the linear form u0 z + u1."""
    u0, u1 = u
    return MomentImage(u0 * u0, 2 * u0 * u1, u1 * u1)


def nilpotent_stratum_dimension(g: int, k: int) -> int:
    """k + (g-1) + 2((g-1) - k) = 3(g-1) - k."""
    if g < 2:
        raise DomainError("genus must be at least 2")
    if not 0 <= k <= g - 1:
        raise DomainError(f"k must lie in [0, {g - 1}]")
    return k + (g - 1) + 2 * ((g - 1) - k)


def divisor_degree(m: int) -> int:
    """k(4k^2 - 1)/3 for m = 2k - 1."""
    if m < 1 or m % 2 == 0:
        raise DomainError(f"divisor degree needs odd positive m, got {m}")
    k = (m + 1) // 2
    num = k * (4 * k * k - 1)
    if num % 3:
        raise AssertionError("k(4k^2-1) is always divisible by 3")
    return num // 3


# -- symbolic helpers -----------------------------------------------------------

def generic_form(m: int) -> BinaryForm:
    """The form with coefficients the m+1 variables of an MPoly ring."""
    return BinaryForm(m, tuple(MPoly.gens(m + 1)))


def proportionality_constant(xs: Sequence, ys: Sequence):
    """c with xs = c * ys exactly, or None if the vectors are not proportional."""
    ref = next((i for i, y in enumerate(ys) if y != 0), None)
    if ref is None:
        return None if any(x != 0 for x in xs) else 0
    c = exact_div(xs[ref], ys[ref])
    if all(x - c * y == 0 for x, y in zip(xs, ys)):
        return c
    return None


def skew_matrix_rank(alphas: Sequence, m: int) -> int:
    from .poly_core import rank
    return rank(skew_matrix(alphas, m))


def is_antisymmetric(rows: Sequence[Sequence]) -> bool:
    n = len(rows)
    return all(rows[i][j] + rows[j][i] == 0 for i in range(n) for j in range(n))


def det_exact(rows):
    return determinant(rows)
