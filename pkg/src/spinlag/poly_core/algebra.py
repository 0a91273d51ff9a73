"""Resultants, discriminants, root isolation, cross-ratios and interpolation."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np

from ..errors import ConditioningError, DegeneracyError, DomainError, PrecisionError
from .multivariate import TernaryForm, monomials
from .scalars import DEFAULT_PRECISION, context, is_exact, to_mpc
from .univariate import Poly, exact_div, square_free_decomposition


# -- exact linear algebra ---------------------------------------------------

def determinant(rows: Sequence[Sequence]) -> object:
    """Exact determinant by Gaussian elimination over Q or Q(i)."""
    a = [list(r) for r in rows]
    n = len(a)
    if any(len(r) != n for r in a):
        raise DomainError("determinant of a non-square matrix")
    det = Fraction(1)
    for col in range(n):
        pivot = next((r for r in range(col, n) if a[r][col] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            a[col], a[pivot] = a[pivot], a[col]
            det = -det
        p = a[col][col]
        det = det * p
        for r in range(col + 1, n):
            if a[r][col] != 0:
                f = exact_div(a[r][col], p)
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    return det


def rank(rows: Sequence[Sequence]) -> int:
    """Exact rank over Q or Q(i)."""
    a = [list(r) for r in rows]
    if not a:
        return 0
    nrows, ncols = len(a), len(a[0])
    rk = 0
    for col in range(ncols):
        pivot = next((r for r in range(rk, nrows) if a[r][col] != 0), None)
        if pivot is None:
            continue
        a[rk], a[pivot] = a[pivot], a[rk]
        for r in range(nrows):
            if r != rk and a[r][col] != 0:
                f = exact_div(a[r][col], a[rk][col])
                a[r] = [x - f * y for x, y in zip(a[r], a[rk])]
        rk += 1
    return rk


def sylvester_matrix(p: Poly, q: Poly) -> list[list]:
    m, n = p.degree, q.degree
    size = m + n
    pd = list(reversed(p.coeffs))
    qd = list(reversed(q.coeffs))
    rows = []
    for i in range(n):
        rows.append([0] * i + pd + [0] * (size - m - 1 - i))
    for i in range(m):
        rows.append([0] * i + qd + [0] * (size - n - 1 - i))
    return rows


def resultant(p: Poly, q: Poly):
    """Sylvester-matrix resultant; vanishes iff p and q share a root."""
    if p.is_zero() or q.is_zero():
        raise DomainError("resultant of a zero polynomial")
    if p.degree == 0:
        return p.lc ** q.degree
    if q.degree == 0:
        return q.lc ** p.degree
    return determinant(sylvester_matrix(p, q))


def discriminant(p: Poly):
    """(-1)^(n(n-1)/2) Res(p, p') / lc(p); zero iff p has a repeated root."""
    n = p.degree
    if n < 2:
        raise DomainError("discriminant needs degree >= 2")
    sign = -1 if (n * (n - 1) // 2) % 2 else 1
    return exact_div(sign * resultant(p, p.derivative()), p.lc)


# -- roots --------------------------------------------------------------------

@dataclass(frozen=True)
class Root:
    value: object  # ctx.mpc
    multiplicity: int
    precision_bits: int


def _aberth(f: Poly, ctx, max_iter: int = 500) -> list:
    """Simultaneous Aberth-Ehrlich iteration on a square-free polynomial."""
    cs = [to_mpc(c, ctx) for c in f.coeffs]
    n = len(cs) - 1
    lead = cs[-1]
    cs = [c / lead for c in cs]
    if n == 1:
        return [-cs[0]]
    dcs = [i * cs[i] for i in range(1, n + 1)]

    def horner(coeffs, x):
        acc = ctx.mpc(0)
        for c in reversed(coeffs):
            acc = acc * x + c
        return acc

    radius = 1 + max(abs(c) for c in cs[:-1])
    zs = [radius * ctx.expjpi(ctx.mpf(2 * k) / n + ctx.mpf(1) / (2 * n) + ctx.mpf("0.1"))
          for k in range(n)]
    eps = ctx.mpf(2) ** (-(ctx.prec - 8))
    for _ in range(max_iter):
        biggest = ctx.mpf(0)
        for k in range(n):
            zk = zs[k]
            fk = horner(cs, zk)
            if fk == 0:
                continue
            ratio = fk / horner(dcs, zk)
            s = ctx.fsum(1 / (zk - zs[j]) for j in range(n) if j != k)
            w = ratio / (1 - ratio * s)
            zs[k] = zk - w
            biggest = max(biggest, abs(w) / max(1, abs(zs[k])))
        if biggest <= eps:
            # two Newton steps remove the last bits of error
            for _ in range(2):
                zs = [z - horner(cs, z) / horner(dcs, z) for z in zs]
            return zs
    raise PrecisionError(f"Aberth iteration did not converge for {f}")


def roots(p: Poly, precision_bits: int = DEFAULT_PRECISION) -> list[Root]:
    """All roots with exact multiplicities.

    Multiplicities come from an exact square-free decomposition; only the
    positions of the distinct roots are computed numerically.
    """
    if p.is_zero():
        raise DomainError("roots of the zero polynomial")
    if p.degree < 1:
        raise DomainError("roots need degree >= 1")
    if not all(is_exact(c) for c in p.coeffs):
        raise DomainError("roots() needs exact coefficients")
    ctx = context(precision_bits)
    out = []
    for factor, mult in square_free_decomposition(p):
        for z in _aberth(factor, ctx):
            out.append(Root(z, mult, precision_bits))
    out.sort(key=lambda r: (float(r.value.real), float(r.value.imag)))
    _certify(p, out, ctx)
    return out


def _certify(p: Poly, rts: list[Root], ctx) -> None:
    rebuilt = [to_mpc(p.lc, ctx)]
    for r in rts:
        for _ in range(r.multiplicity):
            nxt = [ctx.mpc(0)] * (len(rebuilt) + 1)
            for i, c in enumerate(rebuilt):
                nxt[i + 1] += c
                nxt[i] -= c * r.value
            rebuilt = nxt
    target = [to_mpc(c, ctx) for c in p.coeffs]
    scale = max(1, max(abs(c) for c in target))
    tol = ctx.mpf(2) ** (-(ctx.prec // 2))
    err = max(abs(a - b) for a, b in zip(rebuilt, target))
    if err > tol * scale:
        raise PrecisionError(f"roots of {p} not certified: residual {ctx.nstr(err, 5)}")


def distinct_roots(p: Poly, precision_bits: int = DEFAULT_PRECISION) -> list:
    """Root values, raising DegeneracyError if any root repeats."""
    rts = roots(p, precision_bits)
    if any(r.multiplicity > 1 for r in rts):
        raise DegeneracyError(f"{p} has a repeated root")
    return [r.value for r in rts]


# -- the projective line -----------------------------------------------------

@dataclass(frozen=True)
class ProjectivePoint:
    """A point (x0 : x1) of P^1; the affine value is x0 / x1, infinity has x1 = 0."""

    x0: object
    x1: object = 1

    def __post_init__(self):
        if self.x0 == 0 and self.x1 == 0:
            raise DomainError("(0 : 0) is not a point of P^1")

    @classmethod
    def of(cls, value) -> "ProjectivePoint":
        if isinstance(value, ProjectivePoint):
            return value
        return cls(value, 1)

    @property
    def is_infinity(self) -> bool:
        return self.x1 == 0

    @property
    def value(self):
        if self.is_infinity:
            raise DomainError("the point at infinity has no affine value")
        return exact_div(self.x0, self.x1)

    def transform(self, a, b, c, d) -> "ProjectivePoint":
        """Image under z -> (a z + b) / (c z + d)."""
        return ProjectivePoint(a * self.x0 + b * self.x1, c * self.x0 + d * self.x1)


INFINITY = ProjectivePoint(1, 0)


def _bracket(p: ProjectivePoint, q: ProjectivePoint):
    return p.x0 * q.x1 - p.x1 * q.x0


def cross_ratio(a, b, c, d):
    """((a-c)(b-d)) / ((a-d)(b-c)), total on P^1.

    Arguments may be scalars or :class:`ProjectivePoint` (use ``INFINITY``).
    """
    pts = [ProjectivePoint.of(x) for x in (a, b, c, d)]
    for i in range(4):
        for j in range(i + 1, 4):
            if _bracket(pts[i], pts[j]) == 0:
                raise DomainError("cross-ratio of coincident points")
    pa, pb, pc, pd = pts
    return exact_div(_bracket(pa, pc) * _bracket(pb, pd), _bracket(pa, pd) * _bracket(pb, pc))


# -- interpolation of ternary forms ------------------------------------------

@dataclass
class InterpolationResult:
    form: TernaryForm
    residual: object
    relative_residual: object
    numerical_rank: int
    exact_fit: bool
    precision_bits: int


def interpolate_homogeneous(degree: int, samples: Sequence, precision_bits: int = DEFAULT_PRECISION
                            ) -> InterpolationResult:
    """Least-squares fit of a degree-``degree`` ternary form to point values.

    ``samples`` is a sequence of ``((x1, x2, x3), value)``. The fit is exact
    (``exact_fit``) when the relative residual is below 2^(-precision/2).
    """
    monos = monomials(3, degree)
    if len(samples) < len(monos):
        raise ConditioningError(f"need at least {len(monos)} samples, got {len(samples)}",
                                numerical_rank=len(samples))
    ctx = context(precision_bits)
    rows, rhs = [], []
    for point, value in samples:
        xs = [to_mpc(x, ctx) for x in point]
        rows.append([xs[0] ** m[0] * xs[1] ** m[1] * xs[2] ** m[2] for m in monos])
        rhs.append(to_mpc(value, ctx))

    # numerical rank from a double-precision SVD of the column-scaled matrix
    approx = np.array([[complex(v) for v in row] for row in rows])
    norms = np.linalg.norm(approx, axis=0)
    norms[norms == 0] = 1
    sv = np.linalg.svd(approx / norms, compute_uv=False)
    numerical_rank = int(np.sum(sv > sv[0] * 1e-11))
    if numerical_rank < len(monos):
        raise ConditioningError(
            f"sample set is rank deficient: numerical rank {numerical_rank} < {len(monos)}",
            numerical_rank=numerical_rank)

    A = ctx.matrix(rows)
    b = ctx.matrix(rhs)
    x, res = ctx.qr_solve(A, b)
    bnorm = ctx.norm(b)
    rel = res / bnorm if bnorm else res
    tol = ctx.mpf(2) ** (-(precision_bits // 2))
    form = TernaryForm(degree, {m: x[i] for i, m in enumerate(monos) if x[i] != 0})
    return InterpolationResult(form, res, rel, numerical_rank, bool(rel < tol), precision_bits)
