"""Sparse multivariate polynomials and homogeneous ternary forms.

:class:`MPoly` is the engine for every exact polynomial identity in the
package: coefficient maps of moment maps, the trace identity of the triple
tensor, determinants of bracket matrices as polynomials in the sextic
coefficients, and so on. It is deliberately small: ring operations,
evaluation, partial derivatives and substitution.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from typing import Iterable, Mapping

from ..errors import DomainError
from .scalars import Gauss, simplify


def _clean(terms: Mapping) -> dict:
    out = {}
    for mono, c in terms.items():
        if isinstance(c, Gauss):
            c = simplify(c)
        if c != 0:
            out[mono] = c
    return out


class MPoly:
    """Polynomial in ``nvars`` variables stored as {exponent tuple: coefficient}."""

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms: Mapping | None = None):
        self.nvars = nvars
        self.terms = _clean(terms or {})
        for mono in self.terms:
            if len(mono) != nvars:
                raise DomainError(f"monomial {mono} does not have {nvars} exponents")

    @classmethod
    def const(cls, nvars: int, c) -> "MPoly":
        return cls(nvars, {(0,) * nvars: c})

    @classmethod
    def var(cls, nvars: int, i: int, c=1) -> "MPoly":
        mono = [0] * nvars
        mono[i] = 1
        return cls(nvars, {tuple(mono): c})

    @classmethod
    def gens(cls, nvars: int) -> list["MPoly"]:
        return [cls.var(nvars, i) for i in range(nvars)]

    # structure ------------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    @property
    def total_degree(self) -> int:
        if not self.terms:
            return -1
        return max(sum(m) for m in self.terms)

    def is_homogeneous(self) -> bool:
        return len({sum(m) for m in self.terms}) <= 1

    def coefficient(self, mono) -> object:
        return self.terms.get(tuple(mono), 0)

    def _coerce(self, other) -> "MPoly":
        if isinstance(other, MPoly):
            if other.nvars != self.nvars:
                raise DomainError("variable count mismatch")
            return other
        return MPoly.const(self.nvars, other)

    # arithmetic -----------------------------------------------------------

    def __add__(self, other):
        other = self._coerce(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out[m] + c if m in out else c
        return MPoly(self.nvars, out)

    __radd__ = __add__

    def __neg__(self):
        return MPoly(self.nvars, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, MPoly):
            if other == 0:
                return MPoly(self.nvars)
            return MPoly(self.nvars, {m: c * other for m, c in self.terms.items()})
        other = self._coerce(other)
        out: dict = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = tuple(a + b for a, b in zip(m1, m2))
                v = c1 * c2
                out[m] = out[m] + v if m in out else v
        return MPoly(self.nvars, out)

    def __rmul__(self, other):
        return self * other

    def __truediv__(self, other):
        if isinstance(other, MPoly):
            if len(other.terms) == 1 and (0,) * self.nvars in other.terms:
                other = other.terms[(0,) * self.nvars]
            else:
                raise DomainError("division by a non-constant polynomial")
        if isinstance(other, int):
            other = Fraction(other)
        return MPoly(self.nvars, {m: c / other for m, c in self.terms.items()})

    def __pow__(self, n: int):
        if n < 0:
            raise DomainError("negative power")
        result = MPoly.const(self.nvars, 1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        try:
            diff = self - other
        except (TypeError, DomainError):
            return NotImplemented
        return diff.is_zero()

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    # calculus and evaluation ----------------------------------------------

    def diff(self, i: int) -> "MPoly":
        out = {}
        for m, c in self.terms.items():
            if m[i]:
                mm = list(m)
                mm[i] -= 1
                out[tuple(mm)] = c * m[i]
        return MPoly(self.nvars, out)

    def __call__(self, *values):
        """Evaluate at ring elements (numbers, polynomials, ...)."""
        if len(values) == 1 and isinstance(values[0], (list, tuple)):
            values = tuple(values[0])
        if len(values) != self.nvars:
            raise DomainError(f"expected {self.nvars} values")
        powers: list[dict] = [dict() for _ in range(self.nvars)]

        def pw(i, e):
            cache = powers[i]
            if e not in cache:
                cache[e] = values[i] ** e if e else 1
            return cache[e]

        acc = 0
        for m, c in self.terms.items():
            t = c
            for i, e in enumerate(m):
                if e:
                    t = t * pw(i, e)
            acc = acc + t
        return acc

    def map_coefficients(self, fn) -> "MPoly":
        return MPoly(self.nvars, {m: fn(c) for m, c in self.terms.items()})

    def __repr__(self):
        return f"MPoly({self.nvars}, {self.terms!r})"

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for m in sorted(self.terms, reverse=True):
            mono = "*".join(f"x{i}^{e}" if e > 1 else f"x{i}" for i, e in enumerate(m) if e)
            parts.append(f"({self.terms[m]})" + (f"*{mono}" if mono else ""))
        return " + ".join(parts)


def monomials(nvars: int, degree: int) -> list[tuple[int, ...]]:
    """All exponent tuples of the given total degree, in a fixed order."""
    out = []
    for combo in itertools.combinations_with_replacement(range(nvars), degree):
        mono = [0] * nvars
        for i in combo:
            mono[i] += 1
        out.append(tuple(mono))
    return sorted(set(out), reverse=True)


class TernaryForm(MPoly):
    """Homogeneous polynomial in x1, x2, x3 of a fixed degree."""

    __slots__ = ("degree",)

    def __init__(self, degree: int, terms: Mapping | None = None):
        super().__init__(3, terms)
        if degree < 0:
            raise DomainError("degree must be non-negative")
        for m in self.terms:
            if sum(m) != degree:
                raise DomainError(f"monomial {m} is not of degree {degree}")
        self.degree = degree

    @classmethod
    def from_mpoly(cls, p: MPoly, degree: int | None = None) -> "TernaryForm":
        if p.nvars != 3:
            raise DomainError("a ternary form needs three variables")
        if degree is None:
            degree = max(p.total_degree, 0)
        return cls(degree, p.terms)

    @classmethod
    def x(cls) -> list["TernaryForm"]:
        return [cls(1, {m: 1}) for m in ((1, 0, 0), (0, 1, 0), (0, 0, 1))]

    def as_mpoly(self) -> MPoly:
        return MPoly(3, self.terms)

    def _wrap(self, p: MPoly) -> "TernaryForm | MPoly":
        if p.is_zero():
            return TernaryForm(max(self.degree, 0))
        if p.is_homogeneous():
            return TernaryForm(p.total_degree, p.terms)
        return p

    def __add__(self, other):
        r = MPoly.__add__(self.as_mpoly(), other)
        if isinstance(other, TernaryForm) and other.degree != self.degree and r:
            return r
        return self._wrap(r)

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-MPoly._coerce(self, other))

    def __neg__(self):
        return TernaryForm(self.degree, {m: -c for m, c in self.terms.items()})

    def __mul__(self, other):
        r = MPoly.__mul__(self.as_mpoly(), other.as_mpoly() if isinstance(other, TernaryForm) else other)
        if r.is_zero():
            deg = self.degree + (other.degree if isinstance(other, TernaryForm) else 0)
            return TernaryForm(deg)
        return self._wrap(r)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        r = MPoly.__pow__(self.as_mpoly(), n)
        return TernaryForm(self.degree * n, r.terms)

    def __truediv__(self, other):
        return TernaryForm(self.degree, MPoly.__truediv__(self.as_mpoly(), other).terms)

    def diff(self, i: int) -> "TernaryForm":
        return TernaryForm(max(self.degree - 1, 0), MPoly.diff(self.as_mpoly(), i).terms)

    def map_coefficients(self, fn) -> "TernaryForm":
        return TernaryForm(self.degree, {m: fn(c) for m, c in self.terms.items()})

    def __repr__(self):
        return f"TernaryForm({self.degree}, {self.terms!r})"


def laplacian(f: TernaryForm) -> TernaryForm:
    """Sum of the three unmixed second partials; the degree drops by two."""
    if f.degree < 2:
        return TernaryForm(0)
    out = TernaryForm(f.degree - 2)
    for i in range(3):
        out = out + f.diff(i).diff(i)
    if not isinstance(out, TernaryForm):
        raise AssertionError("laplacian of a form must be a form")
    return TernaryForm(f.degree - 2, out.terms)


def quadratic_norm() -> TernaryForm:
    """(x, x) = x1^2 + x2^2 + x3^2."""
    return TernaryForm(2, {(2, 0, 0): 1, (0, 2, 0): 1, (0, 0, 2): 1})


def symbols(nvars: int) -> list[MPoly]:
    return MPoly.gens(nvars)


def expand_identity(lhs, rhs) -> bool:
    """Full symbolic comparison of two MPoly expressions."""
    return (lhs - rhs).is_zero()


def from_iterable_terms(nvars: int, items: Iterable[tuple[tuple[int, ...], object]]) -> MPoly:
    out: dict = {}
    for m, c in items:
        out[m] = out[m] + c if m in out else c
    return MPoly(nvars, out)
