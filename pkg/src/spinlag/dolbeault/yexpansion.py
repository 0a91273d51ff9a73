"""Finite sums of z^a zbar^b (1 + z zbar)^(-c) on the affine chart of P^1.

Internally every term is written as z^a y^e with y = 1 + z zbar and a, e
arbitrary integers, using zbar = (y - 1) / z. The functions z^a y^e are
linearly independent, so this canonical form makes equality exact and the
derivatives closed:

    d/dzbar (z^a y^e) = e z^(a+1) y^(e-1)
    d/dz    (z^a y^e) = (a + e) z^(a-1) y^e - e z^(a-1) y^(e-1)
"""

from __future__ import annotations

from math import comb
from typing import Iterable, Mapping

from ..errors import DomainError
from ..poly_core import Poly
from ..poly_core.scalars import Gauss, simplify


def _clean(terms: Mapping) -> dict:
    out = {}
    for key, c in terms.items():
        if isinstance(c, Gauss):
            c = simplify(c)
        if c != 0:
            out[key] = c
    return out


def _combine(items: Iterable) -> dict:
    out: dict = {}
    for key, c in items:
        out[key] = out[key] + c if key in out else c
    return _clean(out)


class YExpansion:
    """A smooth function (or form coefficient) on C* in the z^a y^e basis.

    ``twist`` is the degree n of the bundle O(n) the coefficient is read in,
    ``form_degree`` is 1 when a dzbar factor is attached. Both are carried
    through products for bookkeeping; the calculus itself never needs them.
    """

    __slots__ = ("canonical", "twist", "form_degree")

    def __init__(self, canonical: Mapping | None = None, twist: int | None = None,
                 form_degree: int = 0):
        if form_degree not in (0, 1):
            raise DomainError("form degree must be 0 or 1")
        self.canonical = _clean(canonical or {})
        self.twist = twist
        self.form_degree = form_degree

    # construction ------------------------------------------------------------

    @classmethod
    def from_terms(cls, terms: Iterable, twist: int | None = None, form_degree: int = 0
                   ) -> "YExpansion":
        """From (coeff, a, b, c) meaning coeff z^a zbar^b y^(-c), b >= 0."""
        items = []
        for coeff, a, b, c in terms:
            if b < 0:
                raise DomainError("zbar exponent must be non-negative")
            # zbar^b = z^(-b) (y - 1)^b
            for j in range(b + 1):
                sign = -1 if (b - j) % 2 else 1
                items.append(((a - b, j - c), coeff * sign * comb(b, j)))
        return cls(_combine(items), twist, form_degree)

    @classmethod
    def monomial(cls, coeff=1, a: int = 0, e: int = 0, twist=None, form_degree=0) -> "YExpansion":
        return cls({(a, e): coeff}, twist, form_degree)

    @classmethod
    def from_poly(cls, p: Poly, twist: int | None = None) -> "YExpansion":
        return cls({(j, 0): c for j, c in enumerate(p.coeffs)},
                   p.degree if twist is None else twist)

    @classmethod
    def zbar_poly(cls, coeffs, denominator_power: int, twist=None, form_degree=0) -> "YExpansion":
        """(sum_j coeffs[j] zbar^j) / y^denominator_power."""
        return cls.from_terms([(c, 0, j, denominator_power) for j, c in enumerate(coeffs)],
                              twist, form_degree)

    # structure ---------------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.canonical

    def __bool__(self):
        return bool(self.canonical)

    def terms(self) -> list[tuple]:
        """(coeff, a, b, c) with no repeated (a, b, c): coeff z^a zbar^b y^(-c).

        Negative powers of y stay as y^(-c); non-negative ones are expanded
        into monomials z^(a+j) zbar^j.
        """
        items = []
        for (a, e), coeff in self.canonical.items():
            if e < 0:
                items.append(((a, 0, -e), coeff))
            else:
                for j in range(e + 1):
                    items.append(((a + j, j, 0), coeff * comb(e, j)))
        merged = _combine(items)
        return sorted(((c, a, b, cc) for (a, b, cc), c in merged.items()),
                      key=lambda t: (t[1], t[2], t[3]))

    def z_exponents(self) -> list[int]:
        return sorted({a for a, _ in self.canonical})

    def y_series(self, a: int) -> dict:
        """{e: coeff} for the angular sector z^a."""
        return {e: c for (aa, e), c in self.canonical.items() if aa == a}

    def _meta(self, other) -> tuple:
        if isinstance(other, YExpansion):
            fd = self.form_degree + other.form_degree
            if fd > 1:
                raise DomainError("product of two (0,1)-forms")
            tw = None if self.twist is None or other.twist is None else self.twist + other.twist
            return tw, fd
        return self.twist, self.form_degree

    # arithmetic ----------------------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, YExpansion):
            other = YExpansion({(0, 0): other})
        out = dict(self.canonical)
        for k, c in other.canonical.items():
            out[k] = out[k] + c if k in out else c
        tw = self.twist if self.twist is not None else other.twist
        return YExpansion(out, tw, max(self.form_degree, other.form_degree))

    __radd__ = __add__

    def __neg__(self):
        return YExpansion({k: -c for k, c in self.canonical.items()}, self.twist, self.form_degree)

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, Poly):
            return self.times_section(other)
        tw, fd = self._meta(other)
        if not isinstance(other, YExpansion):
            if other == 0:
                return YExpansion({}, tw, fd)
            return YExpansion({k: c * other for k, c in self.canonical.items()}, tw, fd)
        items = []
        for (a1, e1), c1 in self.canonical.items():
            for (a2, e2), c2 in other.canonical.items():
                items.append(((a1 + a2, e1 + e2), c1 * c2))
        return YExpansion(_combine(items), tw, fd)

    def __rmul__(self, other):
        return self * other

    def __pow__(self, n: int):
        if n < 0:
            raise DomainError("negative power")
        out = YExpansion({(0, 0): 1}, 0 if self.twist is not None else None)
        for _ in range(n):
            out = out * self
        return out

    def times_section(self, p: Poly, degree: int | None = None) -> "YExpansion":
        """Multiply by a polynomial in z read as a section of O(degree)."""
        degree = p.degree if degree is None else degree
        items = []
        for (a, e), c in self.canonical.items():
            for j, pc in enumerate(p.coeffs):
                if pc != 0:
                    items.append(((a + j, e), c * pc))
        tw = None if self.twist is None else self.twist + degree
        return YExpansion(_combine(items), tw, self.form_degree)

    def times_y(self, power: int) -> "YExpansion":
        return YExpansion({(a, e + power): c for (a, e), c in self.canonical.items()},
                          self.twist, self.form_degree)

    def times_z(self, power: int) -> "YExpansion":
        return YExpansion({(a + power, e): c for (a, e), c in self.canonical.items()},
                          self.twist, self.form_degree)

    def times_zbar(self) -> "YExpansion":
        """zbar = z^(-1) (y - 1)."""
        return self.times_z(-1).times_y(1) - self.times_z(-1)

    def with_meta(self, twist: int | None = None, form_degree: int | None = None) -> "YExpansion":
        return YExpansion(self.canonical, twist if twist is not None else self.twist,
                          self.form_degree if form_degree is None else form_degree)

    def map_coefficients(self, fn) -> "YExpansion":
        return YExpansion({k: fn(c) for k, c in self.canonical.items()}, self.twist,
                          self.form_degree)

    def __eq__(self, other):
        if not isinstance(other, YExpansion):
            other = YExpansion({(0, 0): other}) if other != 0 else YExpansion()
        return (self - other).is_zero()

    def __hash__(self):
        return hash(frozenset(self.canonical.items()))

    # calculus ------------------------------------------------------------------

    def d_zbar(self) -> "YExpansion":
        """Partial derivative in zbar; the result carries a dzbar factor."""
        if self.form_degree:
            raise DomainError("d/dzbar of a (0,1)-form")
        items = [((a + 1, e - 1), c * e) for (a, e), c in self.canonical.items() if e]
        return YExpansion(_combine(items), self.twist, 1)

    def d_z(self) -> "YExpansion":
        items = []
        for (a, e), c in self.canonical.items():
            if a + e:
                items.append(((a - 1, e), c * (a + e)))
            if e:
                items.append(((a - 1, e - 1), -c * e))
        return YExpansion(_combine(items), self.twist, self.form_degree)

    def __call__(self, z):
        """Numerical value at a point z of C* (any complex-like scalar)."""
        coerce = complex if isinstance(z, complex) else (lambda c: c)
        y = 1 + z * z.conjugate()
        total = 0
        for (a, e), c in self.canonical.items():
            total = total + coerce(c) * z ** a * y ** e
        return total

    def __repr__(self):
        return f"YExpansion({self.canonical!r}, twist={self.twist}, form_degree={self.form_degree})"

    def __str__(self):
        if not self.canonical:
            return "0"
        parts = []
        for (a, e), c in sorted(self.canonical.items()):
            parts.append(f"({c})*z^{a}*y^{e}")
        return " + ".join(parts)
