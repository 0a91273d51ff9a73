"""Exact Gaussian rationals and conversion to arbitrary-precision complex numbers.

Exact coefficients are plain ``int``/``Fraction`` when real and :class:`Gauss`
when an imaginary part is needed. Every routine in the package accepts either,
so real computations never pay for the imaginary half.

Approximate values are ``mpc`` numbers owned by a per-precision mpmath context
(see :func:`context`); the context's ``prec`` records the working precision.
"""

from __future__ import annotations

import numbers
from fractions import Fraction
from functools import lru_cache

import mpmath

DEFAULT_PRECISION = 256


class Gauss:
    """An element re + i*im of Q(i)."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        if isinstance(re, Gauss):
            re, im = re.re, re.im + Fraction(im)
        self.re = Fraction(re)
        self.im = Fraction(im)

    @classmethod
    def coerce(cls, x):
        if isinstance(x, Gauss):
            return x
        if isinstance(x, numbers.Rational):
            return cls(x)
        if isinstance(x, complex):
            return cls(Fraction(x.real), Fraction(x.imag))
        raise TypeError(f"cannot make an exact Gaussian rational from {x!r}")

    def __add__(self, other):
        if isinstance(other, Gauss):
            return Gauss(self.re + other.re, self.im + other.im)
        if isinstance(other, numbers.Rational):
            return Gauss(self.re + other, self.im)
        return NotImplemented

    __radd__ = __add__

    def __neg__(self):
        return Gauss(-self.re, -self.im)

    def __pos__(self):
        return self

    def __sub__(self, other):
        if isinstance(other, Gauss):
            return Gauss(self.re - other.re, self.im - other.im)
        if isinstance(other, numbers.Rational):
            return Gauss(self.re - other, self.im)
        return NotImplemented

    def __rsub__(self, other):
        if isinstance(other, numbers.Rational):
            return Gauss(other - self.re, -self.im)
        return NotImplemented

    def __mul__(self, other):
        if isinstance(other, Gauss):
            return Gauss(self.re * other.re - self.im * other.im,
                         self.re * other.im + self.im * other.re)
        if isinstance(other, numbers.Rational):
            return Gauss(self.re * other, self.im * other)
        return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, numbers.Rational):
            if other == 0:
                raise ZeroDivisionError("division by zero")
            return Gauss(self.re / other, self.im / other)
        if isinstance(other, Gauss):
            n = other.norm()
            if n == 0:
                raise ZeroDivisionError("division by zero")
            c = other.conjugate()
            return Gauss((self.re * c.re - self.im * c.im) / n,
                         (self.re * c.im + self.im * c.re) / n)
        return NotImplemented

    def __rtruediv__(self, other):
        if isinstance(other, numbers.Rational):
            return Gauss(other) / self
        return NotImplemented

    def __pow__(self, n):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return Gauss(1) / (self ** -n)
        result, base = Gauss(1), self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def conjugate(self):
        return Gauss(self.re, -self.im)

    def norm(self):
        return self.re * self.re + self.im * self.im

    def __eq__(self, other):
        if isinstance(other, Gauss):
            return self.re == other.re and self.im == other.im
        if isinstance(other, numbers.Rational):
            return self.im == 0 and self.re == other
        if isinstance(other, complex):
            return self == Gauss.coerce(other)
        return NotImplemented

    def __hash__(self):
        if self.im == 0:
            return hash(self.re)
        return hash((self.re, self.im))

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __complex__(self):
        return complex(float(self.re), float(self.im))

    def __repr__(self):
        return f"Gauss({self.re}, {self.im})"

    def __str__(self):
        if self.im == 0:
            return str(self.re)
        if self.re == 0:
            return f"{self.im}*I"
        sign = "+" if self.im > 0 else "-"
        return f"({self.re} {sign} {abs(self.im)}*I)"


I = Gauss(0, 1)


def simplify(x):
    """Demote a Gauss with zero imaginary part to a Fraction."""
    if isinstance(x, Gauss) and x.im == 0:
        return x.re
    return x


def is_exact(x) -> bool:
    return isinstance(x, (numbers.Rational, Gauss))


@lru_cache(maxsize=None)
def context(precision_bits: int = DEFAULT_PRECISION) -> mpmath.ctx_mp.MPContext:
    """An mpmath context private to one working precision."""
    if precision_bits < 64:
        raise ValueError("precision_bits must be at least 64")
    ctx = mpmath.MPContext()
    ctx.prec = precision_bits
    return ctx


def to_mpc(x, ctx):
    """Convert an exact or approximate scalar to ``ctx.mpc``."""
    if isinstance(x, Gauss):
        return ctx.mpc(ctx.mpf(x.re.numerator) / x.re.denominator,
                       ctx.mpf(x.im.numerator) / x.im.denominator)
    if isinstance(x, numbers.Rational):
        return ctx.mpc(ctx.mpf(x.numerator) / x.denominator)
    return ctx.mpc(x)


def rational_string(x) -> str:
    """Stable textual form used in JSON reports."""
    if isinstance(x, Gauss):
        return str(simplify(x))
    if isinstance(x, numbers.Rational):
        return str(Fraction(x))
    return str(x)
