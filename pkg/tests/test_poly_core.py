import random
from fractions import Fraction

import mpmath
import pytest
import sympy as sp
from hypothesis import given, strategies as st

from conftest import rationals
from spinlag.errors import ConditioningError, DomainError
from spinlag.poly_core import (
    INFINITY,
    Gauss,
    I,
    MPoly,
    Poly,
    ProjectivePoint,
    TernaryForm,
    context,
    cross_ratio,
    determinant,
    discriminant,
    interpolate_homogeneous,
    laplacian,
    monomials,
    quadratic_norm,
    resultant,
    roots,
    square_free_decomposition,
    to_mpc,
)

polys = st.lists(rationals(100), min_size=2, max_size=7).map(Poly).filter(lambda p: p.degree >= 1)


def approx_set(rs):
    return sorted((complex(r.value).real, complex(r.value).imag, r.multiplicity) for r in rs)


# -- scalars ------------------------------------------------------------------

def test_gauss_arithmetic_is_exact():
    a = Gauss(Fraction(1, 2), 3)
    b = Gauss(-1, Fraction(2, 3))
    assert (a * b) / b == a
    assert I * I == -1
    assert Gauss(Fraction(2, 4), 0).re == Fraction(1, 2)


def test_context_rejects_low_precision():
    with pytest.raises(ValueError):
        context(32)


# -- roots --------------------------------------------------------------------

def test_roots_simple_examples():
    assert approx_set(roots(Poly([-1, 0, 1]), 128)) == [(-1.0, 0.0, 1), (1.0, 0.0, 1)]
    assert approx_set(roots(Poly([0, -1, 0, 1]), 128)) == [(-1.0, 0.0, 1), (0.0, 0.0, 1), (1.0, 0.0, 1)]
    assert approx_set(roots(Poly.from_roots([2, 2]), 128)) == [(2.0, 0.0, 2)]


def test_roots_of_zero_polynomial_is_domain_error():
    with pytest.raises(DomainError):
        roots(Poly(), 128)


@given(st.lists(st.integers(-5, 5), min_size=1, max_size=5), rationals(20, nonzero=True))
def test_roots_reproduce_polynomial(rts, lead):
    p = Poly.from_roots(rts, lead)
    found = roots(p, 256)
    assert sum(r.multiplicity for r in found) == p.degree
    ctx = context(256)
    rebuilt = [to_mpc(lead, ctx)]
    for r in found:
        for _ in range(r.multiplicity):
            # multiply by (z - root), descending coefficients
            rebuilt = [a - r.value * b for a, b in zip(rebuilt + [0], [0] + rebuilt)]
    target = [to_mpc(c, ctx) for c in reversed(p.coeffs)]
    assert max(abs(x - y) for x, y in zip(rebuilt, target)) < mpmath.mpf(2) ** -128


@given(polys)
def test_discriminant_zero_iff_repeated_root(p):
    found = roots(p, 256)
    has_repeat = any(r.multiplicity >= 2 for r in found)
    if p.degree >= 2:
        assert (discriminant(p) == 0) == has_repeat


# -- discriminant and resultant ------------------------------------------------

def test_discriminant_examples():
    assert discriminant(Poly([-1, 0, 1])) == 4
    assert discriminant(Poly([0, -1, 0, 1])) == 4
    assert discriminant(Poly.from_roots([1, 1, -3])) == 0
    with pytest.raises(DomainError):
        discriminant(Poly([1, 1]))


def test_resultant_examples():
    assert resultant(Poly([-1, 1]), Poly([1, 1])) == 2
    assert resultant(Poly([-1, 0, 1]), Poly([-1, 1])) == 0
    assert resultant(Poly([1, 0, 1]), Poly([-1, 0, 1])) == 4
    with pytest.raises(DomainError):
        resultant(Poly(), Poly([1, 1]))


@given(st.lists(rationals(50), min_size=4, max_size=4), st.lists(rationals(50), min_size=3, max_size=3))
def test_discriminant_of_product(a, b):
    p, q = Poly(a), Poly(b)
    if p.degree != 3 or q.degree != 2:
        return
    assert discriminant(p * q) == discriminant(p) * discriminant(q) * resultant(p, q) ** 2


def test_discriminant_against_sympy():
    z = sp.symbols("z")
    cs = [Fraction(3, 7), -2, Fraction(5, 3), 1, -4]
    expected = sp.discriminant(sum(sp.Rational(c.numerator, c.denominator) * z ** i
                                   for i, c in enumerate(cs)), z)
    assert discriminant(Poly(cs)) == Fraction(int(expected.p), int(expected.q))


def test_square_free_decomposition_multiplicities():
    p = Poly.from_roots([1, 1, 1, 2, 2, 5])
    mults = sorted(m for _, m in square_free_decomposition(p))
    assert mults == [1, 2, 3]


def test_determinant_exact():
    assert determinant([[1, 2], [3, 4]]) == -2
    assert determinant([[Fraction(1, 2), 0, 0], [0, 3, 0], [1, 1, 2]]) == 3


# -- cross ratio ---------------------------------------------------------------

def test_cross_ratio_examples():
    assert cross_ratio(0, INFINITY, 1, -1) == -1
    assert cross_ratio(0, INFINITY, 1, 2) == Fraction(1, 2)
    with pytest.raises(DomainError):
        cross_ratio(0, 0, 1, 2)


@given(st.lists(rationals(30), min_size=4, max_size=4, unique=True),
       st.tuples(rationals(10), rationals(10), rationals(10), rationals(10)))
def test_cross_ratio_mobius_invariant(pts, g):
    a, b, c, d = g
    if a * d - b * c == 0:
        return

    def mobius(x):
        den = c * x + d
        return INFINITY if den == 0 else (a * x + b) / den

    image = [mobius(x) for x in pts]
    assert cross_ratio(*image) == cross_ratio(*pts)


def test_projective_point_rejects_zero():
    with pytest.raises(DomainError):
        ProjectivePoint(0, 0)


# -- ternary forms ---------------------------------------------------------------

def test_laplacian_examples():
    x1, x2, x3 = TernaryForm.x()
    assert laplacian(quadratic_norm()) == MPoly.const(3, 6)
    assert laplacian((x1 - x2 * I) ** 3).is_zero()
    assert laplacian(x3 ** 3) == x3 * 6


@given(st.dictionaries(st.sampled_from(monomials(3, 4)), rationals(20), max_size=6),
       st.permutations([0, 1, 2]), st.tuples(*[st.sampled_from([1, -1])] * 3))
def test_laplacian_commutes_with_signed_permutations(terms, perm, signs):
    f = TernaryForm(4, terms)
    xs = TernaryForm.x()
    images = [xs[perm[i]] * signs[i] for i in range(3)]

    def sub(g):
        out = g(*images)
        if isinstance(out, TernaryForm):
            return out
        return TernaryForm.from_mpoly(out) if isinstance(out, MPoly) else TernaryForm(2, {})

    assert laplacian(sub(f)) == sub(laplacian(f))


def test_laplacian_linear():
    x1, x2, x3 = TernaryForm.x()
    f, g = x1 ** 2 * x2, x3 ** 2 * x1 - x2 ** 3
    assert laplacian(f * 3 + g) == laplacian(f) * 3 + laplacian(g)


# -- interpolation -----------------------------------------------------------------

def _samples(fn, degree, count):
    rng = random.Random(degree)
    pts = [tuple(Fraction(rng.randint(-20, 20), rng.randint(1, 20)) for _ in range(3))
           for _ in range(count)]
    return [(p, fn(*p)) for p in pts]


def test_interpolation_recovers_linear_form():
    fit = interpolate_homogeneous(1, _samples(lambda a, b, c: a + 2 * b, 1, 6))
    assert fit.exact_fit
    assert abs(fit.form.coefficient((1, 0, 0)) - 1) < 1e-60
    assert abs(fit.form.coefficient((0, 1, 0)) - 2) < 1e-60


def test_interpolation_cross_term_and_quartic():
    fit = interpolate_homogeneous(2, _samples(lambda a, b, c: a * b, 2, 12))
    assert abs(fit.form.coefficient((1, 1, 0)) - 1) < 1e-60
    assert max(abs(c) for m, c in fit.form.terms.items() if m != (1, 1, 0)) < 1e-60
    quartic = {m: Fraction(i + 1, 3) for i, m in enumerate(monomials(3, 4))}

    def value(a, b, c):
        return sum(coef * a ** m[0] * b ** m[1] * c ** m[2] for m, coef in quartic.items())

    fit = interpolate_homogeneous(4, _samples(value, 4, 30))
    assert fit.exact_fit
    for m, coef in quartic.items():
        assert abs(fit.form.coefficient(m) - coef) < mpmath.mpf(2) ** -64


def test_interpolation_rank_deficient():
    pts = [((Fraction(1), Fraction(i), Fraction(0)), Fraction(i)) for i in range(10)]
    with pytest.raises(ConditioningError) as err:
        interpolate_homogeneous(2, pts)
    assert err.value.numerical_rank < 6
