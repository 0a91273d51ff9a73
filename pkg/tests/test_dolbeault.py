from fractions import Fraction

import pytest
import sympy as sp
from hypothesis import given, strategies as st

from conftest import rationals
from spinlag.dolbeault import (
    DolbeaultClass,
    YExpansion,
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
    trope_form_constant,
    trope_quadratic_form,
)
from spinlag.errors import DegeneracyError, DivergenceError, DomainError, LogarithmicTermError
from spinlag.poly_core import MPoly, Poly

VOL = YExpansion.monomial(1, 0, -2, twist=-2, form_degree=1)

integrable_terms = st.lists(
    st.tuples(rationals(20, nonzero=True), st.integers(-3, 3), st.integers(0, 3), st.integers(0, 3)),
    min_size=1, max_size=5,
).map(lambda ts: [(c, a, b, b + 2 + extra) for c, a, b, extra in ts])


def to_sympy(h: YExpansion, z, zb):
    return sum(sp.Rational(c.numerator, c.denominator) * z ** a * zb ** b * (1 + z * zb) ** -cc
               for c, a, b, cc in ((Fraction(c), a, b, cc) for c, a, b, cc in h.terms()))


# -- the naive integral ------------------------------------------------------------

def test_naive_integral_of_volume_form():
    h = naive_integral(VOL)
    assert h.terms() == [(-1, -1, 0, 1)]


def test_naive_integral_of_middle_class():
    f = naive_integral(DolbeaultClass(0, 1, 0).form())
    expected = (YExpansion.monomial(Fraction(1, 3), -2, -3)
                + YExpansion.monomial(Fraction(-1, 2), -2, -2))
    assert f == expected


def test_naive_integral_errors():
    with pytest.raises(LogarithmicTermError):
        naive_integral(YExpansion.from_terms([(1, 0, 0, 1)], form_degree=1))
    with pytest.raises(LogarithmicTermError):
        naive_integral(YExpansion.from_terms([(1, 0, 1, 2)], form_degree=1))
    with pytest.raises(DivergenceError):
        naive_integral(YExpansion.from_terms([(1, 0, 1, 1)], form_degree=1))


@given(integrable_terms)
def test_dbar_round_trip(terms):
    g = YExpansion.from_terms(terms, form_degree=1)
    if g.is_zero():
        return
    try:
        h = naive_integral(g)
    except LogarithmicTermError:
        return
    assert h.d_zbar() == g


@given(integrable_terms)
def test_dbar_round_trip_against_sympy(terms):
    # independent oracle: differentiate in zbar with z held fixed
    z, zb = sp.symbols("z zb")
    g = YExpansion.from_terms(terms, form_degree=1)
    if g.is_zero():
        return
    try:
        h = naive_integral(g)
    except LogarithmicTermError:
        return
    diff = sp.diff(to_sympy(h, z, zb), zb) - to_sympy(g, z, zb)
    assert sp.simplify(diff) == 0


def test_yexpansion_normalization():
    a = YExpansion.from_terms([(1, 0, 1, 3), (2, 0, 1, 3), (0, 4, 0, 1)])
    assert a == YExpansion.from_terms([(3, 0, 1, 3)])
    keys = [t[1:] for t in a.terms()]
    assert len(keys) == len(set(keys)) and all(t[0] != 0 for t in a.terms())
    assert YExpansion.from_terms([(1, 2, 0, 1), (-1, 2, 0, 1)]).is_zero()


# -- polar parts and regularity ---------------------------------------------------------

def test_volume_class_is_nontrivial():
    pr = polar_part(naive_integral(VOL), -2)
    assert pr.polar == YExpansion.monomial(-1, -1, 0)
    assert pr.report.regular_at_zero
    assert not pr.report.is_global_section


def test_polar_part_of_middle_class():
    f = naive_integral(DolbeaultClass(0, 1, 0).form())
    pr = polar_part(f, -2)
    assert pr.polar == YExpansion.monomial(Fraction(-1, 6), -2, 0)
    assert pr.report.is_global_section


def test_trivial_class_has_global_primitive():
    sol = solve_dbar(family_form(3, 2), -4)
    assert sol.report.is_global_section
    assert sol.section.d_zbar() == family_form(3, 2).with_meta(twist=-4)


def test_regularity_of_polynomials():
    assert regularity(YExpansion.from_poly(Poly([1, 2, 3])), 2).is_global_section
    assert not regularity(YExpansion.from_poly(Poly([1, 2, 3])), 1).is_global_section


@pytest.mark.parametrize("k", [1, 2, 3, 4])
def test_dimension_count(k):
    count = dimension_count(k)
    assert count.dimension == 2 * k - 1
    assert count.nontrivial == list(range(2 * k - 1))
    assert count.trivial == [2 * k - 1]


# -- brackets ---------------------------------------------------------------------------

def test_bracket_examples():
    assert bracket(VOL) == 1
    assert bracket(YExpansion.from_terms([(1, 1, 1, 4)])) == Fraction(1, 6)
    assert bracket(YExpansion.from_terms([(1, 2, 1, 4)])) == 0
    with pytest.raises(DivergenceError):
        bracket(YExpansion.from_terms([(1, 0, 0, 1)]))


@given(st.integers(0, 3), st.integers(0, 3), st.integers(0, 2), rationals(20, nonzero=True),
       st.lists(rationals(20), min_size=1, max_size=4))
def test_bracket_vanishes_on_exact_forms(m, j, extra, c, s):
    # h = c zbar^m / y^n with h s z^j decaying fast enough for Stokes
    n = (m + j + len(s)) // 2 + 2 + extra
    h = YExpansion.from_terms([(c, 0, m, n)])
    section = Poly(s) * Poly.monomial(j)
    assert bracket(h.d_zbar().times_section(section)) == 0


@given(st.tuples(rationals(20), rationals(20), rationals(20)),
       st.tuples(rationals(20), rationals(20), rationals(20)))
def test_pairing_weights(v, s):
    expected = s[0] * v[0] / 3 + s[1] * v[1] / 6 + s[2] * v[2] / 3
    assert pairing(DolbeaultClass(*v), Poly(list(s))) == expected


# -- null cone and the six points --------------------------------------------------------

def test_null_cone_examples():
    t = Fraction(3, 7)
    res = null_cone_test(conic_class(t))
    assert res.value == 0
    w0, w1 = res.kernel
    assert w0 / w1 == t
    assert null_cone_test(DolbeaultClass(0, 1, 0)).value == 1
    assert null_cone_test(DolbeaultClass(0, 1, 0)).kernel is None
    assert null_cone_test(DolbeaultClass(1, 0, 1)).value == -4
    with pytest.raises(DomainError):
        null_cone_test(DolbeaultClass(0, 0, 0))


@given(rationals(30))
def test_kernel_section_is_dbar_exact(t):
    # the kernel section kills both polar coefficients of its primitive
    res = null_cone_test(conic_class(t))
    assert polar_coefficients(conic_class(t), res.kernel) == (0, 0)


def test_polar_system_determinant():
    v0, v1, v2 = MPoly.gens(3)
    v = DolbeaultClass(v0, v1, v2)
    rows = [polar_coefficients(v, (1, 0)), polar_coefficients(v, (0, 1))]
    det = rows[0][0] * rows[1][1] - rows[0][1] * rows[1][0]
    assert det * -36 == v1 * v1 - v0 * v2 * 4


def test_six_points_examples():
    pts = six_points(Poly([-1, 0, 0, 0, 0, 0, 1]), 128)
    assert all(abs(p ** 6 - 1) < 1e-30 for p in pts)
    assert len({(round(float(p.real), 9), round(float(p.imag), 9)) for p in pts}) == 6
    p = Poly.from_roots([1, -1, 2, -2, 3, -3])
    assert sorted(round(float(t.real), 9) for t in six_points(p, 128)) == [-3, -2, -1, 1, 2, 3]
    with pytest.raises(DegeneracyError):
        six_points(Poly.from_roots([1, 1, 2, 3, 4, 5]))
    with pytest.raises(DomainError):
        six_points(Poly([1, 1]))


@given(st.lists(rationals(20), min_size=6, max_size=6, unique=True))
def test_six_points_lie_on_null_cone(rts):
    for t in six_points_exact(rts):
        assert null_cone_test(conic_class(t)).value == 0


# -- the singular quadratic form -----------------------------------------------------------

def test_trope_quadratic_form_examples():
    kappa = trope_form_constant()
    assert kappa == Fraction(-1, 1679616)
    assert trope_quadratic_form([5, 1, 7, 2, 3, 1, 9]).det == 0
    assert trope_quadratic_form([5, 1, 7, 1, 3, 1, 9]).det == -3 * kappa
    even = trope_quadratic_form([5, 0, 7, 0, 3, 0, 9])
    assert all(x == 0 for row in even.matrix for x in row)


def test_trope_determinant_symbolic():
    cs = MPoly.gens(7)
    det = trope_quadratic_form(cs).det
    assert det == (cs[3] * cs[3] - cs[1] * cs[5] * 4) * trope_form_constant()
