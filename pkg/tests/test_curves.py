from fractions import Fraction

from hypothesis import given, settings, strategies as st

from conftest import rationals
from spinlag.dolbeault import (
    DolbeaultClass,
    c4_brackets,
    c4_equation,
    c4_value,
    c6_matrix,
    c6_value,
    conic_class,
    fit_curve,
    line_class,
    localized_bracket,
    null_cone_test,
    on_conic,
    pairing,
    sample_classes,
    symbolic_class,
)
from spinlag.errors import ConditioningError
from spinlag.poly_core import MPoly, Poly

ROOTS = [Fraction(1), Fraction(-1), Fraction(2), Fraction(3), Fraction(-2), Fraction(1, 2)]
Q = Poly.from_roots(ROOTS[:2])
R = Poly.from_roots(ROOTS[2:])

classes = st.builds(DolbeaultClass, rationals(20), rationals(20), rationals(20))


def order_at(p: Poly, t) -> int:
    k = 0
    while not p.is_zero() and p(t) == 0:
        p, k = p.derivative(), k + 1
    return k


# -- the quartic -----------------------------------------------------------------------

@given(classes, rationals(10))
@settings(max_examples=15)
def test_quartic_is_homogeneous(v, lam):
    assert c4_value(Q, R, v.scale(lam)) == lam ** 4 * c4_value(Q, R, v)


def test_quartic_symbolic_degree():
    exact = c4_brackets(Q, R, symbolic_class()).quartic
    assert {sum(m) for m in exact.terms} == {4}


def test_quartic_fit_closes_at_degree_four_only():
    fit = c4_equation(Q, R)
    assert fit.exact_fit
    exact = c4_brackets(Q, R, symbolic_class()).quartic
    for mono, c in exact.terms.items():
        assert abs(fit.form.coefficient(mono) - c) < 1e-60 * max(1, abs(c))
    try:
        low = fit_curve(lambda v: c4_value(Q, R, v), 3, attempts=1).exact_fit
    except ConditioningError:
        low = False
    assert not low


def test_line_class_annihilates_q():
    C1, C2 = MPoly.gens(2)
    v = line_class(ROOTS[0], ROOTS[1], C1, C2)
    assert pairing(v, Q) == 0


def test_quartic_on_line_is_minus_square():
    C1, C2 = MPoly.gens(2)
    br = c4_brackets(Q, R, line_class(ROOTS[0], ROOTS[1], C1, C2))
    assert br.q_beta == 0
    assert br.quartic == -(br.qb_beta * br.qb_beta)


@given(rationals(20, nonzero=True), rationals(20, nonzero=True))
@settings(max_examples=15)
def test_localized_bracket_ratio(c1, c2):
    z1, z2 = ROOTS[0], ROOTS[1]
    got = c4_brackets(Q, R, line_class(z1, z2, c1, c2)).qb_beta
    assert got == localized_bracket(R, z1, z2, c1, c2) / 9


def test_localized_bracket_formula():
    r = Poly([1, 1])
    assert localized_bracket(r, 1, 3, 2, 0) == Fraction(2 * 4, 2 * -2)


def test_quartic_on_conic_at_remaining_points():
    # records the observed contact orders at t = -z3 .. -z6
    exact = c4_brackets(Q, R, symbolic_class()).quartic
    conic = on_conic(exact)
    assert conic.degree == 8
    orders = [order_at(conic, -z) for z in ROOTS[2:]]
    assert orders == [0, 0, 0, 0]


# -- the sextic ------------------------------------------------------------------------

def test_sextic_symbolic_degree():
    exact = c6_matrix(Q, R, symbolic_class()).det
    assert exact.total_degree == 6
    assert {sum(m) for m in exact.terms} == {6}


@given(classes, rationals(10))
@settings(max_examples=10)
def test_sextic_is_homogeneous(v, lam):
    assert c6_value(Q, R, v.scale(lam)) == lam ** 6 * c6_value(Q, R, v)


def test_sextic_vanishes_doubly_at_split_points():
    conic = on_conic(c6_matrix(Q, R, symbolic_class()).det)
    assert [order_at(conic, -z) for z in ROOTS[:2]] == [2, 2]
    assert [order_at(conic, -z) for z in ROOTS[2:]] == [0, 0, 0, 0]


def test_c6_solves_are_global():
    m = c6_matrix(Q, R, DolbeaultClass(1, 2, 3))
    assert all(rep.is_global_section for rep in m.reports)


# -- sampling -------------------------------------------------------------------------------

def test_sample_classes_are_deterministic_and_nonzero():
    a, b = sample_classes(10, 3), sample_classes(10, 3)
    assert a == b
    assert all(any(x != 0 for x in v.as_tuple()) for v in a)


def test_conic_classes_pair_to_zero_with_kernel():
    t = Fraction(5, 3)
    v = conic_class(t)
    assert null_cone_test(v).value == 0
    # the square of the kernel section z + t pairs to zero
    assert pairing(v, Poly([t, 1]) * Poly([t, 1])) == 0
