from fractions import Fraction

import pytest
import sympy as sp
from hypothesis import given, strategies as st

from conftest import rationals
from spinlag.errors import DomainError
from spinlag.exotic_triple import (
    LEGS,
    SliceData,
    TripleTensor,
    from_slice_data,
    hyperdeterminant,
    normal_form,
    phi,
    recombine,
    slice,
    trace_phi_squared,
    verify_trace_equality,
)
from spinlag.poly_core import MPoly

tensors = st.builds(TripleTensor.from_flat, st.lists(rationals(30), min_size=8, max_size=8),
                    st.tuples(*[rationals(10, nonzero=True)] * 3))
pairs = st.tuples(rationals(20), rationals(20))


@st.composite
def sl2_matrices(draw):
    a = draw(rationals(10, nonzero=True))
    b, c = draw(rationals(10)), draw(rationals(10))
    return ((a, b), (c, (1 + b * c) / a))


GHZ = TripleTensor.from_flat([1, 0, 0, 0, 0, 0, 0, 1])
ZERO = TripleTensor.from_flat([0] * 8)


# -- slicing -----------------------------------------------------------------------

def test_slice_examples():
    s = slice(GHZ, 1)
    assert s.e1 == ((1, 0), (0, 0)) and s.e2 == ((0, 0), (0, 1))
    z = slice(ZERO, 2)
    assert z.e1 == z.e2 == ((0, 0), (0, 0))
    with pytest.raises(DomainError):
        slice(GHZ, 4)


@given(tensors, st.sampled_from(LEGS))
def test_slice_round_trip(t, leg):
    assert recombine(slice(t, leg)) == t


def test_tensor_validation():
    with pytest.raises(DomainError):
        TripleTensor.from_flat([1] * 8, (1, 0, 1))
    with pytest.raises(DomainError):
        TripleTensor.from_flat([1] * 7)


# -- phi and the trace --------------------------------------------------------------

def test_phi_examples():
    mu = phi(GHZ, 1)
    # pure e1 = v1 w1 and e2 = v2 w2 have zero self-pairing; (e1,e2) = 1
    assert (mu.b0, mu.b1, mu.b2) == (0, 2, 0)
    assert phi(ZERO, 3).is_zero()
    pv, pw = Fraction(3), Fraction(-2, 5)
    ident = ((1, 0), (0, 1))
    t = TripleTensor.from_slices(ident, ident, (1, pv, pw))
    mu = phi(t, 1)
    # (e1,e1) = (e1,e2) = 2 <v1,v2><w1,w2>, with b1 = 2 (e1,e2)
    assert mu.b0 == mu.b2 == 2 * pv * pw
    assert mu.b1 == 4 * pv * pw


@given(rationals(20), rationals(20), rationals(20), rationals(20))
def test_trace_matches_adapted_formula(a, b, c, d):
    t = from_slice_data(a, b, c, d)
    assert trace_phi_squared(t, 1) == 2 * (4 * (a * d - b * c) - (a + d) ** 2)
    assert SliceData(a, b, c, d).trace_formula() == trace_phi_squared(t, 1)


def test_ghz_value_on_every_leg():
    t = from_slice_data(0, 0, 0, 1)
    assert [trace_phi_squared(t, leg) for leg in LEGS] == [-2, -2, -2]
    assert trace_phi_squared(ZERO, 2) == 0


@given(tensors)
def test_traces_agree(t):
    report = verify_trace_equality(t)
    assert report.equal and len(set(report.traces)) == 1


@given(pairs, pairs, pairs, st.tuples(*[rationals(10, nonzero=True)] * 3))
def test_decomposable_tensors_have_zero_trace(u, v, w, pairings):
    t = TripleTensor.decomposable(u, v, w, pairings)
    assert verify_trace_equality(t).common_value == 0


@given(tensors, sl2_matrices(), sl2_matrices(), sl2_matrices())
def test_trace_invariant_under_independent_sl2(t, g1, g2, g3):
    moved = t.transform(1, g1).transform(2, g2).transform(3, g3)
    for leg in LEGS:
        assert trace_phi_squared(moved, leg) == trace_phi_squared(t, leg)


@given(tensors, rationals(20))
def test_trace_scales_quartically(t, lam):
    assert trace_phi_squared(t.scale(lam), 2) == lam ** 4 * trace_phi_squared(t, 2)


def test_trace_equality_symbolic():
    g = MPoly.gens(11)
    t = TripleTensor.from_flat(g[:8], tuple(g[8:]))
    traces = [trace_phi_squared(t, leg) for leg in LEGS]
    assert traces[0] == traces[1] == traces[2]
    entry_degrees = {sum(m[:8]) for m in traces[0].terms}
    assert entry_degrees == {4}


def test_trace_equality_against_sympy():
    # independent oracle: build the three traces from scratch in sympy
    x = sp.symbols("x0:8")
    p = sp.symbols("p0:3")

    def entry(i, j, k):
        return x[4 * i + 2 * j + k]

    def bracket(E, F, pa, pb):
        return pa * pb * (E[0][0] * F[1][1] - E[0][1] * F[1][0] - E[1][0] * F[0][1] + E[1][1] * F[0][0])

    def trace(leg):
        mats = []
        for s in range(2):
            m = [[None, None], [None, None]]
            for a in range(2):
                for b in range(2):
                    idx = [a, b]
                    idx.insert(leg, s)
                    m[a][b] = entry(*idx)
            mats.append(m)
        pa, pb = [p[n] for n in range(3) if n != leg]
        s11 = bracket(mats[0], mats[0], pa, pb)
        s12 = bracket(mats[0], mats[1], pa, pb)
        s22 = bracket(mats[1], mats[1], pa, pb)
        return sp.expand(2 * p[leg] ** 2 * (s11 * s22 - s12 ** 2))

    t0, t1, t2 = trace(0), trace(1), trace(2)
    assert sp.expand(t0 - t1) == 0 and sp.expand(t1 - t2) == 0
    ours = trace_phi_squared(TripleTensor.from_flat(MPoly.gens(11)[:8], tuple(MPoly.gens(11)[8:])), 1)
    assert len(ours.terms) == len(sp.Poly(t0, *x, *p).terms())


# -- normal form ---------------------------------------------------------------------

@given(tensors, st.sampled_from(LEGS))
def test_normal_form_reproduces_trace(t, leg):
    nf = normal_form(t, leg)
    if nf.degenerate:
        return
    assert nf.data.trace_formula() == trace_phi_squared(t, leg)


def test_normal_form_degenerate_and_identity():
    assert normal_form(GHZ, 1).degenerate
    nf = normal_form(from_slice_data(1, 2, 3, 4), 1)
    assert not nf.degenerate
    assert (nf.data.a, nf.data.b, nf.data.c, nf.data.d) == (1, 2, 3, 4)


def test_hyperdeterminant_is_informational():
    report = verify_trace_equality(from_slice_data(0, 0, 0, 1))
    assert report.hyperdeterminant == hyperdeterminant(from_slice_data(0, 0, 0, 1))
    assert report.notes
