from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

import oracles
from splitkoszul import builders, hilbert
from splitkoszul.poly import InexactDivision, IntPolynomial


# polynomials

def test_render():
    assert str(IntPolynomial([1, -10, 8, -1, -1])) == "1 - 10z + 8z^2 - z^3 - z^4"
    assert str(IntPolynomial([])) == "0"
    assert str(IntPolynomial([0, 1])) == "z"
    assert str(IntPolynomial([-2, 0, 3])) == "-2 + 3z^2"


def test_poly_arithmetic():
    p, q = IntPolynomial([1, 2]), IntPolynomial([1, -1])
    assert p * q == [1, 1, -2]
    assert p - p == 0 and not (p - p)
    assert p.negate_variable() == [1, -2]
    assert IntPolynomial([1, 0, 0, -1]).div_one_minus_z() == [1, 1, 1]
    with pytest.raises(InexactDivision):
        IntPolynomial([1, 1]).div_one_minus_z()
    assert IntPolynomial([3, 0, 0]).degree == 0


@given(st.lists(st.integers(-50, 50), max_size=8), st.lists(st.integers(-50, 50), max_size=8))
def test_poly_multiplication_evaluates(a, b):
    p, q = IntPolynomial(a), IntPolynomial(b)
    for z in (-2, 0, 1, 3):
        assert (p * q)(z) == p(z) * q(z)
        assert (p + q)(z) == p(z) + q(z)


@given(st.lists(st.integers(-9, 9), min_size=1, max_size=6))
def test_div_one_minus_z_roundtrip(a):
    p = IntPolynomial(a)
    assert (p * IntPolynomial([1, -1])).div_one_minus_z() == p


# chain sums

@settings(max_examples=40, deadline=None)
@given(oracles.layered_graphs(max_vertices=16, max_height=4))
def test_chain_sums_match_enumeration(g):
    assert hilbert.chain_sums(g) == oracles.brute_chain_sums(g)


@settings(max_examples=60, deadline=None)
@given(oracles.layered_graphs())
def test_two_inverse_formulas_agree(g):
    assert hilbert.hilbert_inverse(g) == hilbert.grw_inverse(g)


@pytest.mark.parametrize("name", list(builders.surface_fixtures()))
def test_surface_chain_sums_in_terms_of_counts(name):
    s = builders.surface_fixtures()[name]
    g = builders.build_surface(s)
    # the top vertex M sits on level 4; vertices, edges, faces on 1, 2, 3
    expected = {(4, 4): -1, (4, 3): s.f, (4, 2): -s.h, (4, 1): s.g,
                (3, 3): -s.f, (3, 2): 2 * s.h, (3, 1): -2 * s.h,
                (2, 2): -s.h, (2, 1): 2 * s.h, (1, 1): -s.g}
    assert hilbert.chain_sums(g) == expected


def test_chain_on_a_chain():
    # every vertex covers a single vertex, so there are no relations: free on 3 generators
    from test_graph_core import chain_graph
    g = chain_graph(3)
    assert hilbert.hilbert_inverse(g) == [1, -3]


# series

def test_expand_cassidy_shelton():
    inv = hilbert.hilbert_inverse(builders.build_cassidy_shelton())
    e = hilbert.expand_series(inv, 5)
    assert e.coeffs == (1, 10, 92, 841, 7685, 70224)
    assert e.nonnegative
    # independent check by multiplying back
    prod = inv * IntPolynomial(e.coeffs)
    assert [prod[i] for i in range(6)] == [1, 0, 0, 0, 0, 0]


def test_expand_reports_first_negative():
    e = hilbert.expand_series([1, 1], 4)
    assert e.coeffs == (1, -1, 1, -1, 1)
    assert e.first_negative == 1
    with pytest.raises(hilbert.NonUnitConstant):
        hilbert.expand_series([2, 1], 3)


@given(st.lists(st.integers(-20, 20), min_size=1, max_size=5), st.integers(0, 12))
def test_expand_inverts(tail, order):
    p = IntPolynomial([1] + tail)
    e = hilbert.expand_series(p, order)
    prod = p * IntPolynomial(e.coeffs)
    assert [prod[i] for i in range(order + 1)] == [1] + [0] * order
    ref = oracles.series_product_residual(p, IntPolynomial([1]), order)
    assert [Fraction(c) for c in e.coeffs] == [r + (1 if i == 0 else 0) for i, r in enumerate(ref)]


# closed forms and Euler characteristic

@pytest.mark.parametrize("name", list(builders.surface_fixtures()))
def test_inverse_matches_closed_form(name):
    s = builders.surface_fixtures()[name]
    inv, _ = hilbert.surface_closed_forms(s.g, s.h, s.f)
    assert hilbert.hilbert_inverse(builders.build_surface(s)) == inv


@pytest.mark.parametrize("name", list(builders.surface_fixtures()))
def test_euler_report(name):
    s = builders.surface_fixtures()[name]
    rep = hilbert.euler_mu_report(builders.build_surface(s))
    assert rep.chi == s.chi
    assert rep.mu == s.chi - 1 == rep.top_coeff
    assert rep.consistent


def test_euler_report_needs_top():
    g = builders.build_simplicial(builders.SimplicialComplex.simplex_boundary(3))
    with pytest.raises(hilbert.NoUniqueTop):
        hilbert.euler_mu_report(g)
