from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from nckleinian.errors import DivisionByZero, NonExactDivision, PoleEvaluation, ZeroPolynomial
from nckleinian.exact import (
    Polynomial,
    RationalFunction,
    X,
    even_odd_split,
    exact_div,
    format_poly,
    parse_poly,
    parse_rational,
    poly_gcd,
    poly_shift,
    rational_roots,
    ratfun_eval,
)

from .conftest import fractions, nonzero_polynomials, polynomials, ratfuns


def test_text_format():
    assert format_poly(Polynomial([0, 0, 0, 0, 1])) == "0,0,0,0,1"
    assert format_poly(Polynomial([])) == "0"
    assert parse_poly("1/2,-3") == Polynomial([Fraction(1, 2), -3])
    assert parse_poly("0,0,1,0,0") == Polynomial([0, 0, 1])
    with pytest.raises(ValueError):
        parse_poly("1,x")
    with pytest.raises(ValueError):
        parse_rational("1/0")


def test_shift_and_negation():
    t4 = Polynomial([0, 0, 0, 0, 1])
    assert poly_shift(t4, 1) == Polynomial([1, 4, 6, 4, 1])
    assert Polynomial([1, 2, 3]).negate_var() == Polynomial([1, -2, 3])
    # q(-t-1) for q = t^4 is (t+1)^4
    assert t4.negate_var().shift(1) == Polynomial([1, 4, 6, 4, 1])


def test_even_odd_split():
    p0, p1 = even_odd_split(Polynomial([1, 2, 3, 4, 5]))
    assert p0 == Polynomial([1, 3, 5])
    assert p1 == Polynomial([2, 4])


def test_exact_div():
    assert exact_div(Polynomial([-1, 0, 1]), Polynomial([1, 1])) == Polynomial([-1, 1])
    with pytest.raises(NonExactDivision):
        exact_div(Polynomial([1, 0, 1]), Polynomial([1, 1]))
    with pytest.raises(DivisionByZero):
        divmod(Polynomial([1]), Polynomial([]))


def test_rational_roots():
    assert rational_roots(Polynomial([4, 0, -5, 0, 1])) == {1, -1, 2, -2}
    assert rational_roots(Polynomial([0, 0, 0, 0, 1])) == {0}
    assert rational_roots(Polynomial([-1, 3])) == {Fraction(1, 3)}
    assert rational_roots(Polynomial([2, 0, 1])) == set()
    with pytest.raises(ZeroPolynomial):
        rational_roots(Polynomial([]))


def test_ratfun_canonical_form():
    f = RationalFunction(Polynomial([-1, 0, 1]), Polynomial([2, 2]))
    assert f.num == Polynomial([Fraction(-1, 2), Fraction(1, 2)])
    assert f.den == Polynomial([1])
    with pytest.raises(DivisionByZero):
        RationalFunction(1, 0)


def test_pole_evaluation():
    f = RationalFunction(1, Polynomial([0, 1]))
    with pytest.raises(PoleEvaluation):
        ratfun_eval(f, 0)
    # removable singularities vanish in canonical form
    g = RationalFunction(Polynomial([0, 1]), Polynomial([0, 1]))
    assert g(0) == 1


@given(polynomials(), polynomials(), polynomials())
def test_poly_ring_axioms(a, b, c):
    assert (a + b) * c == a * c + b * c
    assert (a * b) * c == a * (b * c)
    assert a * b == b * a


@given(polynomials(), nonzero_polynomials())
def test_divmod(a, b):
    quo, rem = divmod(a, b)
    assert quo * b + rem == a
    assert not rem or rem.degree < b.degree


@given(polynomials(), fractions, fractions)
def test_shift_evaluation(p, c, a):
    assert poly_shift(p, c)(a) == p(a + c)
    assert p.negate_var()(a) == p(-a)


@given(nonzero_polynomials(), nonzero_polynomials())
def test_gcd_divides(a, b):
    g = poly_gcd(a, b)
    assert g.leading == 1
    assert not (a % g) and not (b % g)


@given(ratfuns(), ratfuns(), ratfuns())
def test_field_axioms(f, g, h):
    assert (f + g) * h == f * h + g * h
    assert f - f == RationalFunction(0)
    if f:
        assert f * f.inverse() == RationalFunction(1)


@given(ratfuns())
def test_canonical_is_reduced(f):
    assert f.den.leading == 1
    assert poly_gcd(f.num, f.den).degree <= 0 if f.num else f.den == Polynomial([1])


@given(ratfuns(), st.integers(-3, 3))
def test_ratfun_shift_roundtrip(f, k):
    assert f.shift(k).shift(-k) == f
    assert f.negate_var().negate_var() == f


@given(polynomials())
def test_format_roundtrip(p):
    assert parse_poly(format_poly(p)) == p


def test_derivative():
    f = RationalFunction(1, Polynomial([0, 1]))
    assert f.derivative() == RationalFunction(-1, Polynomial([0, 0, 1]))
    assert (X * X).derivative() == X * 2
