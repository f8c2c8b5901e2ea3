from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from nckleinian.dq import (
    U,
    V,
    W,
    FreeExpression,
    PbwForm,
    _Rewriter,
    harish_chandra_identities,
    params_from_q,
    parse_expression,
    pbw_normal_form,
    phi,
    relations,
    star_free,
    transported_star,
)
from nckleinian.errors import DegreeTooSmall, ExpressionParseError, NonTermination
from nckleinian.exact import Polynomial, RationalFunction, X
from nckleinian.skew import SkewElement, is_tau_invariant

from .conftest import BATTERY, words

T4 = Polynomial([0, 0, 0, 0, 1])
PARAMS = params_from_q(T4)


@st.composite
def expressions(draw, max_terms=3):
    terms = draw(st.dictionaries(st.text(alphabet="uvw", max_size=4),
                                 st.fractions(-3, 3, max_denominator=4), max_size=max_terms))
    return FreeExpression(terms)


def test_params_for_t4():
    assert PARAMS.rho == Fraction(1, 8)
    lhs = PARAMS.p * Polynomial([1, 2]) ** 2
    rhs = Polynomial([Fraction(1, 64)]) - (T4 * Polynomial([1, 4, 6, 4, 1])).scale(4)
    assert lhs == rhs
    assert PARAMS.p0.compose_square() + Polynomial([0, 1]) * PARAMS.p1.compose_square() == PARAMS.p
    assert PARAMS.n == 4


def test_degree_gate():
    with pytest.raises(DegreeTooSmall):
        params_from_q(Polynomial([1, 0, 1]))


def test_parse_expression():
    assert parse_expression("u") == U
    assert parse_expression("3/2*u*v - w") == FreeExpression({"uv": Fraction(3, 2), "w": -1})
    assert parse_expression("-u^2 + 1") == FreeExpression({"uu": -1, "": 1})
    assert parse_expression("u*v - v*u - 2*w - v") == U * V - V * U - 2 * W - V
    for bad in ["u*", "", "x", "u^v", "u v", "(u)"]:
        with pytest.raises(ExpressionParseError):
            parse_expression(bad)


def test_phi_of_generators():
    assert phi(U, T4) == SkewElement.scalar(X * X)
    for g in (U, V, W):
        assert is_tau_invariant(phi(g, T4))


def test_relations_vanish(q):
    params = params_from_q(q)
    for name, expr in {**relations(params), **harish_chandra_identities(params)}.items():
        assert phi(expr, q).is_zero(), name


def test_phi_w_delta_coefficient():
    # phi(w) = psi((a - b)h) - rho/(1-4x^2); the delta part is f(x)(x-1)
    f = RationalFunction(Polynomial([0, 0, 0, 1]), Polynomial([-1, 2]))
    assert phi(W, T4).coeff(1) == f * (X - 1)


def test_normal_form_small_cases():
    assert pbw_normal_form(V * U, PARAMS) == pbw_normal_form(U * V - 2 * W - V, PARAMS)
    nf = pbw_normal_form(W * W, PARAMS)
    assert nf.max_w_exponent() <= 1
    assert pbw_normal_form(FreeExpression(), PARAMS) == PbwForm({})


@given(words)
def test_pbw_consistency(word):
    expr = FreeExpression.word(word)
    nf = pbw_normal_form(expr, PARAMS)
    assert nf.max_w_exponent() <= 1
    assert phi(nf.to_free(), T4) == phi(expr, T4)


@given(expressions())
def test_normal_form_is_idempotent(x):
    nf = pbw_normal_form(x, PARAMS)
    assert pbw_normal_form(nf.to_free(), PARAMS) == nf


def test_rewriter_circuit_breaker():
    with pytest.raises(NonTermination):
        _Rewriter(PARAMS, max_steps=3).reduce("wwwwww")


@given(expressions())
def test_star_involution(x):
    assert star_free(star_free(x)) == x


@given(expressions(max_terms=2))
def test_star_transport(x):
    assert phi(star_free(x), T4) == transported_star(x, T4)


@given(expressions(max_terms=2), expressions(max_terms=2))
def test_star_antimultiplicative(x, y):
    assert star_free(x * y) == star_free(y) * star_free(x)


def test_expression_text_roundtrip():
    x = parse_expression("3/2*u*v - w*u + u^2 - 7")
    assert parse_expression(str(x)) == x
