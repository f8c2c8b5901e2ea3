from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from nckleinian.errors import DegreeTooSmall
from nckleinian.exact import Polynomial, RationalFunction, X
from nckleinian.gwa import (
    GwaElement,
    beta,
    check_degree,
    gwa_params_for,
    gwa_star,
    psi,
    psi_factor,
    rho_of,
    s_from_q,
    sigma,
)

from .conftest import ratfuns

T4 = Polynomial([0, 0, 0, 0, 1])
P = gwa_params_for(T4)


@st.composite
def gwa_elements(draw):
    coeffs = draw(st.dictionaries(st.integers(-2, 2), ratfuns(), max_size=3))
    return GwaElement(coeffs, P)


def test_degree_gate():
    check_degree(T4)
    with pytest.raises(DegreeTooSmall):
        check_degree(Polynomial([0, 0, 0, 1]))
    with pytest.raises(DegreeTooSmall):
        gwa_params_for(Polynomial([1, 1]))


def test_s_for_t4():
    t = Polynomial([0, 1])
    expected = RationalFunction(t ** 3 * Polynomial([1, 1]) ** 3, Polynomial([1, 2]) ** 2)
    assert s_from_q(T4) == expected


def test_rho_and_psi_factor():
    assert rho_of(T4) == Fraction(1, 8)
    # f(x) = q(-x)/(2(-x)(1/2-x)) = x^3/(2x-1) for q = t^4
    assert psi_factor(T4) == RationalFunction(Polynomial([0, 0, 0, 1]), Polynomial([-1, 2]))


def test_defining_relations(q):
    params = gwa_params_for(q)
    a, b, h = GwaElement.a(params), GwaElement.b(params), GwaElement.h(params)
    assert b * a == GwaElement.scalar(params.s, params)
    assert a * b == GwaElement.scalar(sigma(params.s), params)
    assert a * h == GwaElement.scalar(X - 1, params) * a
    assert b * h == GwaElement.scalar(X + 1, params) * b


def test_psi_ba_is_s(q):
    params = gwa_params_for(q)
    a, b = GwaElement.a(params), GwaElement.b(params)
    assert psi(b, q) * psi(a, q) == params.s


@given(gwa_elements(), gwa_elements(), gwa_elements())
def test_associative(x, y, z):
    assert (x * y) * z == x * (y * z)


@given(gwa_elements(), gwa_elements())
def test_psi_is_homomorphism(x, y):
    assert psi(x * y, T4) == psi(x, T4) * psi(y, T4)


@given(gwa_elements(), gwa_elements())
def test_star_involutive_antiautomorphism(x, y):
    assert gwa_star(gwa_star(x)) == x
    assert gwa_star(x * y) == gwa_star(y) * gwa_star(x)


@given(gwa_elements())
def test_json_roundtrip(x):
    assert GwaElement.from_json(x.to_json(), P) == x


def test_beta_star_images(q):
    bu, bv, bw = (beta(g, q) for g in "uvw")
    assert gwa_star(bu) == bu
    assert gwa_star(bv) == bv
    assert gwa_star(bw) == -bw - bv


def test_beta_unknown_generator():
    with pytest.raises(ValueError):
        beta("z", T4)
