from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from nckleinian.errors import NotInLSharpM
from nckleinian.exact import Polynomial, RationalFunction, X
from nckleinian.skew import (
    DELTA,
    DELTA_INV,
    IDENTITY,
    ONE,
    TAU,
    GroupElement,
    SkewElement,
    augment,
    is_tau_invariant,
    preserves_even_polys,
    preserves_polys,
    skew_act,
)

from .conftest import group_elements, polynomials, ratfuns, skew_elements


def test_group_law():
    d, t = GroupElement(1, 0), GroupElement(0, 1)
    assert t * d == GroupElement(-1, 1)
    assert d * t == GroupElement(1, 1)
    assert t * d * t == GroupElement(-1, 0)
    assert GroupElement(3, 1).inverse() == GroupElement(3, 1)


@given(group_elements(), group_elements(), group_elements())
def test_group_associative(a, b, c):
    assert (a * b) * c == a * (b * c)
    assert a * a.inverse() == IDENTITY


@given(group_elements(), group_elements(), ratfuns())
def test_group_action_is_action(a, b, f):
    assert (a * b).act(f) == a.act(b.act(f))


def test_basic_commutation():
    x = SkewElement.scalar(X)
    assert DELTA * x == SkewElement.scalar(X - 1) * DELTA
    assert TAU * x == -x * TAU
    assert DELTA * DELTA_INV == ONE
    assert TAU * TAU == ONE


@given(skew_elements(), skew_elements(), skew_elements())
def test_associative(a, b, c):
    assert (a * b) * c == a * (b * c)


@given(skew_elements(), skew_elements(), polynomials(3))
def test_action_is_module(a, b, p):
    assert skew_act(a * b, p) == skew_act(a, skew_act(b, p))


@given(skew_elements())
def test_json_roundtrip(a):
    assert SkewElement.from_json(a.to_json()) == a


@given(skew_elements(), skew_elements())
def test_augmentation_left_linear(y, x):
    y0 = augment(y)  # an element of Q(x)#S2
    assert augment(y0 * x) == y0 * augment(x)


@given(skew_elements())
def test_tau_conjugate(a):
    assert a.tau_conjugate() == TAU * a * TAU


def test_tau_invariance():
    f = RationalFunction(Polynomial([1, 1]))
    sym = SkewElement.group(1, 0, f) + SkewElement.group(-1, 0, f.negate_var())
    assert is_tau_invariant(sym)
    assert not is_tau_invariant(SkewElement.group(1, 0, f))
    with pytest.raises(NotInLSharpM):
        is_tau_invariant(TAU)


def test_preservation_reports_failure():
    assert preserves_even_polys(ONE)
    assert preserves_polys(DELTA)
    bad = preserves_even_polys(SkewElement.scalar(X))
    assert not bad and bad.exponent == 0
    inv = SkewElement.scalar(RationalFunction(1, Polynomial([0, 1])))
    assert preserves_polys(inv).exponent == 0


def test_pretty():
    assert ONE.pretty() == "1"
    assert SkewElement().pretty() == "0"
    assert "tau" in TAU.pretty()
