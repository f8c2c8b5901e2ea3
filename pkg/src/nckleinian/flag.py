"""Nil-Hecke elements of type A1^(1) and the flag order generated by q(x)s0, s1, x.

All elements live in Q(x) # (Z x| S2)::

    e  = (1 + tau) / 2
    s1 = (1 - tau) / (2x)
    s0 = (1 - delta^-1 tau) / (2x + 1)
    D  = (q(x) delta^-1 - q(-1/2) tau) / (x + 1/2)
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Optional

from .dq import FreeExpression, phi
from .exact import Polynomial, RationalFunction, X, exact_div
from .gwa import check_degree
from .skew import (
    DELTA,
    DELTA_INV,
    ONE,
    TAU,
    SkewElement,
    preserves_polys,
)

HALF = Fraction(1, 2)

NAMES = ("tau", "delta", "e", "s0", "s1", "x", "D", "a_img", "b_img", "q_s0")
Q_DEPENDENT = {"D", "a_img", "b_img", "q_s0"}


@dataclass(frozen=True)
class NamedElement:
    name: str
    value: SkewElement


def _scalar(f) -> SkewElement:
    return SkewElement.scalar(f)


def _inv_linear(c0, c1) -> SkewElement:
    """1 / (c0 + c1 x) as a scalar."""
    return _scalar(RationalFunction(1, Polynomial([c0, c1])))


def build(name: str, q: Optional[Polynomial] = None) -> NamedElement:
    if name in Q_DEPENDENT:
        if q is None:
            raise ValueError(f"{name} needs a parameter polynomial q")
        check_degree(q)
    if name == "tau":
        value = TAU
    elif name == "delta":
        value = DELTA
    elif name == "e":
        value = _scalar(HALF) * (ONE + TAU)
    elif name == "s1":
        value = _inv_linear(0, 2) * (ONE - TAU)
    elif name == "s0":
        value = _inv_linear(1, 2) * (ONE - DELTA_INV * TAU)
    elif name == "x":
        value = _scalar(X)
    elif name == "D":
        c = q(-HALF)
        value = _inv_linear(HALF, 1) * (_scalar(q) * DELTA_INV - _scalar(c) * TAU)
    elif name == "a_img":
        value = phi(FreeExpression({"v": -HALF, "w": -1}), q)
    elif name == "b_img":
        value = phi(FreeExpression({"v": -1, "w": -1}), q)
    elif name == "q_s0":
        value = _scalar(q) * build("s0").value
    else:
        raise ValueError(f"unknown element {name!r}; expected one of {', '.join(NAMES)}")
    return NamedElement(name, value)


def divided_difference(i: int, p: Polynomial) -> Polynomial:
    """s1(p) = (p(x) - p(-x)) / (2x),  s0(p) = (p(x) - p(-1-x)) / (2x + 1)."""
    if i == 1:
        return exact_div(p - p.negate_var(), Polynomial([0, 2]))
    if i == 0:
        return exact_div(p - p.negate_var().shift(1), Polynomial([1, 2]))
    raise ValueError("divided difference index must be 0 or 1")


@dataclass(frozen=True)
class IdentityResult:
    identity: str
    passed: bool
    residual: Optional[SkewElement] = None
    suite: str = ""

    def to_json(self) -> dict:
        return {
            "suite": self.suite,
            "identity": self.identity,
            "pass": self.passed,
            "residual": None if self.residual is None else self.residual.to_json(),
        }


def _check(suite: str, identity: str, lhs: SkewElement, rhs) -> IdentityResult:
    residual = lhs - rhs
    ok = residual.is_zero()
    return IdentityResult(identity, ok, None if ok else residual, suite)


def _nil_hecke_checks() -> list:
    e = build("e").value
    s0 = build("s0").value
    s1 = build("s1").value
    x = build("x").value
    inv_x = _scalar(RationalFunction(1, Polynomial([0, 1])))
    return [
        ("e + x e (1/x) = 1", lambda: e + x * e * inv_x, ONE),
        ("s1 x + x s1 = 1", lambda: s1 * x + x * s1, ONE),
        ("s1 x - x s1 = tau", lambda: s1 * x - x * s1, TAU),
        ("s1 x = e", lambda: s1 * x, e),
        ("s1 = e s1", lambda: s1, e * s1),
        ("e (1/x) = s1", lambda: e * inv_x, s1),
        ("e^2 = e", lambda: e * e, e),
        ("s0^2 = 0", lambda: s0 * s0, SkewElement()),
        ("s1^2 = 0", lambda: s1 * s1, SkewElement()),
        ("s0 s1 s0 s1 = s1 s0 s1 s0", lambda: s0 * s1 * s0 * s1, s1 * s0 * s1 * s0),
    ]


def _flag_checks(q: Polynomial) -> list:
    e = build("e").value
    s1 = build("s1").value
    x = build("x").value
    D = build("D", q).value
    a = build("a_img", q).value
    b = build("b_img", q).value
    q_s0 = build("q_s0", q).value
    c = q(-HALF)
    qx = _scalar(q)
    q_neg = _scalar(q.negate_var())
    q_dinv = qx * DELTA_INV
    x2 = x * x
    inv_x = _scalar(RationalFunction(1, Polynomial([0, 1])))
    inv_half_x = _inv_linear(HALF, 1)
    x_over = _scalar(RationalFunction(Polynomial([0, 1]), Polynomial([HALF, 1])))
    xp1 = _scalar(Polynomial([1, 1]))
    one_minus_x = _scalar(Polynomial([1, -1]))
    half = _scalar(HALF)

    def decomposition():
        # q(x) delta^-1 = (e + x e 1/x) q(x) delta^-1 (e + x e 1/x), expanded
        t1 = e * half * (q_dinv + q_neg * DELTA) * e
        t2 = x * e * half * (qx * inv_x * DELTA_INV - q_neg * inv_x * DELTA) * e
        t3 = e * half * (qx * xp1 * DELTA_INV + q_neg * one_minus_x * DELTA) * e * inv_x
        t4 = (
            x * e * half
            * (qx * xp1 * inv_x * DELTA_INV - q_neg * one_minus_x * inv_x * DELTA)
            * e * inv_x
        )
        return t1 + t2 + t3 + t4

    D_core = q_dinv - _scalar(c) * TAU
    return [
        ("[a, x^2] = q(x) delta^-1 + q(-x) delta + a", lambda: a * x2 - x2 * a,
         q_dinv + q_neg * DELTA + a),
        ("q(x) delta^-1 = sum of four symmetrized summands", decomposition, q_dinv),
        ("e a e = s1 q(x) delta^-1 e", lambda: e * a * e, s1 * q_dinv * e),
        ("e b e = e D e", lambda: e * b * e, e * D * e),
        ("x/(1/2+x) (q delta^-1 - c tau) = (q delta^-1 - c tau) - (1/2)/(1/2+x) (q delta^-1 - c tau)",
         lambda: x_over * D_core, D_core - half * inv_half_x * D_core),
        ("(q(x)(x+1) delta^-1 + x c tau)/(1/2+x) = 2 q(x) delta^-1 - x/(1/2+x) (q delta^-1 - c tau)",
         lambda: inv_half_x * (qx * xp1 * DELTA_INV + x * _scalar(c) * TAU),
         _scalar(2) * q_dinv - x_over * D_core),
        ("[D, x^2] = 2 q(x) delta^-1", lambda: D * x2 - x2 * D, _scalar(2) * q_dinv),
        ("q(x) s0 = -(1/2) D tau - (q(-1/2) - q(x))/(2x+1)", lambda: q_s0,
         -half * D * TAU - _scalar(RationalFunction(Polynomial([c]) - q, Polynomial([1, 2])))),
    ]


SUITES = ("nilhecke", "flag")


def verify_identities(q: Optional[Polynomial], suites=SUITES) -> list:
    """Evaluate each identity as LHS - RHS; failures carry their residual.

    The nil-Hecke suite does not involve q, so q may be None when only that
    suite is requested.
    """
    if "flag" in suites:
        if q is None:
            raise ValueError("the flag suite needs a parameter polynomial q")
        check_degree(q)
    results = []
    if "nilhecke" in suites:
        for name, lhs, rhs in _nil_hecke_checks():
            results.append(_check("nilhecke", name, lhs(), rhs))
    if "flag" in suites:
        for name, lhs, rhs in _flag_checks(q):
            results.append(_check("flag", name, lhs(), rhs))
    return results


def generator_preservation(q: Polynomial, max_deg: int = 40) -> dict:
    """Flag-order generators must map Q[x] into itself."""
    return {
        name: preserves_polys(build(name, q).value, max_deg)
        for name in ("q_s0", "s1", "x")
    }
