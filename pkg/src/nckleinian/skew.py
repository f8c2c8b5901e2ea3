"""The skew group algebra Q(x) # (Z x| S2).

An element is a finite sum of terms f(x) * delta^k * tau^eps, stored as a map
from :class:`GroupElement` to :class:`RationalFunction`.  The group acts on
Q(x) by ``delta(x) = x - 1`` and ``tau(x) = -x``, so ``delta^k tau^eps`` sends
``f(x)`` to ``f((-1)^eps (x - k))``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Optional

from .errors import NotInLSharpM
from .exact import (
    RF_ONE,
    RF_ZERO,
    Polynomial,
    RationalFunction,
    format_poly,
    parse_poly,
)


@dataclass(frozen=True, order=True)
class GroupElement:
    """delta^k tau^eps in the infinite dihedral group."""

    k: int = 0
    eps: int = 0

    def __mul__(self, other: "GroupElement") -> "GroupElement":
        k = self.k - other.k if self.eps else self.k + other.k
        return GroupElement(k, self.eps ^ other.eps)

    def inverse(self) -> "GroupElement":
        # (delta^k tau)^-1 = delta^k tau
        return self if self.eps else GroupElement(-self.k, 0)

    def act(self, f: RationalFunction) -> RationalFunction:
        if self.eps:
            f = f.negate_var()
        return f.shift(-self.k)

    def __str__(self) -> str:
        parts = []
        if self.k:
            parts.append("delta" if self.k == 1 else f"delta^{self.k}")
        if self.eps:
            parts.append("tau")
        return "*".join(parts) or "1"


IDENTITY = GroupElement(0, 0)


def _accumulate(pairs: Iterable) -> dict:
    """Sum coefficients per group element, dropping zeros."""
    buckets: dict = {}
    for g, f in pairs:
        if f:
            buckets.setdefault(g, []).append(f)
    out = {}
    for g, fs in buckets.items():
        total = fs[0]
        for f in fs[1:]:
            total = total + f
        if total:
            out[g] = total
    return out


def _to_ratfun(value) -> RationalFunction:
    if isinstance(value, RationalFunction):
        return value
    return RationalFunction(value)


class SkewElement:
    """Finite sum  sum_g f_g(x) g  with g in Z x| S2 and f_g in Q(x)."""

    __slots__ = ("terms", "_hash")

    def __init__(self, terms: Optional[Mapping] = None):
        clean = {}
        for g, f in (terms or {}).items():
            f = _to_ratfun(f)
            if f:
                clean[g] = f
        self.terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict) -> "SkewElement":
        e = object.__new__(cls)
        e.terms = terms
        e._hash = None
        return e

    @classmethod
    def scalar(cls, f) -> "SkewElement":
        f = _to_ratfun(f)
        return cls._raw({IDENTITY: f} if f else {})

    @classmethod
    def group(cls, k: int = 0, eps: int = 0, coeff=None) -> "SkewElement":
        f = RF_ONE if coeff is None else _to_ratfun(coeff)
        return cls._raw({GroupElement(k, eps): f} if f else {})

    # -- comparisons ------------------------------------------------------
    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        if not isinstance(other, SkewElement):
            if isinstance(other, (int, Fraction, Polynomial, RationalFunction)):
                other = SkewElement.scalar(other)
            else:
                return NotImplemented
        return self.terms == other.terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    def coeff(self, k: int = 0, eps: int = 0) -> RationalFunction:
        return self.terms.get(GroupElement(k, eps), RF_ZERO)

    def __repr__(self) -> str:
        return f"SkewElement({self.pretty()})"

    def pretty(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for g in sorted(self.terms):
            f = self.terms[g]
            if g == IDENTITY:
                parts.append(f.pretty())
            else:
                parts.append(f"({f.pretty()})*{g}")
        return " + ".join(parts)

    __str__ = pretty

    # -- ring operations --------------------------------------------------
    def __neg__(self) -> "SkewElement":
        return SkewElement._raw({g: -f for g, f in self.terms.items()})

    def __add__(self, other) -> "SkewElement":
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return SkewElement._raw(
            _accumulate(list(self.terms.items()) + list(other.terms.items()))
        )

    __radd__ = __add__

    def __sub__(self, other) -> "SkewElement":
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "SkewElement":
        return (-self) + other

    def __mul__(self, other) -> "SkewElement":
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return skew_mul(self, other)

    def __rmul__(self, other) -> "SkewElement":
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return skew_mul(other, self)

    def __pow__(self, n: int) -> "SkewElement":
        result = ONE
        for _ in range(n):
            result = result * self
        return result

    def tau_conjugate(self) -> "SkewElement":
        """tau * X * tau."""
        tau = GroupElement(0, 1)
        return SkewElement._raw(
            {tau * g * tau: tau.act(f) for g, f in self.terms.items()}
        )

    def act(self, p) -> RationalFunction:
        return skew_act(self, p)

    # -- serialization ----------------------------------------------------
    def to_json(self) -> dict:
        return {
            "terms": [
                {
                    "k": g.k,
                    "eps": g.eps,
                    "num": format_poly(self.terms[g].num),
                    "den": format_poly(self.terms[g].den),
                }
                for g in sorted(self.terms)
            ]
        }

    @classmethod
    def from_json(cls, data: dict) -> "SkewElement":
        pairs = []
        for t in data["terms"]:
            eps = int(t["eps"])
            if eps not in (0, 1):
                raise ValueError(f"eps must be 0 or 1, got {eps}")
            pairs.append(
                (
                    GroupElement(int(t["k"]), eps),
                    RationalFunction(parse_poly(t["num"]), parse_poly(t["den"])),
                )
            )
        return cls._raw(_accumulate(pairs))


def _coerce(value) -> Optional[SkewElement]:
    if isinstance(value, SkewElement):
        return value
    if isinstance(value, (int, Fraction, Polynomial, RationalFunction)):
        return SkewElement.scalar(value)
    return None


ZERO = SkewElement._raw({})
ONE = SkewElement.scalar(RF_ONE)
DELTA = SkewElement.group(1, 0)
DELTA_INV = SkewElement.group(-1, 0)
TAU = SkewElement.group(0, 1)


def skew_mul(X: SkewElement, Y: SkewElement) -> SkewElement:
    """(f g)(f' g') = f g(f') gg'."""
    if not X.terms or not Y.terms:
        return ZERO
    pairs = []
    acted: dict = {}
    for g1, f1 in X.terms.items():
        for g2, f2 in Y.terms.items():
            key = (g1.k, g1.eps, g2)
            moved = acted.get(key)
            if moved is None:
                moved = acted[key] = g1.act(f2)
            pairs.append((g1 * g2, f1 * moved))
    return SkewElement._raw(_accumulate(pairs))


def skew_act(X: SkewElement, p) -> RationalFunction:
    """Natural action on Q(x): sum_g f_g(x) * g(p)."""
    p = _to_ratfun(p)
    total = RF_ZERO
    for g, f in X.terms.items():
        total = total + f * g.act(p)
    return total


def is_tau_invariant(X: SkewElement) -> bool:
    """For X in Q(x)#Z: True iff tau X tau = X, i.e. f_{-k}(x) = f_k(-x)."""
    if any(g.eps for g in X.terms):
        raise NotInLSharpM("element has a tau component")
    for g, f in X.terms.items():
        if X.coeff(-g.k) != f.negate_var():
            return False
    return True


def augment(X: SkewElement) -> SkewElement:
    """Project to Q(x)#S2 by sending every delta^k to 1.

    Since f delta^k tau = f tau delta^{-k}, each term f delta^k tau^eps lands
    on f tau^eps.
    """
    return SkewElement._raw(
        _accumulate((GroupElement(0, g.eps), f) for g, f in X.terms.items())
    )


@dataclass(frozen=True)
class Preservation:
    ok: bool
    exponent: Optional[int] = None
    image: Optional[RationalFunction] = None

    def __bool__(self) -> bool:
        return self.ok


def preserves_even_polys(X: SkewElement, max_deg: int = 40) -> Preservation:
    """Check X.x^(2m) lies in Q[x^2] for m = 0..max_deg.

    Bounded necessary condition; on failure the offending exponent 2m and its
    image are returned.
    """
    if max_deg < 0:
        raise ValueError("max_deg must be non-negative")
    for m in range(max_deg + 1):
        image = skew_act(X, Polynomial.monomial(2 * m))
        if not image.is_polynomial() or not image.num.is_even():
            return Preservation(False, 2 * m, image)
    return Preservation(True)


def preserves_polys(X: SkewElement, max_deg: int = 40) -> Preservation:
    """Check X.x^m lies in Q[x] for m = 0..max_deg."""
    if max_deg < 0:
        raise ValueError("max_deg must be non-negative")
    for m in range(max_deg + 1):
        image = skew_act(X, Polynomial.monomial(m))
        if not image.is_polynomial():
            return Preservation(False, m, image)
    return Preservation(True)
