"""The generalized Weyl algebra Q(h)(sigma, s) with sigma(h) = h - 1.

Elements are written  sum_n f_n(h) x_n  with coefficients on the left and
x_n = a^n (n > 0), 1 (n = 0), b^|n| (n < 0).  The defining relations are

    ba = s(h),  ab = s(h - 1),  a h = (h - 1) a,  b h = (h + 1) b.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Mapping, Optional

from .errors import DegreeTooSmall
from .exact import (
    RF_ONE,
    RF_ZERO,
    Polynomial,
    RationalFunction,
    X,
    format_poly,
    parse_poly,
)
from .skew import GroupElement, SkewElement

MIN_DEGREE = 4


def check_degree(q: Polynomial) -> None:
    if q.degree < MIN_DEGREE:
        raise DegreeTooSmall(f"deg q = {q.degree}, need at least {MIN_DEGREE}")


def sigma(f: RationalFunction, n: int = 1) -> RationalFunction:
    """sigma^n(f)(h) = f(h - n)."""
    return f.shift(-n)


@dataclass(frozen=True)
class GwaParams:
    s: RationalFunction

    def __post_init__(self):
        if not self.s:
            raise ValueError("s must be nonzero")


def s_from_q(q: Polynomial) -> RationalFunction:
    """s(t) = q(t) q(-t-1) / (t (t+1) (1+2t)^2)."""
    qm = q.negate_var().shift(1)  # q(-t-1)
    t = Polynomial([0, 1])
    den = t * Polynomial([1, 1]) * Polynomial([1, 2]) ** 2
    return RationalFunction(q * qm, den)


def _to_ratfun(value) -> RationalFunction:
    if isinstance(value, RationalFunction):
        return value
    return RationalFunction(value)


class GwaElement:
    __slots__ = ("coeffs", "params")

    def __init__(self, coeffs: Optional[Mapping[int, object]], params: GwaParams):
        clean = {}
        for n, f in (coeffs or {}).items():
            f = _to_ratfun(f)
            if f:
                clean[int(n)] = f
        self.coeffs = clean
        self.params = params

    @classmethod
    def _raw(cls, coeffs: dict, params: GwaParams) -> "GwaElement":
        e = object.__new__(cls)
        e.coeffs = coeffs
        e.params = params
        return e

    def coeff(self, n: int) -> RationalFunction:
        return self.coeffs.get(n, RF_ZERO)

    def __eq__(self, other) -> bool:
        if isinstance(other, GwaElement):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction, Polynomial, RationalFunction)):
            return self.coeffs == GwaElement.scalar(other, self.params).coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(frozenset(self.coeffs.items()))

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __repr__(self) -> str:
        if not self.coeffs:
            return "GwaElement(0)"
        parts = []
        for n in sorted(self.coeffs):
            mono = "" if n == 0 else ("a" if n > 0 else "b") + (f"^{abs(n)}" if abs(n) > 1 else "")
            f = self.coeffs[n].pretty("h")
            parts.append(f"({f})*{mono}" if mono else f)
        return "GwaElement(" + " + ".join(parts) + ")"

    @classmethod
    def scalar(cls, f, params: GwaParams) -> "GwaElement":
        f = _to_ratfun(f)
        return cls._raw({0: f} if f else {}, params)

    @classmethod
    def a(cls, params: GwaParams, n: int = 1) -> "GwaElement":
        return cls._raw({n: RF_ONE}, params)

    @classmethod
    def b(cls, params: GwaParams, n: int = 1) -> "GwaElement":
        return cls._raw({-n: RF_ONE}, params)

    @classmethod
    def h(cls, params: GwaParams) -> "GwaElement":
        return cls._raw({0: X}, params)

    def _coerce(self, other) -> Optional["GwaElement"]:
        if isinstance(other, GwaElement):
            return other
        if isinstance(other, (int, Fraction, Polynomial, RationalFunction)):
            return GwaElement.scalar(other, self.params)
        return None

    def __neg__(self) -> "GwaElement":
        return GwaElement._raw({n: -f for n, f in self.coeffs.items()}, self.params)

    def __add__(self, other) -> "GwaElement":
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        out = dict(self.coeffs)
        for n, f in other.coeffs.items():
            total = out.get(n, RF_ZERO) + f
            if total:
                out[n] = total
            else:
                out.pop(n, None)
        return GwaElement._raw(out, self.params)

    __radd__ = __add__

    def __sub__(self, other) -> "GwaElement":
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "GwaElement":
        return (-self) + other

    def __mul__(self, other) -> "GwaElement":
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return gwa_mul(self, other, self.params)

    def __rmul__(self, other) -> "GwaElement":
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return gwa_mul(other, self, self.params)

    def to_json(self) -> dict:
        return {
            "terms": [
                {
                    "n": n,
                    "coeff": {
                        "num": format_poly(self.coeffs[n].num),
                        "den": format_poly(self.coeffs[n].den),
                    },
                }
                for n in sorted(self.coeffs)
            ]
        }

    @classmethod
    def from_json(cls, data: dict, params: GwaParams) -> "GwaElement":
        coeffs: dict = {}
        for t in data["terms"]:
            f = RationalFunction(parse_poly(t["coeff"]["num"]), parse_poly(t["coeff"]["den"]))
            coeffs[int(t["n"])] = coeffs.get(int(t["n"]), RF_ZERO) + f
        return cls(coeffs, params)


def _contraction(n: int, m: int, s: RationalFunction) -> RationalFunction:
    """c with x_n x_m = c(h) x_{n+m}.

    a^n b^k = sigma^n(s) sigma^(n-1)(s) ... (r factors) a^(n-r) b^(k-r)
    b^j a^k = sigma^-(j-1)(s) sigma^-(j-2)(s) ... (r factors) b^(j-r) a^(k-r)
    with r = min of the two exponents.
    """
    if n >= 0 and m >= 0 or n <= 0 and m <= 0:
        return RF_ONE
    c = RF_ONE
    if n > 0:
        r = min(n, -m)
        for i in range(r):
            c = c * sigma(s, n - i)
    else:
        j = -n
        r = min(j, m)
        for i in range(r):
            c = c * sigma(s, -(j - 1 - i))
    return c


def gwa_mul(X_: GwaElement, Y: GwaElement, params: GwaParams) -> GwaElement:
    """(f x_n)(g x_m) = f sigma^n(g) c(n, m) x_{n+m}."""
    buckets: dict = {}
    contractions: dict = {}
    for n, f in X_.coeffs.items():
        for m, g in Y.coeffs.items():
            c = contractions.get((n, m))
            if c is None:
                c = contractions[(n, m)] = _contraction(n, m, params.s)
            term = f * sigma(g, n) * c
            buckets.setdefault(n + m, []).append(term)
    out = {}
    for k, terms in buckets.items():
        total = terms[0]
        for t in terms[1:]:
            total = total + t
        if total:
            out[k] = total
    return GwaElement._raw(out, params)


def gwa_star(X_: GwaElement) -> GwaElement:
    """Anti-automorphism h* = h, a* = b, b* = a:  (f x_n)* = sigma^-n(f) x_-n."""
    return GwaElement._raw(
        {-n: sigma(f, -n) for n, f in X_.coeffs.items()}, X_.params
    )


# -- D(q)-specific data ------------------------------------------------------

@lru_cache(maxsize=64)
def gwa_params_for(q: Polynomial) -> GwaParams:
    check_degree(q)
    return GwaParams(s_from_q(q))


@lru_cache(maxsize=64)
def psi_factor(q: Polynomial) -> RationalFunction:
    """f(x) = (1/2) q(-x) / ((-x)(1/2 - x)), the delta-coefficient of psi(a)."""
    qm = q.negate_var()
    den = Polynomial([0, -1]) * Polynomial([Fraction(1, 2), -1])
    return RationalFunction(qm.scale(Fraction(1, 2)), den)


@lru_cache(maxsize=1024)
def _psi_power(q: Polynomial, n: int) -> SkewElement:
    """psi(x_n): a^n -> f(x)...f(x-n+1) delta^n, b^n -> f(-x)...f(-x-n+1) delta^-n."""
    f = psi_factor(q)
    c = RF_ONE
    if n >= 0:
        for i in range(n):
            c = c * f.shift(-i)
    else:
        fm = f.negate_var()
        for i in range(-n):
            c = c * fm.shift(i)
    return SkewElement._raw({GroupElement(n, 0): c})


def psi(X_: GwaElement, q: Polynomial) -> SkewElement:
    """Isomorphism h -> x, a -> f(x) delta, b -> f(-x) delta^-1."""
    check_degree(q)
    terms = {}
    for n, g in X_.coeffs.items():
        image = _psi_power(q, n)
        terms[GroupElement(n, 0)] = g * image.terms[GroupElement(n, 0)]
    return SkewElement(terms)


def rho_of(q: Polynomial) -> Fraction:
    return 2 * q(Fraction(-1, 2))


@lru_cache(maxsize=64)
def _beta_images(q: Polynomial) -> dict:
    params = gwa_params_for(q)
    rho = rho_of(q)
    h = X  # the polynomial h, same representation as x
    frac = RationalFunction(Polynomial([rho]), Polynomial([1, 0, -4]))  # rho/(1-4h^2)
    a = GwaElement.a(params)
    b = GwaElement.b(params)
    hh = GwaElement.h(params)
    return {
        "u": GwaElement.scalar(h * h, params),
        "v": a + b + GwaElement.scalar(frac * 2, params),
        "w": (a - b) * hh - GwaElement.scalar(frac, params),
    }


def beta(g: str, q: Polynomial) -> GwaElement:
    """Embedding of the generators u, v, w of D(q) into the GWA."""
    check_degree(q)
    try:
        return _beta_images(q)[g]
    except KeyError:
        raise ValueError(f"unknown generator {g!r}; expected one of u, v, w") from None
