"""The algebra D(q) on generators u, v, w.

Defining relations::

    [u, v] = 2w + v
    [u, w] = 2vu + w + rho
    [v, w] = -v^2 - p1(u)
    w^2    = v^2 u + v w + rho v + p0(u)

with rho = 2 q(-1/2), p(t) = (rho^2 - 4 q(t) q(-t-1)) / (1 + 2t)^2 and
p(t) = p0(t^2) + t p1(t^2).

Words are plain strings over "uvw"; the empty string is the unit.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping, Optional

from .errors import ExpressionParseError, NonTermination
from .exact import Polynomial, RationalFunction, even_odd_split, exact_div
from .gwa import (
    GwaElement,
    beta,
    check_degree,
    gwa_params_for,
    gwa_star,
    psi,
    rho_of,
    s_from_q,
)
from .skew import ONE as SKEW_ONE
from .skew import ZERO as SKEW_ZERO
from .skew import SkewElement

GENERATORS = "uvw"


@dataclass(frozen=True)
class DqParams:
    q: Polynomial
    rho: Fraction
    p: Polynomial
    p0: Polynomial
    p1: Polynomial
    s: RationalFunction = field(compare=False)

    @property
    def n(self) -> int:
        return self.q.degree


@lru_cache(maxsize=64)
def params_from_q(q: Polynomial) -> DqParams:
    check_degree(q)
    rho = rho_of(q)
    q_reflected = q.negate_var().shift(1)  # q(-t-1)
    numerator = Polynomial([rho * rho]) - (q * q_reflected).scale(4)
    p = exact_div(numerator, Polynomial([1, 2]) ** 2)
    p0, p1 = even_odd_split(p)
    return DqParams(q=q, rho=rho, p=p, p0=p0, p1=p1, s=s_from_q(q))


# -- free expressions ----------------------------------------------------------

def _clean(terms: Mapping[str, Fraction]) -> dict:
    return {w: c for w, c in terms.items() if c}


class FreeExpression:
    """Noncommutative polynomial in u, v, w with rational coefficients."""

    __slots__ = ("terms",)

    def __init__(self, terms: Optional[Mapping[str, object]] = None):
        out: dict = {}
        for word, c in (terms or {}).items():
            if any(ch not in GENERATORS for ch in word):
                raise ValueError(f"bad word {word!r}")
            out[word] = out.get(word, Fraction(0)) + Fraction(c)
        self.terms = _clean(out)

    @classmethod
    def _raw(cls, terms: dict) -> "FreeExpression":
        e = object.__new__(cls)
        e.terms = terms
        return e

    @classmethod
    def word(cls, w: str, c=1) -> "FreeExpression":
        return cls({w: c})

    @classmethod
    def scalar(cls, c) -> "FreeExpression":
        return cls({"": c})

    @classmethod
    def parse(cls, text: str) -> "FreeExpression":
        return parse_expression(text)

    def __eq__(self, other) -> bool:
        if isinstance(other, FreeExpression):
            return self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self.terms == _clean({"": Fraction(other)})
        return NotImplemented

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __repr__(self) -> str:
        return f"FreeExpression({str(self)!r})"

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        out = ""
        for word in sorted(self.terms, key=lambda w: (len(w), w)):
            c = self.terms[word]
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            body = "*".join(word)
            if not body:
                body = str(mag)
            elif mag != 1:
                body = f"{mag}*{body}"
            out += f" {sign} {body}" if out else ("-" if sign == "-" else "") + body
        return out

    def _coerce(self, other) -> Optional["FreeExpression"]:
        if isinstance(other, FreeExpression):
            return other
        if isinstance(other, (int, Fraction)):
            return FreeExpression.scalar(other)
        return None

    def __neg__(self) -> "FreeExpression":
        return FreeExpression._raw({w: -c for w, c in self.terms.items()})

    def __add__(self, other) -> "FreeExpression":
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        out = dict(self.terms)
        for w, c in other.terms.items():
            out[w] = out.get(w, Fraction(0)) + c
        return FreeExpression._raw(_clean(out))

    __radd__ = __add__

    def __sub__(self, other) -> "FreeExpression":
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "FreeExpression":
        return (-self) + other

    def __mul__(self, other) -> "FreeExpression":
        if isinstance(other, (int, Fraction)):
            return FreeExpression._raw(_clean({w: c * other for w, c in self.terms.items()}))
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        out: dict = {}
        for w1, c1 in self.terms.items():
            for w2, c2 in other.terms.items():
                w = w1 + w2
                out[w] = out.get(w, Fraction(0)) + c1 * c2
        return FreeExpression._raw(_clean(out))

    def __rmul__(self, other) -> "FreeExpression":
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other * self

    def __pow__(self, n: int) -> "FreeExpression":
        result = FreeExpression.scalar(1)
        for _ in range(n):
            result = result * self
        return result


U = FreeExpression.word("u")
V = FreeExpression.word("v")
W = FreeExpression.word("w")


_TOKEN = re.compile(r"\s*(?:(\d+(?:/\d+)?)|([uvw])|(\^)|([+\-*]))")


def parse_expression(text: str) -> FreeExpression:
    """Parse e.g. ``"3/2*u*v*w - w*u + u^2"``; products are left-associative."""
    tokens = []
    pos = 0
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise ExpressionParseError(f"unexpected character at {pos}: {text[pos:pos + 8]!r}")
        if m.group(1):
            tokens.append(("num", Fraction(m.group(1))))
        elif m.group(2):
            tokens.append(("sym", m.group(2)))
        elif m.group(3):
            tokens.append(("pow", "^"))
        else:
            tokens.append(("op", m.group(4)))
        pos = m.end()
    if not tokens:
        raise ExpressionParseError("empty expression")

    i = 0

    def peek():
        return tokens[i] if i < len(tokens) else (None, None)

    def factor() -> FreeExpression:
        nonlocal i
        kind, val = peek()
        if kind == "num":
            i += 1
            base = FreeExpression.scalar(val)
        elif kind == "sym":
            i += 1
            base = FreeExpression.word(val)
        else:
            got = "end of input" if kind is None else repr(val)
            raise ExpressionParseError(f"expected a number or generator, got {got}")
        if peek()[0] == "pow":
            i += 1
            kind, val = peek()
            if kind != "num" or val.denominator != 1:
                raise ExpressionParseError("exponent must be a non-negative integer")
            i += 1
            base = base ** int(val)
        return base

    def term() -> FreeExpression:
        nonlocal i
        result = factor()
        while peek() == ("op", "*"):
            i += 1
            result = result * factor()
        return result

    sign = 1
    if peek() in (("op", "+"), ("op", "-")):
        sign = -1 if peek()[1] == "-" else 1
        i += 1
    total = term() * sign
    while i < len(tokens):
        kind, val = peek()
        if kind != "op" or val not in "+-":
            raise ExpressionParseError(f"unexpected token {val!r}")
        i += 1
        t = term()
        total = total + t if val == "+" else total - t
    return total


# -- PBW normal form -------------------------------------------------------------

@dataclass(frozen=True)
class PbwForm:
    """sum c * u^i v^j w^k with k <= 1, keyed by (i, j, k)."""

    terms: Mapping[tuple, Fraction]

    def __post_init__(self):
        for (i, j, k), c in self.terms.items():
            if k not in (0, 1) or i < 0 or j < 0:
                raise ValueError(f"not a PBW monomial: {(i, j, k)}")
            if not c:
                raise ValueError("zero coefficient stored")

    def __eq__(self, other) -> bool:
        if isinstance(other, PbwForm):
            return dict(self.terms) == dict(other.terms)
        return NotImplemented

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def max_w_exponent(self) -> int:
        return max((k for (_, _, k) in self.terms), default=0)

    def to_free(self) -> FreeExpression:
        return embed(self)

    def __str__(self) -> str:
        return str(embed(self))


def embed(form: PbwForm) -> FreeExpression:
    return FreeExpression._raw(
        {"u" * i + "v" * j + "w" * k: c for (i, j, k), c in form.terms.items()}
    )


_ORDER = {"u": 0, "v": 1, "w": 2}

# Left-hand sides needing rewriting: descents in u < v < w, plus ww.
_REDEX = ("vu", "wu", "wv", "ww")


class _Rewriter:
    """Memoized reduction of words to PBW normal form for fixed parameters."""

    def __init__(self, params: DqParams, max_steps: int = 2_000_000):
        self.params = params
        self.max_steps = max_steps
        self.steps = 0
        rho = params.rho
        p1 = {"u" * i: c for i, c in enumerate(params.p1.coeffs) if c}
        p0 = {"u" * i: c for i, c in enumerate(params.p0.coeffs) if c}

        def combine(*parts):
            out: dict = {}
            for part in parts:
                for w, c in part.items():
                    out[w] = out.get(w, Fraction(0)) + c
            return _clean(out)

        self.rules = {
            "vu": combine({"uv": 1, "w": -2, "v": -1}),
            "wu": combine({"uw": 1, "vu": -2, "w": -1, "": -rho}),
            "wv": combine({"vw": 1, "vv": 1}, p1),
            "ww": combine({"vvu": 1, "vw": 1, "v": rho}, p0),
        }
        self.cache: dict = {}

    def _redex(self, word: str) -> int:
        for i in range(len(word) - 1):
            if word[i:i + 2] in self.rules:
                return i
        return -1

    def reduce(self, word: str) -> dict:
        """Normal form of a word, evaluated bottom-up with an explicit stack."""
        cache = self.cache
        stack = [word]
        while stack:
            current = stack[-1]
            if current in cache:
                stack.pop()
                continue
            pos = self._redex(current)
            if pos < 0:
                cache[current] = {current: Fraction(1)}
                stack.pop()
                continue
            prefix, suffix = current[:pos], current[pos + 2:]
            children = [(prefix + rhs + suffix, c)
                        for rhs, c in self.rules[current[pos:pos + 2]].items()]
            missing = [w for w, _ in children if w not in cache]
            if missing:
                self.steps += 1
                if self.steps > self.max_steps:
                    raise NonTermination(f"rewriting exceeded {self.max_steps} steps")
                stack.extend(missing)
                continue
            acc: dict = {}
            for child, c in children:
                for w, d in cache[child].items():
                    acc[w] = acc.get(w, Fraction(0)) + c * d
            cache[current] = _clean(acc)
            stack.pop()
        return cache[word]


@lru_cache(maxsize=64)
def _rewriter_for(params: DqParams) -> _Rewriter:
    return _Rewriter(params)


def _word_to_key(word: str) -> tuple:
    return (word.count("u"), word.count("v"), word.count("w"))


def pbw_normal_form(X: FreeExpression, params: DqParams) -> PbwForm:
    """Rewrite X into the basis u^i v^j w^k, k <= 1."""
    rw = _rewriter_for(params)
    rw.steps = 0
    acc: dict = {}
    for word, c in X.terms.items():
        for w, d in rw.reduce(word).items():
            key = _word_to_key(w)
            acc[key] = acc.get(key, Fraction(0)) + c * d
    return PbwForm(_clean(acc))


# -- star anti-automorphism ---------------------------------------------------------

_STAR_IMAGES = {
    "u": FreeExpression.word("u"),
    "v": FreeExpression.word("v"),
    "w": FreeExpression({"w": -1, "v": -1}),
}


def star_free(X: FreeExpression) -> FreeExpression:
    """u* = u, v* = v, w* = -w - v, extended anti-multiplicatively."""
    total = FreeExpression()
    for word, c in X.terms.items():
        image = FreeExpression.scalar(c)
        for letter in reversed(word):
            image = image * _STAR_IMAGES[letter]
        total = total + image
    return total


# -- embedding phi = psi o beta ------------------------------------------------------

class _Embedding:
    def __init__(self, q: Polynomial):
        self.q = q
        self.generators = {g: psi(beta(g, q), q) for g in GENERATORS}
        self.words: dict = {"": SKEW_ONE}

    def word(self, w: str) -> SkewElement:
        cached = self.words.get(w)
        if cached is not None:
            return cached
        result = self.word(w[:-1]) * self.generators[w[-1]]
        self.words[w] = result
        return result


@lru_cache(maxsize=16)
def _embedding_for(q: Polynomial) -> _Embedding:
    check_degree(q)
    return _Embedding(q)


def phi(X: FreeExpression, q: Polynomial) -> SkewElement:
    """Image of X in Q(x)#Z under phi = psi o beta."""
    emb = _embedding_for(q)
    total = SKEW_ZERO
    for word, c in X.terms.items():
        total = total + emb.word(word) * SkewElement.scalar(c)
    return total


def phi_pbw(form: PbwForm, q: Polynomial) -> SkewElement:
    return phi(embed(form), q)


def beta_free(X: FreeExpression, q: Polynomial) -> GwaElement:
    """Lift X to the generalized Weyl algebra through beta."""
    params = gwa_params_for(q)
    images = {g: beta(g, q) for g in GENERATORS}
    total = GwaElement({}, params)
    for word, c in X.terms.items():
        image = GwaElement.scalar(c, params)
        for letter in word:
            image = image * images[letter]
        total = total + image
    return total


def transported_star(X: FreeExpression, q: Polynomial) -> SkewElement:
    """psi(beta(X)*), the GWA star carried into the skew algebra."""
    return psi(gwa_star(beta_free(X, q)), q)


# -- relations ---------------------------------------------------------------------

def relations(params: DqParams) -> dict:
    """LHS - RHS of the four defining relations as free expressions."""
    u, v, w = U, V, W
    rho = params.rho
    p0_u = FreeExpression({"u" * i: c for i, c in enumerate(params.p0.coeffs) if c})
    p1_u = FreeExpression({"u" * i: c for i, c in enumerate(params.p1.coeffs) if c})
    return {
        "[u,v] = 2w + v": (u * v - v * u) - (2 * w + v),
        "[u,w] = 2vu + w + rho": (u * w - w * u) - (2 * v * u + w + FreeExpression.scalar(rho)),
        "[v,w] = -v^2 - p1(u)": (v * w - w * v) - (-(v * v) - p1_u),
        "w^2 = v^2u + vw + rho v + p0(u)": (w * w)
        - (v * v * u + v * w + rho * v + p0_u),
    }


def harish_chandra_identities(params: DqParams) -> dict:
    """uv = v(u+1) + 2w and uw = w(u+1) + 2vu + rho, as LHS - RHS."""
    u, v, w = U, V, W
    one = FreeExpression.scalar(1)
    return {
        "uv = v(u+1) + 2w": u * v - (v * (u + one) + 2 * w),
        "uw = w(u+1) + v(2u) + rho": u * w
        - (w * (u + one) + v * (2 * u) + FreeExpression.scalar(params.rho)),
    }
