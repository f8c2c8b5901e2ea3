"""Exact univariate polynomials and rational functions over the rationals.

Coefficients are :class:`fractions.Fraction`.  Polynomials store an ascending
coefficient tuple with no trailing zeros, so the zero polynomial is ``()``.
Rational functions are kept reduced with a monic denominator, which makes
structural equality the same as mathematical equality.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Union

from .errors import DivisionByZero, NonExactDivision, PoleEvaluation, ZeroPolynomial

Rational = Union[int, Fraction]

_ZERO = Fraction(0)
_ONE = Fraction(1)


def as_fraction(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, str):
        return Fraction(value.strip())
    if isinstance(value, float):
        raise TypeError("floats are not exact; pass a Fraction or a string")
    return Fraction(value)


def _strip(coeffs: list) -> tuple:
    n = len(coeffs)
    while n and not coeffs[n - 1]:
        n -= 1
    return tuple(coeffs[:n])


def _scaled_ints(coeffs: tuple) -> tuple:
    """(d, ints) with coeffs[i] = ints[i] / d."""
    d = 1
    for c in coeffs:
        cd = c.denominator
        if cd != 1:
            d = d * cd // math.gcd(d, cd)
    if d == 1:
        return 1, [c.numerator for c in coeffs]
    return d, [c.numerator * (d // c.denominator) for c in coeffs]


class Polynomial:
    """Dense univariate polynomial with Fraction coefficients (ascending)."""

    __slots__ = ("coeffs", "_hash")

    def __init__(self, coeffs: Iterable = ()):
        self.coeffs = _strip([as_fraction(c) for c in coeffs])
        self._hash = None

    @classmethod
    def _raw(cls, coeffs: tuple) -> "Polynomial":
        # coeffs must already be stripped Fractions
        p = object.__new__(cls)
        p.coeffs = coeffs
        p._hash = None
        return p

    @classmethod
    def constant(cls, c) -> "Polynomial":
        c = as_fraction(c)
        return cls._raw((c,) if c else ())

    @classmethod
    def monomial(cls, degree: int, c=1) -> "Polynomial":
        c = as_fraction(c)
        if not c:
            return ZERO
        return cls._raw((_ZERO,) * degree + (c,))

    # -- basic properties -------------------------------------------------
    @property
    def degree(self) -> int:
        """Degree; -1 stands in for minus infinity on the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def leading(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else _ZERO

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, Polynomial):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == Polynomial.constant(other).coeffs
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(("Polynomial", self.coeffs))
        return self._hash

    def __repr__(self) -> str:
        return f"Polynomial({format_poly(self)!r})"

    def __str__(self) -> str:
        return self.pretty()

    def pretty(self, var: str = "t") -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if not c:
                continue
            sign = "-" if c < 0 else "+"
            mag = -c if c < 0 else c
            if i == 0:
                body = str(mag)
            else:
                mono = var if i == 1 else f"{var}^{i}"
                body = mono if mag == 1 else f"{mag}*{mono}"
            parts.append((sign, body))
        first_sign, first = parts[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    # -- ring operations --------------------------------------------------
    def __neg__(self) -> "Polynomial":
        return Polynomial._raw(tuple(-c for c in self.coeffs))

    def __add__(self, other) -> "Polynomial":
        if not isinstance(other, Polynomial):
            if isinstance(other, (int, Fraction)):
                other = Polynomial.constant(other)
            else:
                return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Polynomial._raw(_strip(out))

    __radd__ = __add__

    def __sub__(self, other) -> "Polynomial":
        if not isinstance(other, Polynomial):
            if isinstance(other, (int, Fraction)):
                other = Polynomial.constant(other)
            else:
                return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "Polynomial":
        return (-self) + other

    def __mul__(self, other) -> "Polynomial":
        if not isinstance(other, Polynomial):
            if isinstance(other, (int, Fraction)):
                return self.scale(other)
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return ZERO
        # convolve integer numerators over common denominators, divide once
        da, ia = _scaled_ints(a)
        db, ib = _scaled_ints(b)
        out = [0] * (len(a) + len(b) - 1)
        for i, ca in enumerate(ia):
            if not ca:
                continue
            for j, cb in enumerate(ib):
                out[i + j] += ca * cb
        d = da * db
        if d == 1:
            return Polynomial._raw(tuple(Fraction(c) for c in out))
        return Polynomial._raw(tuple(Fraction(c, d) for c in out))

    __rmul__ = __mul__

    def scale(self, c) -> "Polynomial":
        c = as_fraction(c)
        if not c:
            return ZERO
        return Polynomial._raw(tuple(x * c for x in self.coeffs))

    def __pow__(self, n: int) -> "Polynomial":
        if n < 0:
            raise ValueError("negative polynomial power")
        result, base = ONE, self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __divmod__(self, other: "Polynomial"):
        if not other:
            raise DivisionByZero("polynomial division by zero")
        num = list(self.coeffs)
        den = other.coeffs
        dl = len(den) - 1
        lead_inv = 1 / den[-1]
        if len(num) - 1 < dl:
            return ZERO, self
        quot = [_ZERO] * (len(num) - dl)
        for i in range(len(num) - 1, dl - 1, -1):
            c = num[i]
            if not c:
                continue
            c = c * lead_inv
            quot[i - dl] = c
            base = i - dl
            for j in range(dl):
                num[base + j] -= c * den[j]
            num[i] = _ZERO
        return Polynomial._raw(_strip(quot)), Polynomial._raw(_strip(num[:dl]))

    def __floordiv__(self, other: "Polynomial") -> "Polynomial":
        return divmod(self, other)[0]

    def __mod__(self, other: "Polynomial") -> "Polynomial":
        return divmod(self, other)[1]

    # -- evaluation & substitutions ----------------------------------------
    def __call__(self, a) -> Fraction:
        a = as_fraction(a)
        acc = _ZERO
        for c in reversed(self.coeffs):
            acc = acc * a + c
        return acc

    def derivative(self) -> "Polynomial":
        return Polynomial._raw(tuple(i * c for i, c in enumerate(self.coeffs) if i))

    def monic(self) -> "Polynomial":
        if not self.coeffs or self.coeffs[-1] == 1:
            return self
        inv = 1 / self.coeffs[-1]
        return Polynomial._raw(tuple(c * inv for c in self.coeffs))

    def shift(self, c) -> "Polynomial":
        return poly_shift(self, c)

    def negate_var(self) -> "Polynomial":
        return poly_negate_var(self)

    def compose_square(self) -> "Polynomial":
        """Return p(t^2)."""
        out = []
        for c in self.coeffs:
            out.append(c)
            out.append(_ZERO)
        return Polynomial._raw(_strip(out))

    def is_even(self) -> bool:
        return not any(self.coeffs[1::2])

    def is_odd(self) -> bool:
        return not any(self.coeffs[0::2])


ZERO = Polynomial._raw(())
ONE = Polynomial._raw((_ONE,))
T = Polynomial._raw((_ZERO, _ONE))


def poly_shift(p: Polynomial, c) -> Polynomial:
    """Return p(t + c).

    Runs Horner's scheme in integers: with c = r/s and L clearing the
    denominators of p, sum_j L a_j s^(n-j) (s t + r)^j equals L s^n p(t + c).
    """
    c = as_fraction(c)
    if not c or len(p.coeffs) <= 1:
        return p
    r, s = c.numerator, c.denominator
    lcm = 1
    for a in p.coeffs:
        lcm = lcm * a.denominator // math.gcd(lcm, a.denominator)
    ints = [a.numerator * (lcm // a.denominator) for a in p.coeffs]
    n = len(ints) - 1
    out: list = []
    for j in range(n, -1, -1):
        # out <- out * (s t + r) + ints[j] s^(n-j)
        new = [0] * (len(out) + 1)
        for i, o in enumerate(out):
            new[i + 1] += o * s
            new[i] += o * r
        new[0] += ints[j] * s ** (n - j)
        out = new
    scale = lcm * s ** n
    return Polynomial._raw(_strip([Fraction(v, scale) for v in out]))


def poly_negate_var(p: Polynomial) -> Polynomial:
    """Return p(-t)."""
    return Polynomial._raw(tuple(-c if i & 1 else c for i, c in enumerate(p.coeffs)))


def even_odd_split(p: Polynomial) -> tuple[Polynomial, Polynomial]:
    """Return (p0, p1) with p(t) = p0(t^2) + t*p1(t^2)."""
    return (
        Polynomial._raw(_strip(list(p.coeffs[0::2]))),
        Polynomial._raw(_strip(list(p.coeffs[1::2]))),
    )


def exact_div(n: Polynomial, d: Polynomial) -> Polynomial:
    quot, rem = divmod(n, d)
    if rem:
        raise NonExactDivision(f"({n.pretty()}) / ({d.pretty()}) leaves remainder {rem.pretty()}")
    return quot


def _primitive(ints: list) -> list:
    g = 0
    for c in ints:
        g = math.gcd(g, c)
    if g > 1:
        ints = [c // g for c in ints]
    return ints


def _strip_ints(ints: list) -> list:
    while ints and not ints[-1]:
        ints.pop()
    return ints


def _pseudo_remainder(a: list, b: list) -> list:
    r = list(a)
    db, lb = len(b) - 1, b[-1]
    while len(r) - 1 >= db:
        lr, shift = r[-1], len(r) - 1 - db
        r = [c * lb for c in r]
        for j, c in enumerate(b):
            r[shift + j] -= lr * c
        _strip_ints(r)
        if not r:
            break
    return r


def poly_gcd(a: Polynomial, b: Polynomial) -> Polynomial:
    """Monic gcd (zero only if both inputs are zero).

    Uses the primitive pseudo-remainder sequence over Z, which avoids the
    coefficient blow-up of Euclid over Q.
    """
    if len(a.coeffs) < len(b.coeffs):
        a, b = b, a
    if not b:
        return a.monic()
    if len(b.coeffs) == 1:
        return ONE
    x, y = _integer_form(a), _integer_form(b)
    while y:
        x, y = y, _primitive(_pseudo_remainder(x, y))
        if len(y) == 1:
            return ONE
    lead = x[-1]
    return Polynomial._raw(tuple(Fraction(c, lead) for c in x))


def _integer_form(p: Polynomial) -> list[int]:
    """Primitive integer polynomial with the same roots as p."""
    lcm = 1
    for c in p.coeffs:
        lcm = lcm * c.denominator // math.gcd(lcm, c.denominator)
    ints = [int(c * lcm) for c in p.coeffs]
    g = 0
    for c in ints:
        g = math.gcd(g, c)
    return [c // g for c in ints]


def _divisors(n: int) -> list[int]:
    n = abs(n)
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def rational_roots(p: Polynomial) -> set[Fraction]:
    """All rational roots of p, by candidate enumeration on the integer form."""
    if not p:
        raise ZeroPolynomial("rational_roots of the zero polynomial")
    ints = _integer_form(p)
    roots: set[Fraction] = set()
    lowest = next(i for i, c in enumerate(ints) if c)
    if lowest:
        roots.add(_ZERO)
        ints = ints[lowest:]
    if len(ints) == 1:
        return roots
    reduced = Polynomial(ints)
    for num in _divisors(ints[0]):
        for den in _divisors(ints[-1]):
            for cand in (Fraction(num, den), Fraction(-num, den)):
                if cand not in roots and reduced(cand) == 0:
                    roots.add(cand)
    return roots


class RationalFunction:
    """Reduced fraction num/den of polynomials with den monic."""

    __slots__ = ("num", "den", "_hash")

    def __init__(self, num, den=None):
        if not isinstance(num, Polynomial):
            num = Polynomial.constant(num)
        if den is None:
            den = ONE
        elif not isinstance(den, Polynomial):
            den = Polynomial.constant(den)
        if not den:
            raise DivisionByZero("rational function with zero denominator")
        if not num:
            num, den = ZERO, ONE
        elif den.degree > 0:
            g = poly_gcd(num, den)
            if g.degree > 0:
                num, den = num // g, den // g
        lead = den.leading
        if lead != 1:
            num, den = num.scale(1 / lead), den.scale(1 / lead)
        self.num = num
        self.den = den
        self._hash = None

    @classmethod
    def _raw(cls, num: Polynomial, den: Polynomial) -> "RationalFunction":
        # caller guarantees coprime with monic den
        r = object.__new__(cls)
        r.num = num
        r.den = den
        r._hash = None
        return r

    @classmethod
    def from_poly(cls, p: Polynomial) -> "RationalFunction":
        return cls._raw(p, ONE)

    @classmethod
    def constant(cls, c) -> "RationalFunction":
        return cls._raw(Polynomial.constant(c), ONE)

    # -- predicates -------------------------------------------------------
    def is_zero(self) -> bool:
        return not self.num

    def __bool__(self) -> bool:
        return bool(self.num)

    def is_polynomial(self) -> bool:
        return self.den.degree == 0

    def is_constant(self) -> bool:
        return self.den.degree == 0 and self.num.degree <= 0

    def __eq__(self, other) -> bool:
        if isinstance(other, RationalFunction):
            return self.num == other.num and self.den == other.den
        if isinstance(other, Polynomial):
            return self.den.degree == 0 and self.num == other
        if isinstance(other, (int, Fraction)):
            return self.den.degree == 0 and self.num == other
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.num, self.den))
        return self._hash

    def __repr__(self) -> str:
        return f"RationalFunction({format_poly(self.num)!r}, {format_poly(self.den)!r})"

    def pretty(self, var: str = "x") -> str:
        if self.den.degree == 0:
            return self.num.pretty(var)
        return f"({self.num.pretty(var)})/({self.den.pretty(var)})"

    __str__ = pretty

    # -- field operations -------------------------------------------------
    def __neg__(self) -> "RationalFunction":
        return RationalFunction._raw(-self.num, self.den)

    def __add__(self, other) -> "RationalFunction":
        other = _coerce(other)
        if other is None:
            return NotImplemented
        if not other.num:
            return self
        if not self.num:
            return other
        if self.den == other.den:
            if self.den.degree == 0:
                return RationalFunction._raw(self.num + other.num, ONE)
            return RationalFunction(self.num + other.num, self.den)
        if self.den.degree == 0:
            return RationalFunction._raw(self.num * other.den + other.num, other.den)
        if other.den.degree == 0:
            return RationalFunction._raw(self.num + other.num * self.den, self.den)
        g = poly_gcd(self.den, other.den)
        if g.degree == 0:
            # coprime denominators: the sum is already reduced
            return RationalFunction._raw(
                self.num * other.den + other.num * self.den, self.den * other.den
            )
        d1 = self.den // g
        d2 = other.den // g
        num = self.num * d2 + other.num * d1
        return RationalFunction(num, d1 * other.den)

    __radd__ = __add__

    def __sub__(self, other) -> "RationalFunction":
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "RationalFunction":
        return (-self) + other

    def __mul__(self, other) -> "RationalFunction":
        other = _coerce(other)
        if other is None:
            return NotImplemented
        if not self.num or not other.num:
            return RF_ZERO
        a, b, c, d = self.num, self.den, other.num, other.den
        if d.degree > 0:
            g = poly_gcd(a, d)
            if g.degree > 0:
                a, d = a // g, d // g
        if b.degree > 0:
            g = poly_gcd(c, b)
            if g.degree > 0:
                c, b = c // g, b // g
        return RationalFunction._raw(a * c, b * d)

    __rmul__ = __mul__

    def inverse(self) -> "RationalFunction":
        if not self.num:
            raise DivisionByZero("inverse of zero rational function")
        lead = self.num.leading
        return RationalFunction._raw(self.den.scale(1 / lead), self.num.scale(1 / lead))

    def __truediv__(self, other) -> "RationalFunction":
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other) -> "RationalFunction":
        return _coerce(other) * self.inverse()

    def __pow__(self, n: int) -> "RationalFunction":
        if n < 0:
            return self.inverse() ** (-n)
        return RationalFunction._raw(self.num**n, self.den**n)

    # -- substitutions ----------------------------------------------------
    def shift(self, c) -> "RationalFunction":
        """f(x + c); shifting preserves coprimality and monicity."""
        c = as_fraction(c)
        if not c:
            return self
        return RationalFunction._raw(poly_shift(self.num, c), poly_shift(self.den, c))

    def negate_var(self) -> "RationalFunction":
        """f(-x); only the sign of the denominator may need fixing."""
        num, den = poly_negate_var(self.num), poly_negate_var(self.den)
        if den.leading != 1:
            num, den = -num, -den
        return RationalFunction._raw(num, den)

    def derivative(self) -> "RationalFunction":
        n, d = self.num, self.den
        return RationalFunction(n.derivative() * d - n * d.derivative(), d * d)

    def __call__(self, a) -> Fraction:
        return ratfun_eval(self, a)


def _coerce(value):
    if isinstance(value, RationalFunction):
        return value
    if isinstance(value, Polynomial):
        return RationalFunction._raw(value, ONE)
    if isinstance(value, (int, Fraction)):
        return RationalFunction.constant(value)
    return None


RF_ZERO = RationalFunction._raw(ZERO, ONE)
RF_ONE = RationalFunction._raw(ONE, ONE)
X = RationalFunction._raw(T, ONE)


def ratfun_eval(f: RationalFunction, a) -> Fraction:
    a = as_fraction(a)
    d = f.den(a)
    if not d:
        # canonical form is reduced, so a zero denominator is a true pole
        raise PoleEvaluation(f"{f.pretty()} has a pole at {a}")
    return f.num(a) / d


def ratfun(num, den=None) -> RationalFunction:
    """Convenience constructor from ascending coefficient lists or polynomials."""
    if not isinstance(num, (Polynomial, int, Fraction)):
        num = Polynomial(num)
    if den is not None and not isinstance(den, (Polynomial, int, Fraction)):
        den = Polynomial(den)
    return RationalFunction(num, den)


# -- text format ------------------------------------------------------------

def format_rational(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def format_poly(p: Polynomial) -> str:
    """Ascending comma-separated coefficients; the zero polynomial is "0"."""
    if not p.coeffs:
        return "0"
    return ",".join(format_rational(c) for c in p.coeffs)


def parse_rational(text: str) -> Fraction:
    text = text.strip()
    if not text:
        raise ValueError("empty rational literal")
    num, sep, den = text.partition("/")
    try:
        if sep:
            return Fraction(int(num), int(den))
        return Fraction(int(num))
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"bad rational literal {text!r}") from exc


def parse_poly(text: str) -> Polynomial:
    text = text.strip()
    if not text:
        raise ValueError("empty polynomial literal")
    return Polynomial(parse_rational(part) for part in text.split(","))
