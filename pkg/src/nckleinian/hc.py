"""Harish-Chandra modules of local distributions.

D(q) acts on functionals xi on Q[x^2] by (X.xi)(p) = xi(phi(X*).p).  The
tableau T0(l) evaluates p at l and the derivative tableau T1(l) evaluates
dp/dx at l.  Since p is even, T0(-l) = T0(l) and T1(-l) = -T1(l); in
particular T1(0) = 0.  Tableaux are stored with l >= 0 and the sign folded
into the coefficient.

Two independent routes compute generator actions:

* :func:`act_closed_form` - explicit structure constants in q, q', q''.
* :func:`act_oracle` - pushes even test polynomials through phi(X*) in the
  skew algebra, evaluates, and solves the Hermite interpolation system.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping, Optional, Union

from .dq import DqParams, FreeExpression, phi, star_free
from .errors import OddPolynomial, OracleInconsistent
from .exact import Polynomial, as_fraction, format_rational, parse_rational
from .skew import skew_act

HALF = Fraction(1, 2)

GENERATOR_EXPRESSIONS = {
    "u": FreeExpression({"u": 1}),
    "v": FreeExpression({"v": 1}),
    "w": FreeExpression({"w": 1}),
    "half_v_plus_w": FreeExpression({"v": HALF, "w": 1}),
}


@dataclass(frozen=True, order=True)
class Tableau:
    order: int
    point: Fraction

    def __post_init__(self):
        if self.order not in (0, 1):
            raise ValueError("tableau order must be 0 or 1")
        if self.point < 0:
            raise ValueError("stored tableaux have non-negative points; use canonical()")
        if self.order == 1 and self.point == 0:
            raise ValueError("T1(0) is zero and is never stored")

    def __str__(self) -> str:
        return f"T{self.order}({format_rational(self.point)})"

    def to_json(self) -> dict:
        return {"order": self.order, "point": format_rational(self.point)}

    @classmethod
    def from_json(cls, data: dict) -> "Tableau":
        return cls(int(data["order"]), parse_rational(str(data["point"])))


def canonical(order: int, point) -> Optional[tuple]:
    """(sign, Tableau) representing T_order(point), or None for T1(0)."""
    point = as_fraction(point)
    sign = 1
    if point < 0:
        point = -point
        if order == 1:
            sign = -1
    if order == 1 and point == 0:
        return None
    return sign, Tableau(order, point)


def T0(point) -> Tableau:
    return canonical(0, point)[1]


def T1(point) -> Tableau:
    c = canonical(1, point)
    if c is None:
        raise ValueError("T1(0) is zero")
    if c[0] != 1:
        raise ValueError("T1 of a negative point carries a sign; use Distribution.of")
    return c[1]


class Distribution:
    """Finite rational combination of canonical tableaux."""

    __slots__ = ("terms",)

    def __init__(self, terms: Optional[Mapping[Tableau, object]] = None):
        self.terms = {t: Fraction(c) for t, c in (terms or {}).items() if c}

    @classmethod
    def of(cls, order: int, point, coeff=1) -> "Distribution":
        return cls.from_terms([(coeff, order, point)])

    @classmethod
    def from_terms(cls, triples: Iterable) -> "Distribution":
        acc: dict = {}
        for coeff, order, point in triples:
            coeff = as_fraction(coeff)
            if not coeff:
                continue
            c = canonical(order, point)
            if c is None:
                continue
            sign, t = c
            acc[t] = acc.get(t, Fraction(0)) + sign * coeff
        return cls(acc)

    def coeff(self, t: Tableau) -> Fraction:
        return self.terms.get(t, Fraction(0))

    def components_at(self, point) -> dict:
        point = abs(as_fraction(point))
        return {t: c for t, c in self.terms.items() if t.point == point}

    def __eq__(self, other) -> bool:
        if isinstance(other, Distribution):
            return self.terms == other.terms
        return NotImplemented

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __add__(self, other: "Distribution") -> "Distribution":
        acc = dict(self.terms)
        for t, c in other.terms.items():
            acc[t] = acc.get(t, Fraction(0)) + c
        return Distribution(acc)

    def __neg__(self) -> "Distribution":
        return Distribution({t: -c for t, c in self.terms.items()})

    def __sub__(self, other: "Distribution") -> "Distribution":
        return self + (-other)

    def __mul__(self, c) -> "Distribution":
        c = as_fraction(c)
        return Distribution({t: v * c for t, v in self.terms.items()})

    __rmul__ = __mul__

    def __repr__(self) -> str:
        return f"Distribution({self})"

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(f"{format_rational(c)}*{t}" for t, c in sorted(self.terms.items()))

    def to_json(self) -> list:
        return [
            {**t.to_json(), "coeff": format_rational(c)} for t, c in sorted(self.terms.items())
        ]

    @classmethod
    def from_json(cls, data: list) -> "Distribution":
        return cls.from_terms(
            (parse_rational(d["coeff"]), int(d["order"]), parse_rational(d["point"])) for d in data
        )


def _tableau_value(t: Tableau, p: Polynomial) -> Fraction:
    return p(t.point) if t.order == 0 else p.derivative()(t.point)


def eval_dist(d: Union[Distribution, Tableau], p: Polynomial) -> Fraction:
    if not p.is_even():
        raise OddPolynomial(f"{p.pretty('x')} is not in Q[x^2]")
    if isinstance(d, Tableau):
        return _tableau_value(d, p)
    return sum((c * _tableau_value(t, p) for t, c in d.terms.items()), Fraction(0))


# -- closed-form structure constants ----------------------------------------------

def _half_v_plus_w(t: Tableau, q: Polynomial) -> Distribution:
    lam = t.point
    dq = q.derivative()
    if lam == 0:
        # only T0(0) can sit at the origin
        return Distribution.from_terms([(q(0), 1, 1), (dq(0), 0, 1)])
    qp, qm = q(lam), q(-lam)
    terms = [(qp / (2 * lam), t.order, lam + 1)]
    terms.append((-qm / (2 * lam), t.order, lam - 1))
    if t.order == 1:
        terms.append(((lam * dq(lam) - qp) / (2 * lam * lam), 0, lam + 1))
        terms.append(((lam * dq(-lam) + qm) / (2 * lam * lam), 0, lam - 1))
    return Distribution.from_terms(terms)


def _w(t: Tableau, q: Polynomial, rho: Fraction) -> Distribution:
    lam = t.point
    c = rho / 2  # q(-1/2)
    dq = q.derivative()
    if lam == HALF:
        qh = q(HALF)
        if t.order == 0:
            return Distribution.from_terms([
                (qh / 2, 0, Fraction(3, 2)),
                ((dq(-HALF) - c) / 2, 0, HALF),
                (c, 1, HALF),
            ])
        ddq = dq.derivative()
        return Distribution.from_terms([
            (qh / 2, 1, Fraction(3, 2)),
            ((dq(HALF) - qh) / 2, 0, Fraction(3, 2)),
            (c / 2 - ddq(-HALF) / 4, 0, HALF),
            (-(c + dq(-HALF)) / 2, 1, HALF),
        ])
    ap, am = HALF + lam, HALF - lam
    qp, qm = q(lam), q(-lam)
    fwd = qp / (2 * ap)
    back = qm / (2 * am)
    diag = -c / (2 * ap * am)
    terms = [(fwd, t.order, lam + 1), (back, t.order, lam - 1), (diag, t.order, lam)]
    if t.order == 1:
        terms.append(((dq(lam) * ap - qp) / (2 * ap * ap), 0, lam + 1))
        terms.append(((-dq(-lam) * am + qm) / (2 * am * am), 0, lam - 1))
        terms.append((-c * lam / (ap * ap * am * am), 0, lam))
    return Distribution.from_terms(terms)


def act_closed_form(g: str, t: Tableau, params: DqParams) -> Distribution:
    """Action of u, v, w or (v/2 + w) on a tableau from explicit formulas."""
    q = params.q
    lam = t.point
    if g == "u":
        terms = [(lam * lam, t.order, lam)]
        if t.order == 1:
            terms.append((2 * lam, 0, lam))
        return Distribution.from_terms(terms)
    if g == "half_v_plus_w":
        return _half_v_plus_w(t, q)
    if g == "w":
        return _w(t, q, params.rho)
    if g == "v":
        return (_half_v_plus_w(t, q) - _w(t, q, params.rho)) * 2
    raise ValueError(f"unknown generator {g!r}")


def act_closed_form_on(g: str, d: Distribution, params: DqParams) -> Distribution:
    total = Distribution()
    for t, c in d.terms.items():
        total = total + act_closed_form(g, t, params) * c
    return total


# -- dual-action oracle ------------------------------------------------------------

def _as_expression(g) -> FreeExpression:
    if isinstance(g, FreeExpression):
        return g
    try:
        return GENERATOR_EXPRESSIONS[g]
    except KeyError:
        raise ValueError(f"unknown generator {g!r}") from None


class _TestImages:
    """phi(X*) applied to x^(2m), grown on demand."""

    def __init__(self, expr: FreeExpression, q: Polynomial):
        self.operator = phi(star_free(expr), q)
        self.images: list = []

    def get(self, count: int) -> list:
        while len(self.images) < count:
            m = len(self.images)
            r = skew_act(self.operator, Polynomial.monomial(2 * m))
            if not r.is_polynomial() or not r.num.is_even():
                raise OracleInconsistent(
                    f"phi(X*).x^{2 * m} = {r.pretty()} is not an even polynomial"
                )
            self.images.append(r.num)
        return self.images[:count]


@lru_cache(maxsize=256)
def _test_images(expr: FreeExpression, q: Polynomial) -> _TestImages:
    return _TestImages(expr, q)


def _basis_value(t: Tableau, m: int) -> Fraction:
    """t(x^(2m))."""
    if t.order == 0:
        return t.point ** (2 * m)
    if m == 0:
        return Fraction(0)
    return 2 * m * t.point ** (2 * m - 1)


def solve_exact(matrix: list, rhs: list) -> list:
    """Gauss-Jordan elimination over Q for a nonsingular square system."""
    n = len(matrix)
    aug = [list(row) + [b] for row, b in zip(matrix, rhs)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if aug[r][col]), None)
        if pivot is None:
            raise OracleInconsistent("singular interpolation system")
        aug[col], aug[pivot] = aug[pivot], aug[col]
        inv = 1 / aug[col][col]
        aug[col] = [v * inv for v in aug[col]]
        for r in range(n):
            if r != col and aug[r][col]:
                f = aug[r][col]
                aug[r] = [a - f * b for a, b in zip(aug[r], aug[col])]
    return [row[n] for row in aug]


def candidate_support(t: Tableau, radius: int = 1) -> list:
    seen = []
    for d in range(-radius, radius + 1):
        for order in (0, 1):
            c = canonical(order, t.point + d)
            if c is not None and c[1] not in seen:
                seen.append(c[1])
    return seen


EXTRA_EQUATIONS = 4


def act_oracle(g, t: Tableau, params: DqParams, radius: int = 1) -> Distribution:
    """Action of g (generator name or FreeExpression) on t via the dual pairing."""
    expr = _as_expression(g)
    support = candidate_support(t, radius)
    n = len(support)
    images = _test_images(expr, params.q).get(n + EXTRA_EQUATIONS)
    values = [_tableau_value(t, r) for r in images]
    rows = [[_basis_value(s, m) for s in support] for m in range(n + EXTRA_EQUATIONS)]
    coeffs = solve_exact(rows[:n], values[:n])
    for m in range(n, n + EXTRA_EQUATIONS):
        if sum(a * c for a, c in zip(rows[m], coeffs)) != values[m]:
            raise OracleInconsistent(
                f"action of {expr} on {t} is not supported on {[str(s) for s in support]}"
            )
    return Distribution(dict(zip(support, coeffs)))


def act_oracle_on(g, d: Distribution, params: DqParams, radius: int = 1) -> Distribution:
    total = Distribution()
    for t, c in d.terms.items():
        total = total + act_oracle(g, t, params, radius) * c
    return total


# -- span reachability --------------------------------------------------------------

SPAN_GENERATORS = ("v", "w")


def _span_vectors(src: Tableau, params: DqParams) -> list:
    return [Distribution({src: 1})] + [act_oracle(g, src, params) for g in SPAN_GENERATORS]


def reaches(src: Tableau, dst: Tableau, params: DqParams) -> bool:
    """Is dst in the C[u]1 + C[u]v + C[u]w span of src?

    Polynomials in u separate the generalized weight spaces and (u - mu^2)
    sends T1(mu) to 2 mu T0(mu), so T0(mu) is reached iff some vector has a
    nonzero component at mu, and T1(mu) iff some vector has a nonzero
    T1(mu) coefficient.
    """
    if src == dst:
        return True
    return _reaches_from(_span_vectors(src, params), dst)


def _reaches_from(vectors: list, dst: Tableau) -> bool:
    if dst.order == 1:
        return any(vec.coeff(dst) for vec in vectors)
    return any(vec.components_at(dst.point) for vec in vectors)


def span_generators_hitting(src: Tableau, dst: Tableau, params: DqParams) -> list:
    """Which of u, v, w carry src to a vector with a component at dst."""
    hits = []
    for g in ("u", "v", "w"):
        vec = act_oracle(g, src, params)
        if _reaches_from([vec], dst):
            hits.append(g)
    return hits


# -- printed versus computed coefficients -------------------------------------------

def signed_coeff(d: Distribution, order: int, point) -> Fraction:
    """Coefficient of T_order(point) for a possibly negative point."""
    c = canonical(order, point)
    if c is None:
        return Fraction(0)
    sign, t = c
    return sign * d.coeff(t)


@dataclass(frozen=True)
class Discrepancy:
    quantity: str
    printed: Fraction
    computed: Fraction

    @property
    def agree(self) -> bool:
        return self.printed == self.computed

    def to_json(self) -> dict:
        return {
            "quantity": self.quantity,
            "printed": format_rational(self.printed),
            "computed": format_rational(self.computed),
            "agree": self.agree,
        }


def coefficient_report(params: DqParams, lam) -> list:
    """Compare the displayed structure constants with the dual-action oracle.

    Only generic points (2 lam not an integer) are accepted, so that the six
    neighbouring tableaux are distinct and nonzero.
    """
    lam = as_fraction(lam)
    if (2 * lam).denominator == 1:
        raise ValueError("coefficient report needs 2*lam outside Z")
    if lam < 0:
        lam = -lam
    q = params.q
    dq = q.derivative()
    c = params.rho / 2
    ap, am = HALF + lam, HALF - lam
    t0, t1 = Tableau(0, lam), Tableau(1, lam)
    u1 = act_oracle("u", t1, params)
    h1 = act_oracle("half_v_plus_w", t1, params)
    w0 = act_oracle("w", t0, params)
    w1 = act_oracle("w", t1, params)
    rows = [
        ("u.T1(l): T0(l)", Fraction(1), signed_coeff(u1, 0, lam)),
        ("(v/2+w).T1(l): T1(l-1)", q(-lam) / (2 * lam), signed_coeff(h1, 1, lam - 1)),
        ("(v/2+w).T1(l): T0(l+1)", (dq(lam) - q(lam)) / (2 * lam * lam), signed_coeff(h1, 0, lam + 1)),
        ("(v/2+w).T1(l): T0(l-1)", -(dq(-lam) - q(-lam)) / (2 * lam * lam), signed_coeff(h1, 0, lam - 1)),
        ("w.T0(l): T0(l)", c / (ap * am), signed_coeff(w0, 0, lam)),
        ("w.T1(l): T1(l)", c / (ap * am), signed_coeff(w1, 1, lam)),
        ("w.T1(l): T0(l-1) [proof display]", q(-lam) / (2 * am), signed_coeff(w1, 0, lam - 1)),
        ("w.T1(l): T0(l-1) [statement]", (-dq(-lam) * am + q(-lam)) / (2 * am * am),
         signed_coeff(w1, 0, lam - 1)),
        ("w.T1(l): T0(l)", c / (ap * am), signed_coeff(w1, 0, lam)),
    ]
    return [Discrepancy(name, printed, computed) for name, printed, computed in rows]
