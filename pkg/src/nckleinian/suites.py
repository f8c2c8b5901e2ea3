"""Named verification suites, each a list of :class:`IdentityResult`."""

from __future__ import annotations

from typing import Iterable

from .dq import GENERATORS, FreeExpression, harish_chandra_identities, params_from_q, phi, relations
from .exact import Polynomial, RationalFunction, X
from .flag import IdentityResult, generator_preservation, verify_identities
from .gwa import GwaElement, check_degree, gwa_params_for, psi, sigma
from .skew import is_tau_invariant, preserves_even_polys

SUITES = ("relations", "gwa", "nilhecke", "flag", "invariance")
Q_FREE_SUITES = {"nilhecke"}


def _result(suite: str, identity: str, residual) -> IdentityResult:
    ok = not residual
    return IdentityResult(identity, ok, None if ok else residual, suite)


def relation_suite(q: Polynomial) -> list:
    params = params_from_q(q)
    out = []
    for name, expr in {**relations(params), **harish_chandra_identities(params)}.items():
        out.append(_result("relations", name, phi(expr, q)))
    return out


def gwa_suite(q: Polynomial) -> list:
    params = gwa_params_for(q)
    s = params.s
    a, b, h = GwaElement.a(params), GwaElement.b(params), GwaElement.h(params)

    def sc(f):
        return GwaElement.scalar(f, params)

    native = [
        ("ba = s(h)", b * a - sc(s)),
        ("ab = s(h-1)", a * b - sc(sigma(s))),
        ("ah = (h-1)a", a * h - sc(X - 1) * a),
        ("bh = (h+1)b", b * h - sc(X + 1) * b),
    ]
    out = [_result("gwa", name, r) for name, r in native]
    pa, pb, px = psi(a, q), psi(b, q), psi(h, q)
    x = RationalFunction(Polynomial([0, 1]))
    carried = [
        ("psi(b)psi(a) = s(x)", pb * pa - s),
        ("psi(a)psi(b) = s(x-1)", pa * pb - sigma(s)),
        ("psi(a)x = (x-1)psi(a)", pa * px - (x - 1) * pa),
        ("psi(b)x = (x+1)psi(b)", pb * px - (x + 1) * pb),
    ]
    out += [_result("gwa", name, r) for name, r in carried]
    return out


def invariance_suite(q: Polynomial, max_deg: int = 40) -> list:
    out = []
    for g in GENERATORS:
        image = phi(FreeExpression.word(g), q)
        out.append(IdentityResult(f"tau phi({g}) tau = phi({g})", is_tau_invariant(image),
                                  None, "invariance"))
        kept = preserves_even_polys(image, max_deg)
        out.append(IdentityResult(f"phi({g}) preserves Q[x^2] up to x^{2 * max_deg}",
                                  kept.ok, None, "invariance"))
    for name, kept in generator_preservation(q, max_deg).items():
        out.append(IdentityResult(f"{name} preserves Q[x] up to x^{max_deg}", kept.ok,
                                  None, "flag"))
    return out


def run_suites(q, suites: Iterable[str] = SUITES, max_deg: int = 40) -> list:
    suites = tuple(suites)
    unknown = set(suites) - set(SUITES)
    if unknown:
        raise ValueError(f"unknown suite(s): {', '.join(sorted(unknown))}")
    if set(suites) - Q_FREE_SUITES:
        if q is None:
            raise ValueError("a parameter polynomial q is required for these suites")
        check_degree(q)
    results = []
    if "relations" in suites:
        results += relation_suite(q)
    if "gwa" in suites:
        results += gwa_suite(q)
    hecke = [s for s in ("nilhecke", "flag") if s in suites]
    if hecke:
        results += verify_identities(q, hecke)
    if "invariance" in suites:
        results += invariance_suite(q, max_deg)
    return results
