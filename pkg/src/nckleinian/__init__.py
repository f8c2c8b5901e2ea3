"""Exact computer algebra for the type-D noncommutative Kleinian singularity D(q).

D(q) is realized inside the skew group algebra Q(x) # (Z x| S2) through the
generalized Weyl algebra; see the README for the module map.
"""

from .dq import DqParams, FreeExpression, params_from_q, parse_expression, pbw_normal_form, phi
from .errors import KleinianError
from .exact import Polynomial, RationalFunction, parse_poly
from .hc import Distribution, Tableau, act_closed_form, act_oracle
from .skew import GroupElement, SkewElement

__all__ = [
    "DqParams",
    "Distribution",
    "FreeExpression",
    "GroupElement",
    "KleinianError",
    "Polynomial",
    "RationalFunction",
    "SkewElement",
    "Tableau",
    "act_closed_form",
    "act_oracle",
    "params_from_q",
    "parse_expression",
    "parse_poly",
    "pbw_normal_form",
    "phi",
]
