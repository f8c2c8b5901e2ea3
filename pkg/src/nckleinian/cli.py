"""Command-line driver.

Exit codes: 0 success, 1 verification failure, 2 usage or parse error.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field
from typing import Optional

from .dq import params_from_q, parse_expression, pbw_normal_form, phi
from .errors import (
    DegreeTooSmall,
    ExpressionParseError,
    KleinianError,
    OracleInconsistent,
    WindowTooSmall,
)
from .exact import Polynomial, format_rational, parse_poly, parse_rational
from .graph import dumps_json, module_graph, to_dot
from .gwa import check_degree
from .hc import GENERATOR_EXPRESSIONS, act_closed_form, act_oracle, canonical
from .suites import SUITES, run_suites

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


@dataclass
class CliConfig:
    command: str
    q: Optional[Polynomial] = None
    out: Optional[str] = None
    options: dict = field(default_factory=dict)


def _parse_q(text: Optional[str]) -> Optional[Polynomial]:
    if text is None:
        return None
    try:
        q = parse_poly(text)
    except ValueError as exc:
        raise UsageError(f"--q: {exc}") from exc
    check_degree(q)
    return q


def _require_q(config: CliConfig) -> Polynomial:
    if config.q is None:
        raise UsageError(f"{config.command} needs --q")
    return config.q


def _emit(text: str, out: Optional[str]) -> None:
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _dump(data, out: Optional[str]) -> None:
    _emit(json.dumps(data, indent=2) + "\n", out)


def cmd_verify(config: CliConfig) -> int:
    suites = config.options.get("only") or SUITES
    results = run_suites(config.q, suites, config.options.get("max_deg", 40))
    _dump([r.to_json() for r in results], config.out)
    return EXIT_OK if all(r.passed for r in results) else EXIT_FAIL


def cmd_phi(config: CliConfig) -> int:
    q = _require_q(config)
    expr = parse_expression(config.options["expr"])
    _dump(phi(expr, q).to_json(), config.out)
    return EXIT_OK


def cmd_nf(config: CliConfig) -> int:
    q = _require_q(config)
    expr = parse_expression(config.options["expr"])
    form = pbw_normal_form(expr, params_from_q(q))
    terms = [
        {"u": i, "v": j, "w": k, "coeff": format_rational(c)}
        for (i, j, k), c in sorted(form.terms.items())
    ]
    _dump({"terms": terms, "text": str(form)}, config.out)
    return EXIT_OK


def cmd_flag(config: CliConfig) -> int:
    q = _require_q(config)
    results = run_suites(q, ("nilhecke", "flag"), config.options.get("max_deg", 40))
    _dump([r.to_json() for r in results], config.out)
    return EXIT_OK if all(r.passed for r in results) else EXIT_FAIL


def cmd_module_graph(config: CliConfig) -> int:
    q = _require_q(config)
    opts = config.options
    graph = module_graph(params_from_q(q), opts["orbit"], opts["window"], full=opts["full"])
    if opts["format"] == "dot":
        _emit(to_dot(graph, symbolic=opts["symbolic"]), config.out)
    else:
        _emit(dumps_json(graph) + "\n", config.out)
    return EXIT_OK


def cmd_act(config: CliConfig) -> int:
    q = _require_q(config)
    opts = config.options
    params = params_from_q(q)
    c = canonical(opts["order"], opts["point"])
    if c is None:
        _dump({"closed_form": [], "oracle": [], "agree": True}, config.out)
        return EXIT_OK
    sign, t = c
    g = opts["generator"]
    if g in GENERATOR_EXPRESSIONS:
        closed = act_closed_form(g, t, params) * sign
        oracle = act_oracle(g, t, params) * sign
        agree = closed == oracle
        _dump({"closed_form": closed.to_json(), "oracle": oracle.to_json(), "agree": agree},
              config.out)
        return EXIT_OK if agree else EXIT_FAIL
    expr = parse_expression(g)
    oracle = act_oracle(expr, t, params, radius=opts["radius"]) * sign
    _dump({"oracle": oracle.to_json()}, config.out)
    return EXIT_OK


COMMANDS = {
    "verify": cmd_verify,
    "phi": cmd_phi,
    "nf": cmd_nf,
    "flag": cmd_flag,
    "graph": cmd_module_graph,
    "act": cmd_act,
}


def _rational(text: str):
    try:
        return parse_rational(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from exc


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--q", default=argparse.SUPPRESS,
                        help="ascending coefficients of q, e.g. 0,0,0,0,1 for t^4")
    common.add_argument("--out", default=argparse.SUPPRESS, help="write output to this path")

    parser = argparse.ArgumentParser(prog="nckleinian", parents=[common],
                                     description="Exact computations in D(q).")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", parents=[common], help="run identity suites")
    p.add_argument("--only", action="append", choices=SUITES)
    p.add_argument("--max-deg", type=int, default=40)

    p = sub.add_parser("phi", parents=[common], help="image of an expression in Q(x)#Z")
    p.add_argument("expr")

    p = sub.add_parser("nf", parents=[common], help="PBW normal form of an expression")
    p.add_argument("expr")

    p = sub.add_parser("flag", parents=[common], help="nil-Hecke and flag-order identities")
    p.add_argument("--max-deg", type=int, default=40)

    p = sub.add_parser("graph", parents=[common], help="module graph on one orbit")
    p.add_argument("--orbit", type=_rational, required=True)
    p.add_argument("--window", type=int, required=True)
    p.add_argument("--format", choices=("dot", "json"), default="json")
    p.add_argument("--symbolic", action="store_true")
    p.add_argument("--full", action="store_true", help="include the T1 row on generic orbits")

    p = sub.add_parser("act", parents=[common], help="action of a generator on a tableau")
    p.add_argument("generator", help="u, v, w, half_v_plus_w, or an expression")
    p.add_argument("--order", type=int, choices=(0, 1), default=0)
    p.add_argument("--point", type=_rational, required=True)
    p.add_argument("--radius", type=int, default=2)
    return parser


def _config(args: argparse.Namespace) -> CliConfig:
    ns = vars(args).copy()
    command = ns.pop("command")
    q = _parse_q(ns.pop("q", None))
    out = ns.pop("out", None)
    return CliConfig(command, q, out, ns)


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        config = _config(args)
        return COMMANDS[config.command](config)
    except (UsageError, DegreeTooSmall, ExpressionParseError, WindowTooSmall, ValueError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (OracleInconsistent, KleinianError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
