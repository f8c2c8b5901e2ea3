"""Write DOT and JSON module graphs for a generic, an integral and a half-integral orbit."""

import argparse
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path

from nckleinian.dq import params_from_q
from nckleinian.exact import parse_poly
from nckleinian.graph import dumps_json, minimal_window, module_graph, submodule_closures, to_dot


@dataclass
class Config:
    q: str = "4,0,-5,0,1"
    orbits: tuple = ("1/3", "0", "1/2")
    out_dir: Path = Path("figures")
    symbolic: bool = True
    extra_window: int = 2


def main(cfg: Config) -> None:
    params = params_from_q(parse_poly(cfg.q))
    cfg.out_dir.mkdir(parents=True, exist_ok=True)
    for orbit in cfg.orbits:
        lam = Fraction(orbit)
        window = minimal_window(params, lam) + cfg.extra_window
        graph = module_graph(params, lam, window)
        stem = cfg.out_dir / f"orbit_{orbit.replace('/', '_')}"
        stem.with_suffix(".dot").write_text(to_dot(graph, cfg.symbolic), encoding="utf-8")
        stem.with_suffix(".json").write_text(dumps_json(graph), encoding="utf-8")
        closures, _ = submodule_closures(graph)
        missing = sum(1 for s in graph.slots if s.symbol != "0" and not s.present)
        print(f"orbit {orbit:>4} ({graph.orbit_class}, N={window}): {len(graph.vertices)} vertices,"
              f" {len(graph.edges)} edges, {missing} drawn arrows absent, {len(closures)} closures")
        for s in graph.inconsistent_slots():
            print(f"    label mismatch: {s.src} -> {s.dst} labelled {s.symbol} = {s.label},"
                  f" reached = {s.present}")


if __name__ == "__main__":
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--q", default=Config.q)
    parser.add_argument("--out-dir", type=Path, default=Config.out_dir)
    parser.add_argument("--orbit", action="append")
    args = parser.parse_args()
    main(Config(q=args.q, out_dir=args.out_dir, orbits=tuple(args.orbit or Config.orbits)))
