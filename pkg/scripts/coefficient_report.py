"""Compare displayed structure constants with the dual-action oracle at a generic point."""

import argparse
from dataclasses import dataclass
from fractions import Fraction

from nckleinian.dq import params_from_q
from nckleinian.exact import parse_poly
from nckleinian.hc import coefficient_report

BATTERY = ["0,0,0,0,1", "1,1,0,0,1", "7,0,0,-2,0,1", "4,0,-5,0,1", "0,1,0,0,0,0,1"]


@dataclass
class Config:
    qs: tuple = tuple(BATTERY)
    lam: Fraction = Fraction(5, 7)


def main(cfg: Config) -> None:
    tally: dict = {}
    for text in cfg.qs:
        for d in coefficient_report(params_from_q(parse_poly(text)), cfg.lam):
            tally.setdefault(d.quantity, []).append(d.agree)
    width = max(map(len, tally))
    print(f"{'coefficient':<{width}}  agrees with oracle (per q)")
    for name, flags in tally.items():
        print(f"{name:<{width}}  {''.join('y' if f else '.' for f in flags)}")


if __name__ == "__main__":
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--lam", type=Fraction, default=Config.lam)
    args = parser.parse_args()
    main(Config(lam=args.lam))
