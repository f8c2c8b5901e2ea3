"""Run every identity suite over the test battery and print a summary table."""

import argparse
import time
from dataclasses import dataclass, field

from nckleinian.exact import parse_poly
from nckleinian.suites import SUITES, run_suites

BATTERY = ["0,0,0,0,1", "1,1,0,0,1", "7,0,0,-2,0,1", "4,0,-5,0,1", "0,1,0,0,0,0,1"]


@dataclass
class Config:
    qs: list = field(default_factory=lambda: list(BATTERY))
    suites: tuple = SUITES
    max_deg: int = 40


def main(cfg: Config) -> int:
    failures = 0
    for text in cfg.qs:
        q = parse_poly(text)
        start = time.perf_counter()
        results = run_suites(q, cfg.suites, cfg.max_deg)
        bad = [r for r in results if not r.passed]
        failures += len(bad)
        print(f"q = {q.pretty():<24} {len(results) - len(bad):>3}/{len(results)} pass"
              f"  ({time.perf_counter() - start:.1f}s)")
        for r in bad:
            print(f"    FAIL [{r.suite}] {r.identity}")
    return 1 if failures else 0


if __name__ == "__main__":
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--q", action="append", help="ascending coefficients; repeatable")
    parser.add_argument("--max-deg", type=int, default=40)
    args = parser.parse_args()
    raise SystemExit(main(Config(qs=args.q or list(BATTERY), max_deg=args.max_deg)))
