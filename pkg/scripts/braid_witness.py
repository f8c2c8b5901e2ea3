"""Search for monomials separating s0 s1 s0 s1 from s1 s0 s1 s0 as divided differences."""

import argparse
from dataclasses import dataclass

from nckleinian.exact import Polynomial
from nckleinian.flag import divided_difference


@dataclass
class Config:
    max_degree: int = 12


def apply(word: tuple, p: Polynomial) -> Polynomial:
    for i in reversed(word):
        p = divided_difference(i, p)
    return p


def main(cfg: Config) -> None:
    for m in range(cfg.max_degree + 1):
        p = Polynomial.monomial(m)
        left, right = apply((0, 1, 0, 1), p), apply((1, 0, 1, 0), p)
        mark = "" if left == right else "   <- differ"
        print(f"x^{m:<3} s0s1s0s1: {left.pretty('x'):<28} s1s0s1s0: {right.pretty('x')}{mark}")


if __name__ == "__main__":
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-degree", type=int, default=Config.max_degree)
    main(Config(max_degree=parser.parse_args().max_degree))
