"""Print weak and strict order polynomials of every poset up to a size,
with the reciprocity residual (zero when the identity holds)."""

import argparse
from dataclasses import dataclass

from eulerrecip.corpus import poset_family
from eulerrecip.homspace import HomMode, order_polynomial
from eulerrecip.polynomial import reciprocity_transform, to_monomial
from eulerrecip.poset import strict_pairs


@dataclass
class Config:
    max_n: int = 3


def rows(cfg: Config):
    for P in poset_family(cfg.max_n):
        weak = to_monomial(order_polynomial(P, HomMode.WEAK))
        strict = to_monomial(order_polynomial(P, HomMode.STRICT))
        residual = strict - reciprocity_transform(weak, P.n)
        yield P, weak, strict, residual


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-n", type=int, default=Config.max_n)
    cfg = Config(ap.parse_args().max_n)
    for P, weak, strict, residual in rows(cfg):
        rel = sorted(strict_pairs(P))
        print(f"n={P.n} {rel}")
        print(f"    weak   {weak.pretty()}")
        print(f"    strict {strict.pretty()}")
        print(f"    residual {residual.pretty()}")


if __name__ == "__main__":
    main()
