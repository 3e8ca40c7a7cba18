"""Flow polynomials of small cycles and theta graphs, with nowhere-zero
counts and flow / totally cyclic pair counts for k = 1..K."""

import argparse
from dataclasses import dataclass

from eulerrecip.flow import OrientedMultigraph, betti, cycle, enumerate_flows, flow_polynomial, ftc_count
from eulerrecip.polynomial import eval_int


@dataclass
class Config:
    max_k: int = 4


def graphs():
    for n in range(1, 5):
        yield f"C{n}", cycle(n)
    for m in range(2, 5):
        yield f"theta{m}", OrientedMultigraph.of(2, [(1, 0)] * m)
    yield "bridge", OrientedMultigraph.of(2, [(1, 0)])


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-k", type=int, default=Config.max_k)
    cfg = Config(ap.parse_args().max_k)
    for name, G in graphs():
        phi = flow_polynomial(G)
        b1 = betti(G)[1]
        print(f"{name:8s} phi = {phi.pretty()}")
        for k in range(1, cfg.max_k + 1):
            nz = enumerate_flows(G, k, nowhere_zero=True)
            pairs = ftc_count(G, k)
            print(f"    k={k}: nowhere-zero {nz} (phi(k)={eval_int(phi, k)})"
                  f"  ftc {pairs} ((-1)^b1 phi(-k)={(-1) ** b1 * eval_int(phi, -k)})")


if __name__ == "__main__":
    main()
