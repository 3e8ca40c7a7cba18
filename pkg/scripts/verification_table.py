"""Run every verification target and tabulate checks per identity.

    python3 scripts/verification_table.py --colors 2 --group 3
"""

import argparse
import time
from collections import defaultdict
from dataclasses import asdict, dataclass
from typing import Optional

from eulerrecip.cli import run_verification


@dataclass
class TableConfig:
    max_p: Optional[int] = None
    max_q: int = 4
    colors: int = 3
    group: int = 4
    seed: Optional[int] = None


def build_table(cfg: TableConfig):
    rows = defaultdict(lambda: [0, 0])
    start = time.perf_counter()
    reports = run_verification("all", **asdict(cfg))
    for r in reports:
        rows[r.theorem][0 if r.passed else 1] += 1
    return dict(sorted(rows.items())), time.perf_counter() - start


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    for name, default in asdict(TableConfig()).items():
        ap.add_argument("--" + name.replace("_", "-"), type=int, default=default)
    cfg = TableConfig(**vars(ap.parse_args()))
    rows, seconds = build_table(cfg)
    width = max(len(k) for k in rows)
    print(f"{'identity':<{width}}  {'pass':>6}  {'fail':>5}")
    for theorem, (ok, bad) in rows.items():
        print(f"{theorem:<{width}}  {ok:>6}  {bad:>5}")
    print(f"\n{sum(v[0] for v in rows.values())} passed, "
          f"{sum(v[1] for v in rows.values())} failed in {seconds:.1f}s")


if __name__ == "__main__":
    main()
