"""Sweep the gadget family G_q and print how far sdim_f sits below |M|/2 and sdim.

Usage: python3 scripts/gap_family.py --max-q 5
"""

from __future__ import annotations

import argparse
import time
from dataclasses import dataclass
from fractions import Fraction

from sdimlab import families
from sdimlab.optimize import invariant_report
from sdimlab.verify import fmt


@dataclass
class SweepConfig:
    min_q: int = 2
    max_q: int = 5


def sweep(cfg: SweepConfig) -> list[tuple]:
    rows = []
    for q in range(cfg.min_q, cfg.max_q + 1):
        start = time.perf_counter()
        r = invariant_report(families.gq_full(q))
        upper = min(Fraction(r.boundary_size, 2), Fraction(r.sdim))
        rows.append((q, r.n, r.boundary_size, r.sdim, r.sdim_f, upper - r.sdim_f,
                     time.perf_counter() - start))
    return rows


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--min-q", type=int, default=2)
    ap.add_argument("--max-q", type=int, default=5)
    ns = ap.parse_args()
    print(f"{'q':>3} {'n':>4} {'|M|':>5} {'sdim':>5} {'sdim_f':>7} {'gap':>6} {'sec':>6}")
    for q, n, m, s, f, gap, sec in sweep(SweepConfig(ns.min_q, ns.max_q)):
        print(f"{q:>3} {n:>4} {m:>5} {s:>5} {fmt(f):>7} {fmt(gap):>6} {sec:>6.2f}")


if __name__ == "__main__":
    main()
