"""Solve sdim_f on random connected graphs through both LP routes and compare timings.

Usage: python3 scripts/corpus_sweep.py --count 200 --max-n 12 --seed 1
"""

from __future__ import annotations

import argparse
import random
import time
from dataclasses import dataclass

from sdimlab import families
from sdimlab.optimize import sdim_f


@dataclass
class CorpusConfig:
    count: int = 200
    max_n: int = 12
    seed: int = 1


def run(cfg: CorpusConfig) -> tuple[int, float, float]:
    rng = random.Random(cfg.seed)
    mismatches, t_full, t_reduced = 0, 0.0, 0.0
    for _ in range(cfg.count):
        g = families.random_connected(rng.randint(2, cfg.max_n), rng.randrange(2**32))
        start = time.perf_counter()
        full = sdim_f(g)[0]
        t_full += time.perf_counter() - start
        start = time.perf_counter()
        reduced = sdim_f(g, reduced=True)[0]
        t_reduced += time.perf_counter() - start
        if full != reduced:
            mismatches += 1
            print(f"mismatch on n={g.n} edges={g.edges()}: {full} vs {reduced}")
    return mismatches, t_full, t_reduced


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--count", type=int, default=200)
    ap.add_argument("--max-n", type=int, default=12)
    ap.add_argument("--seed", type=int, default=1)
    ns = ap.parse_args()
    bad, tf, tr = run(CorpusConfig(ns.count, ns.max_n, ns.seed))
    print(f"{ns.count} graphs, {bad} mismatches, full LP {tf:.2f}s, reduced LP {tr:.2f}s")
    raise SystemExit(1 if bad else 0)


if __name__ == "__main__":
    main()
