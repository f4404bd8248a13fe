"""Measure how far conjecture sampling can go before colouring dominates.

For each order, time the chromatic-number computation and the pattern search
on seeded dense samples and report throughput and the share of hosts that
meet the conjecture's threshold.
"""

import argparse
import time

from blockpath.coloring import chromatic_number
from blockpath.digraph import ORIENTED
from blockpath.patterns import P, find_pattern
from blockpath.rng import SAMPLERS, SplitMix64


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--k", type=int, default=2)
    ap.add_argument("--orders", type=int, nargs="+", default=[6, 8, 10, 12, 14])
    ap.add_argument("--samples", type=int, default=300)
    ap.add_argument("--sampler", choices=sorted(SAMPLERS), default="dense")
    ap.add_argument("--seed", type=int, default=7)
    args = ap.parse_args()
    print(f"{'n':>3} {'chi ms':>8} {'match ms':>9} {'meets k+3':>10}")
    for n in args.orders:
        rng = SplitMix64(args.seed + n)
        t_chi = t_match = 0.0
        meets = 0
        for _ in range(args.samples):
            d = SAMPLERS[args.sampler](n, ORIENTED, rng)
            t0 = time.perf_counter()
            c = chromatic_number(d).chi
            t1 = time.perf_counter()
            if c >= args.k + 3:
                meets += 1
                any(find_pattern(d, P(1, l, 1)) for l in range(args.k, n - 2))
            t2 = time.perf_counter()
            t_chi += t1 - t0
            t_match += t2 - t1
        s = args.samples
        print(f"{n:>3} {1000 * t_chi / s:>8.3f} {1000 * t_match / s:>9.3f} {meets / s:>10.2%}")


if __name__ == "__main__":
    main()
