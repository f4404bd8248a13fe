"""Lower bounds on the least chromatic number forcing P(1,k,1).

For each k, scan every digraph up to the given order and report the largest
chromatic number seen on a host without P(1,k,1), with a few certificates.
"""

import argparse

from blockpath.digraph import GENERAL, ORIENTED
from blockpath.harness import Campaign, run_campaign


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--k", type=int, nargs="+", default=[1, 2])
    ap.add_argument("--n-max", type=int, default=5)
    ap.add_argument("--show", type=int, default=2, help="certificates printed per row")
    args = ap.parse_args()
    for k in args.k:
        for mode in (ORIENTED, GENERAL):
            n_max = min(args.n_max, 4) if mode == GENERAL else args.n_max
            r = run_campaign(Campaign("bound_probe", k=k, n_max=n_max, mode=mode, dedupe=True))
            best = r.extra.get("max_chi_without")
            print(f"k={k} {mode:<8} n<={n_max}: lacking P(1,{k},1) by chi {r.extra.get('without')}; "
                  f"bound >= {r.extra.get('f_lower_bound')} ({r.ms} ms)")
            for e in r.counterexamples[: args.show]:
                print("   chi", best, e["dg"].replace("\n", " | ").strip(" |"))


if __name__ == "__main__":
    main()
