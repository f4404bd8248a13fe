"""Run the desk-scale verification and falsification campaigns and store the reports.

Every theorem campaign should come back with zero counterexamples and zero
finder failures; the conjecture campaigns are falsification searches and
report either nothing or re-verifiable counterexample certificates.
"""

import argparse
import logging

from blockpath.digraph import GENERAL, ORIENTED
from blockpath.harness import Campaign, run_campaign
from blockpath.store import store_append

log = logging.getLogger("campaigns")


def campaigns(quick: bool):
    samples = 200 if quick else 2000
    out = [
        Campaign("tournament_paths", family="tournaments", n_min=3, n_max=6 if quick else 7),
        Campaign("conjecture_c32", k=1, n_max=4),
        Campaign("conjecture_c32", k=1, n_max=5, mode=GENERAL, dedupe=True),
        Campaign("theorem_t33", k=2, family="tournaments", n_min=5, n_max=6 if quick else 7),
        Campaign("theorem_t31", k=1, n_max=5, dedupe=True),
        Campaign("lemma_l23", k=1, m=5, i=1, family="tournaments", n_min=8, n_max=8),
        Campaign("lemma_l21", n_max=5),
    ]
    for mode in (ORIENTED, GENERAL):
        out += [
            Campaign("theorem_t33", k=2, n_min=6, n_max=9, mode=mode, strategy="sampled",
                     count=samples, seed=1, sampler="dense"),
            Campaign("theorem_t31", k=2, n_min=6, n_max=9, mode=mode, strategy="sampled",
                     count=samples, seed=2, sampler="dense"),
            Campaign("conjecture_c32", k=2, n_min=6, n_max=9, mode=mode, strategy="sampled",
                     count=samples, seed=3, sampler="dense"),
            Campaign("conjecture_c32", k=3, n_min=7, n_max=10, mode=mode, strategy="sampled",
                     count=samples // 4, seed=4, sampler="dense"),
        ]
    return out


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--store", default="results/campaigns.jsonl")
    ap.add_argument("--quick", action="store_true", help="smaller sizes and sample counts")
    args = ap.parse_args()
    logging.basicConfig(level=logging.INFO, format="%(message)s")
    for c in campaigns(args.quick):
        if c.kind == "lemma_l23" and args.quick:
            continue
        r = run_campaign(c)
        stored = store_append(args.store, r)
        log.info("%-16s k=%d n=%d..%d %-8s %-10s tested=%-6d skipped=%-6d cx=%-3d fail=%d %6dms%s",
                 c.kind, c.k, c.n_min, c.n_max, c.mode, c.strategy, r.tested, r.skipped,
                 len(r.counterexamples), len(r.failures), r.ms, "" if stored else " (already stored)")


if __name__ == "__main__":
    main()
