"""Command-line entry point: ``blockpath <subcommand> ...``.

Exit codes: 0 success or found, 1 not found, 2 usage error, 3 internal
inconsistency in a proof-guided finder.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import canon
from .coloring import chromatic_number
from .digraph import GENERAL, MODES, ORIENTED, Digraph, fixture
from .errors import BlockPathError, CapExceeded, InternalInconsistency, PreconditionError
from .harness import KINDS, THEOREM_KINDS, Campaign, run_campaign
from .io import parse_any, read_digraphs, to_digraph6, to_edge_list
from .patterns import BWD, FWD, find_pattern, parse_pattern, verify_witness
from .proofs import (
    extreme_index,
    f_upper_bound,
    find_P1k1,
    find_P1k1_via_origins,
    find_P1l1_at_least,
    find_three_block_decomposition,
    g_extreme,
    tree_bound,
)
from .store import store_append

EXIT_OK, EXIT_NOT_FOUND, EXIT_USAGE, EXIT_INTERNAL = 0, 1, 2, 3


class UsageError(Exception):
    pass


def load_inputs(source: str) -> list[Digraph]:
    """Digraphs from a file path, ``-`` for stdin, or ``fixture:NAME``."""
    if source.startswith("fixture:"):
        try:
            return [fixture(source[len("fixture:"):])]
        except (KeyError, TypeError) as err:
            raise UsageError(f"unknown fixture {source!r}") from err
    if source == "-":
        return parse_any(sys.stdin.read())
    if not os.path.exists(source):
        raise UsageError(f"no such file: {source}")
    return read_digraphs(source)


def cmd_chi(args) -> int:
    for d in load_inputs(args.file):
        cert = chromatic_number(d)
        print(json.dumps({"chi": cert.chi, "coloring": list(cert.coloring), "clique": list(cert.clique),
                          "exhaustive": cert.exhaustive}))
    return EXIT_OK


def cmd_find(args) -> int:
    try:
        p = parse_pattern(args.pattern, args.first)
    except BlockPathError as err:
        raise UsageError(str(err)) from err
    code = EXIT_OK
    for d in load_inputs(args.file):
        w = find_pattern(d, p) if p.order <= d.order else None
        if w is None:
            print(json.dumps({"pattern": p.label, "found": False}))
            code = EXIT_NOT_FOUND
        else:
            print(json.dumps({"pattern": p.label, "found": True, "vertices": list(w.vertices)}))
    return code


def _prove_one(args, d: Digraph):
    if args.theorem == "t31":
        return find_P1l1_at_least(d, args.k)
    if args.theorem == "t33":
        return find_P1k1(d, args.k)
    if args.theorem == "origins":
        return find_P1k1_via_origins(d, args.k)
    if args.m is None or args.i is None:
        raise UsageError("--theorem l23 needs --m and --i")
    return find_three_block_decomposition(d, args.k, args.i, args.m)


def cmd_prove(args) -> int:
    for d in load_inputs(args.file):
        try:
            w, trace = _prove_one(args, d)
        except PreconditionError as err:
            raise UsageError(str(err)) from err
        except InternalInconsistency as err:
            print(f"internal inconsistency: {err}", file=sys.stderr)
            if args.trace and err.trace is not None:
                sys.stdout.write(err.trace.jsonl())
            return EXIT_INTERNAL
        out = {"theorem": args.theorem, "pattern": w.pattern.label, "vertices": list(w.vertices),
               "verified": verify_witness(d, w)}
        print(json.dumps(out))
        if args.trace:
            sys.stdout.write(trace.jsonl())
    return EXIT_OK


def cmd_enum(args) -> int:
    fmt = to_digraph6 if args.format == "d6" else to_edge_list
    if args.tournaments:
        stream = canon.enumerate_tournaments(args.n, cap=args.cap or canon.TOURNAMENT_CAP)
    else:
        stream = canon.enumerate_digraphs(args.n, args.mode, dedupe=args.dedupe, cap=args.cap)
    count = 0
    for d in stream:
        count += 1
        if not args.count:
            out = fmt(d)
            sys.stdout.write(out if out.endswith("\n") else out + "\n")
    if args.count:
        print(count)
    return EXIT_OK


def cmd_scan(args) -> int:
    seed = args.seed
    if os.environ.get("BLOCKPATH_SEED"):
        seed = int(os.environ["BLOCKPATH_SEED"])
    sampled = args.samples is not None
    if sampled and seed is None:
        raise UsageError("--samples needs --seed (or BLOCKPATH_SEED)")
    family = args.family or ("tournaments" if args.campaign == "tournament_paths" else "digraphs")
    try:
        c = Campaign(
            kind=args.campaign, k=args.k, n_min=args.n_min, n_max=args.n_max, mode=args.mode,
            strategy="sampled" if sampled else "exhaustive", count=args.samples or 0,
            seed=seed if sampled else None, family=family, dedupe=args.dedupe, sampler=args.sampler,
            m=args.m, i=args.i, cap=args.cap,
        )
    except (ValueError, CapExceeded) as err:
        raise UsageError(str(err)) from err
    report = run_campaign(c, shards=args.workers, workers=args.workers)
    print(report.dumps())
    if args.store:
        if not store_append(args.store, report):
            print(f"campaign {c.key()} already stored in {args.store}", file=sys.stderr)
    if report.failures:
        return EXIT_INTERNAL
    if report.counterexamples and args.campaign in THEOREM_KINDS + ("conjecture_c32",):
        return EXIT_NOT_FOUND
    return EXIT_OK


def cmd_bounds(args) -> int:
    if args.m < 4:
        raise UsageError("--m must be >= 4")
    print(json.dumps({"m": args.m, "i": extreme_index(args.m), "g_extreme": g_extreme(args.m),
                      "burr": tree_bound(args.m), "f_upper_bound": f_upper_bound(args.m)}))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="blockpath", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)

    s = sub.add_parser("chi", help="exact chromatic number with a colouring")
    s.add_argument("file")
    s.set_defaults(func=cmd_chi)

    s = sub.add_parser("find", help="find a block path pattern")
    s.add_argument("--pattern", required=True, help="comma-separated block lengths, e.g. 1,2,1")
    s.add_argument("--first", choices=(FWD, BWD), default=FWD)
    s.add_argument("file")
    s.set_defaults(func=cmd_find)

    s = sub.add_parser("prove", help="run a proof-guided finder and print its witness")
    s.add_argument("--theorem", required=True, choices=("t31", "t33", "l23", "origins"))
    s.add_argument("--k", type=int, required=True)
    s.add_argument("--m", type=int)
    s.add_argument("--i", type=int)
    s.add_argument("--trace", action="store_true", help="emit the step trace as JSON lines")
    s.add_argument("file")
    s.set_defaults(func=cmd_prove)

    s = sub.add_parser("enum", help="enumerate tournaments or digraphs")
    g = s.add_mutually_exclusive_group(required=True)
    g.add_argument("--tournaments", action="store_true")
    g.add_argument("--digraphs", action="store_true")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--mode", choices=MODES, default=ORIENTED)
    s.add_argument("--dedupe", action="store_true", help="one digraph per isomorphism class")
    s.add_argument("--cap", type=int, help="raise the enumeration order cap")
    s.add_argument("--format", choices=("el", "d6"), default="el")
    s.add_argument("--count", action="store_true", help="print only the number of digraphs")
    s.set_defaults(func=cmd_enum)

    s = sub.add_parser("scan", help="run a verification or falsification campaign")
    s.add_argument("--campaign", required=True, choices=KINDS)
    s.add_argument("--k", type=int, default=1)
    s.add_argument("--n-min", type=int, default=1)
    s.add_argument("--n-max", type=int, required=True)
    s.add_argument("--mode", choices=(ORIENTED, GENERAL), default=ORIENTED)
    s.add_argument("--family", choices=("digraphs", "tournaments"))
    s.add_argument("--dedupe", action="store_true")
    s.add_argument("--samples", type=int, help="number of threshold-meeting samples to test")
    s.add_argument("--seed", type=int)
    s.add_argument("--sampler", choices=("uniform", "dense", "tournament"), default="uniform")
    s.add_argument("--m", type=int)
    s.add_argument("--i", type=int)
    s.add_argument("--cap", type=int)
    s.add_argument("--workers", type=int, default=1)
    s.add_argument("--store", help="append the report to this JSONL store")
    s.set_defaults(func=cmd_scan)

    s = sub.add_parser("bounds", help="print the g-sequence bound for paths of order m")
    s.add_argument("--m", type=int, required=True)
    s.set_defaults(func=cmd_bounds)
    return ap


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return args.func(args)
    except UsageError as err:
        print(f"blockpath: {err}", file=sys.stderr)
        return EXIT_USAGE
    except InternalInconsistency as err:
        print(f"blockpath: internal inconsistency: {err}", file=sys.stderr)
        return EXIT_INTERNAL
    except (BlockPathError, ValueError) as err:
        print(f"blockpath: {err}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
