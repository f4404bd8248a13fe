"""Verification and falsification campaigns over enumerated or sampled hosts."""

from __future__ import annotations

import hashlib
import json
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from typing import Iterator, Optional

from . import canon
from .coloring import check_lemma21, chromatic_number
from .digraph import MODES, ORIENTED, Digraph
from .errors import BlockPathError, CapExceeded, InternalInconsistency
from .io import parse_edge_list, to_edge_list
from .patterns import BlockPattern, P, contains_all_paths_report, find_pattern, flip, verify_witness
from .proofs import (
    find_P1k1,
    find_P1k1_via_origins,
    find_P1l1_at_least,
    find_reversed_three_block,
    find_three_block_decomposition,
    g,
    target_pattern,
)
from .rng import SAMPLERS, SplitMix64

SCHEMA_VERSION = 1

KINDS = (
    "theorem_t31",
    "theorem_t33",
    "lemma_l23",
    "tournament_paths",
    "conjecture_c32",
    "bound_probe",
    "origins",
    "lemma_l21",
)
FAMILIES = ("digraphs", "tournaments")
THEOREM_KINDS = ("theorem_t31", "theorem_t33", "lemma_l23", "origins", "lemma_l21")
BOUND_PROBE_KEEP = 20


@dataclass(frozen=True)
class Campaign:
    kind: str
    k: int = 1
    n_min: int = 1
    n_max: int = 4
    mode: str = ORIENTED
    strategy: str = "exhaustive"
    count: int = 0
    seed: Optional[int] = None
    family: str = "digraphs"
    dedupe: bool = False
    sampler: str = "uniform"
    m: Optional[int] = None
    i: Optional[int] = None
    cap: Optional[int] = None
    max_draws: Optional[int] = None

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown campaign kind {self.kind!r}")
        if self.mode not in MODES:
            raise ValueError(f"unknown mode {self.mode!r}")
        if self.family not in FAMILIES:
            raise ValueError(f"unknown family {self.family!r}")
        if self.strategy not in ("exhaustive", "sampled"):
            raise ValueError(f"unknown strategy {self.strategy!r}")
        if (self.strategy == "sampled") != (self.seed is not None):
            raise ValueError("a seed is required for sampled campaigns and only for them")
        if self.strategy == "sampled" and self.count < 1:
            raise ValueError("sampled campaigns need count >= 1")
        if self.sampler not in SAMPLERS:
            raise ValueError(f"unknown sampler {self.sampler!r}")
        if not 1 <= self.n_min <= self.n_max:
            raise ValueError("need 1 <= n_min <= n_max")
        if self.kind == "lemma_l23" and (self.m is None or self.i is None):
            raise ValueError("lemma_l23 campaigns need m and i")
        if self.kind == "tournament_paths" and self.family != "tournaments":
            raise ValueError("tournament_paths runs over the tournament family")
        if self.strategy == "exhaustive":
            if self.family == "tournaments":
                limit = self.cap or canon.TOURNAMENT_CAP
            else:
                limit = self.cap or (canon.DEDUPE_CAP if self.dedupe else canon.LABELED_CAP)
            if self.n_max > limit:
                raise CapExceeded(f"exhaustive {self.family} capped at order {limit}")

    def to_json(self) -> dict:
        return asdict(self)

    def key(self) -> str:
        blob = json.dumps(self.to_json(), sort_keys=True, separators=(",", ":"))
        return hashlib.sha256(blob.encode()).hexdigest()[:16]

    def threshold(self) -> Optional[int]:
        k = self.k
        return {
            "theorem_t31": k + 4,
            "theorem_t33": 2 * k + 1,
            "origins": 3 * k + 4,
            "conjecture_c32": k + 3,
            "lemma_l23": g(self.m, self.i) if self.kind == "lemma_l23" else None,
        }.get(self.kind)


@dataclass
class ScanReport:
    campaign: Campaign
    tested: int = 0
    skipped: int = 0
    chi_hist: dict = field(default_factory=dict)
    counterexamples: list = field(default_factory=list)
    failures: list = field(default_factory=list)
    witnesses: int = 0
    extra: dict = field(default_factory=dict)
    ms: int = 0

    def to_json(self) -> dict:
        c = self.campaign
        return {
            "v": SCHEMA_VERSION,
            "hash": c.key(),
            "kind": c.kind,
            "k": c.k,
            "n": c.n_max,
            "n_min": c.n_min,
            "mode": c.mode,
            "family": c.family,
            "strategy": c.strategy,
            "seed": c.seed,
            "campaign": c.to_json(),
            "tested": self.tested,
            "skipped": self.skipped,
            "chi_hist": {str(x): self.chi_hist[x] for x in sorted(self.chi_hist)},
            "counterexamples": self.counterexamples,
            "failures": self.failures,
            "witnesses": self.witnesses,
            "extra": self.extra,
            "ms": self.ms,
        }

    def dumps(self, with_time: bool = True) -> str:
        obj = self.to_json()
        if not with_time:
            obj.pop("ms")
        return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def _sort_key(entry: dict):
    try:
        cf = canon.canonical_form(parse_edge_list(entry["dg"])).hex()
    except (BlockPathError, KeyError):
        cf = ""
    return (cf, entry.get("dg", ""), entry.get("missing", ""), entry.get("error", ""))


# -- per-instance checks ------------------------------------------------------


def _has_P1l1_at_least(d: Digraph, k: int):
    for length in range(k, d.order - 2):
        w = find_pattern(d, P(1, length, 1))
        if w is not None:
            return w
    return None


def _failure(d: Digraph, err: Exception, finder: str) -> dict:
    trace = getattr(err, "trace", None)
    return {
        "dg": to_edge_list(d),
        "finder": finder,
        "error": f"{type(err).__name__}: {err}",
        "trace": trace.to_json() if trace is not None else None,
    }


def _run_finder(report: ScanReport, d: Digraph, finder: str, fn, want: BlockPattern | None = None,
                min_l: int | None = None):
    try:
        w, _ = fn()
    except InternalInconsistency as err:
        report.failures.append(_failure(d, err, finder))
        return
    ok = verify_witness(d, w)
    if want is not None:
        ok = ok and w.pattern == want
    if min_l is not None:
        b = w.pattern.blocks
        ok = ok and len(b) == 3 and b[0] == 1 and b[2] == 1 and b[1] >= min_l and w.pattern.first == "fwd"
    if ok:
        report.witnesses += 1
    else:
        report.failures.append({"dg": to_edge_list(d), "finder": finder,
                                "error": "returned witness failed verification", "trace": None})


def _check_instance(c: Campaign, d: Digraph, report: ScanReport) -> None:
    chi = chromatic_number(d).chi
    report.chi_hist[chi] = report.chi_hist.get(chi, 0) + 1
    k = c.k
    t = c.threshold()
    if t is not None and chi < t:
        report.skipped += 1
        return
    report.tested += 1
    dg = None

    def counter(missing: str):
        report.counterexamples.append({"dg": dg or to_edge_list(d), "chi": chi, "missing": missing})

    if c.kind == "theorem_t33":
        want = P(1, k, 1)
        if find_pattern(d, want) is None:
            counter(want.label)
        _run_finder(report, d, "t33", lambda: find_P1k1(d, k), want=want)
    elif c.kind == "origins":
        want = P(1, k, 1)
        if find_pattern(d, want) is None:
            counter(want.label)
        _run_finder(report, d, "origins", lambda: find_P1k1_via_origins(d, k), want=want)
    elif c.kind == "theorem_t31":
        if _has_P1l1_at_least(d, k) is None:
            counter(f"1,>={k},1/fwd")
        _run_finder(report, d, "t31", lambda: find_P1l1_at_least(d, k), min_l=k)
    elif c.kind == "conjecture_c32":
        if d.order < k + 3 or _has_P1l1_at_least(d, k) is None:
            counter(f"1,>={k},1/fwd")
    elif c.kind == "lemma_l23":
        want = target_pattern(k, c.i, c.m)
        for p in (want, flip(want)):
            if find_pattern(d, p) is None:
                counter(p.label)
        _run_finder(report, d, "l23", lambda: find_three_block_decomposition(d, k, c.i, c.m), want=want)
        _run_finder(report, d, "l24", lambda: find_reversed_three_block(d, k, c.i, c.m), want=flip(want))
    elif c.kind == "tournament_paths":
        rep = contains_all_paths_report(d, cap=max(7, d.order))
        for p in rep.missing:
            counter(p.label)
    elif c.kind == "bound_probe":
        probe = report.extra.setdefault("without", {})
        if d.order < k + 3 or find_pattern(d, P(1, k, 1)) is None:
            probe[str(chi)] = probe.get(str(chi), 0) + 1
            best = report.extra.get("max_chi_without", -1)
            if chi > best:
                report.extra["max_chi_without"] = chi
                report.counterexamples = []
            if chi == report.extra["max_chi_without"]:
                counter(P(1, k, 1).label)
                if len(report.counterexamples) > 4 * BOUND_PROBE_KEEP:
                    _keep_smallest(report)
    elif c.kind == "lemma_l21":
        applicable = 0
        for n in range(2, max(2, d.order) + 1):
            rep = check_lemma21(d, n)
            if rep.applicable:
                applicable += 1
                if not rep.bound_holds:
                    counter(f"chi<={2 * n}")
        report.extra["applicable_pairs"] = report.extra.get("applicable_pairs", 0) + applicable


def _keep_smallest(report: ScanReport) -> None:
    # the smallest entries by sort key, so shard-wise truncation composes
    report.counterexamples.sort(key=_sort_key)
    del report.counterexamples[BOUND_PROBE_KEEP:]


def reverify_counterexample(c: Campaign, entry: dict) -> bool:
    """Recheck a stored counterexample from its serialisation alone."""
    d = parse_edge_list(entry["dg"])
    chi = chromatic_number(d).chi
    if chi != entry["chi"]:
        return False
    missing = entry["missing"]
    if missing.startswith("chi<="):
        return chi > int(missing[5:])
    if ">=" in missing:
        return d.order < c.k + 3 or _has_P1l1_at_least(d, c.k) is None
    from .patterns import parse_pattern

    p = parse_pattern(missing)
    return p.order > d.order or find_pattern(d, p) is None


# -- instance streams -----------------------------------------------------------


def instances(c: Campaign, shard: Optional[tuple[int, int]] = None) -> Iterator[Digraph]:
    if c.strategy == "sampled":
        yield from _sampled(c)
        return
    for n in range(c.n_min, c.n_max + 1):
        if c.family == "tournaments":
            stream = canon.enumerate_tournaments(n, cap=c.cap or canon.TOURNAMENT_CAP)
            for idx, t in enumerate(stream):
                if shard is None or idx % shard[1] == shard[0]:
                    yield t
        else:
            yield from canon.enumerate_digraphs(n, c.mode, c.dedupe, c.cap, shard)


def _sampled(c: Campaign) -> Iterator[Digraph]:
    rng = SplitMix64(c.seed)
    sampler = SAMPLERS["tournament"] if c.family == "tournaments" else SAMPLERS[c.sampler]
    span = c.n_max - c.n_min + 1
    for _ in range(c.max_draws or 100 * c.count):
        n = c.n_min + rng.below(span)
        yield sampler(n, c.mode, rng)


def _run(c: Campaign, shard: Optional[tuple[int, int]]) -> ScanReport:
    report = ScanReport(c)
    for d in instances(c, shard):
        _check_instance(c, d, report)
        if c.strategy == "sampled" and report.tested >= c.count:
            break
    return report


def _finalize(report: ScanReport) -> ScanReport:
    c = report.campaign
    if c.kind == "bound_probe":
        _keep_smallest(report)
    report.counterexamples = [e for e in report.counterexamples if reverify_counterexample(c, e)]
    report.counterexamples.sort(key=_sort_key)
    report.failures.sort(key=_sort_key)
    if c.kind == "bound_probe" and "max_chi_without" in report.extra:
        report.extra["f_lower_bound"] = report.extra["max_chi_without"] + 1
    if "without" in report.extra:
        report.extra["without"] = dict(sorted(report.extra["without"].items(), key=lambda kv: int(kv[0])))
    return report


def merge_reports(parts: list[ScanReport]) -> ScanReport:
    """Combine shard reports of one campaign."""
    c = parts[0].campaign
    out = ScanReport(c)
    for r in parts:
        if r.campaign != c:
            raise ValueError("cannot merge reports of different campaigns")
        out.tested += r.tested
        out.skipped += r.skipped
        out.witnesses += r.witnesses
        out.ms = max(out.ms, r.ms)
        for x, n in r.chi_hist.items():
            out.chi_hist[x] = out.chi_hist.get(x, 0) + n
        out.counterexamples += r.counterexamples
        out.failures += r.failures
        for key, val in r.extra.items():
            if key == "without":
                w = out.extra.setdefault("without", {})
                for chi, n in val.items():
                    w[chi] = w.get(chi, 0) + n
            elif key == "max_chi_without":
                out.extra[key] = max(out.extra.get(key, -1), val)
            elif key == "applicable_pairs":
                out.extra[key] = out.extra.get(key, 0) + val
    if c.kind == "bound_probe" and "max_chi_without" in out.extra:
        best = out.extra["max_chi_without"]
        out.counterexamples = [e for e in out.counterexamples if e["chi"] == best]
    return _finalize(out)


def _shard_job(args):
    c, shard = args
    return _run(c, shard)


def run_campaign(c: Campaign, shards: int = 1, workers: int = 1) -> ScanReport:
    """Run a campaign; exhaustive campaigns may be split into shards that run
    in parallel worker processes and are merged deterministically."""
    start = time.perf_counter()
    if shards > 1 and c.strategy == "exhaustive":
        jobs = [(c, (s, shards)) for s in range(shards)]
        if workers > 1:
            with ProcessPoolExecutor(max_workers=workers) as pool:
                parts = list(pool.map(_shard_job, jobs))
        else:
            parts = [_shard_job(j) for j in jobs]
        report = merge_reports(parts)
    else:
        report = _finalize(_run(c, None))
    report.ms = int((time.perf_counter() - start) * 1000)
    return report
