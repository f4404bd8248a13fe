import json

import pytest

from blockpath.canon import is_isomorphic
from blockpath.digraph import GENERAL, ORIENTED, fixture
from blockpath.errors import CapExceeded
from blockpath.harness import Campaign, merge_reports, reverify_counterexample, run_campaign
from blockpath.io import parse_edge_list
from blockpath.store import store_append, store_query


def test_campaign_validation():
    with pytest.raises(ValueError):
        Campaign("theorem_t99")
    with pytest.raises(ValueError):
        Campaign("theorem_t33", strategy="sampled", count=5)  # no seed
    with pytest.raises(ValueError):
        Campaign("theorem_t33", seed=3)  # seed without sampling
    with pytest.raises(ValueError):
        Campaign("lemma_l23", k=1)
    with pytest.raises(CapExceeded):
        Campaign("theorem_t33", n_max=7)
    with pytest.raises(CapExceeded):
        Campaign("tournament_paths", family="tournaments", n_max=9)
    Campaign("tournament_paths", family="tournaments", n_max=9, cap=9)


def test_conjecture_scan_order_4_has_no_counterexample():
    r = run_campaign(Campaign("conjecture_c32", k=1, n_max=4))
    assert r.counterexamples == [] and r.failures == []
    # the 64 labelled four-vertex tournaments are exactly the chi=4 instances
    assert r.tested == r.chi_hist[4] == 64
    assert r.tested + r.skipped == sum(r.chi_hist.values()) == 1 + 3 + 27 + 729


def test_tournament_paths_order_5():
    r = run_campaign(Campaign("tournament_paths", family="tournaments", n_min=5, n_max=5))
    assert r.tested == 12
    hosts = {e["dg"] for e in r.counterexamples}
    assert len(hosts) == 1
    assert is_isomorphic(parse_edge_list(hosts.pop()), fixture("regular5"))
    assert sorted(e["missing"] for e in r.counterexamples) == ["1,1,1,1/bwd", "1,1,1,1/fwd"]


def test_t33_over_order_5_tournaments():
    r = run_campaign(Campaign("theorem_t33", k=2, family="tournaments", n_min=5, n_max=5))
    assert (r.tested, r.witnesses, len(r.failures), len(r.counterexamples)) == (12, 12, 0, 0)


def test_theorem_campaigns_are_clean_at_small_sizes():
    for c in [
        Campaign("theorem_t31", k=1, n_max=5, dedupe=True),
        Campaign("theorem_t33", k=2, n_max=5, dedupe=True, mode=GENERAL),
        Campaign("origins", k=1, family="tournaments", n_min=7, n_max=7),
        Campaign("lemma_l23", k=1, m=4, i=1, family="tournaments", n_min=4, n_max=5),
        Campaign("lemma_l21", n_max=4),
    ]:
        r = run_campaign(c)
        assert r.tested > 0
        assert r.counterexamples == [] and r.failures == [], c.kind


def test_sampled_campaign_is_reproducible():
    c = Campaign("theorem_t33", k=2, n_min=6, n_max=8, strategy="sampled", count=40, seed=99, sampler="dense")
    a, b = run_campaign(c), run_campaign(c)
    assert a.dumps(with_time=False) == b.dumps(with_time=False)
    assert a.tested == 40 and a.witnesses == 40
    other = run_campaign(Campaign("theorem_t33", k=2, n_min=6, n_max=8, strategy="sampled", count=40,
                                  seed=100, sampler="dense"))
    assert other.chi_hist != a.chi_hist or other.skipped != a.skipped


@pytest.mark.parametrize("c", [
    Campaign("bound_probe", k=1, n_max=4, mode=GENERAL),
    Campaign("theorem_t31", k=1, n_max=5),
    Campaign("tournament_paths", family="tournaments", n_min=3, n_max=6),
])
def test_sharded_run_equals_unsharded(c):
    whole = run_campaign(c)
    for shards in (2, 3):
        assert run_campaign(c, shards=shards).dumps(with_time=False) == whole.dumps(with_time=False)


def test_parallel_shards():
    c = Campaign("theorem_t33", k=2, n_max=5, dedupe=True)
    assert run_campaign(c, shards=3, workers=3).dumps(False) == run_campaign(c).dumps(False)


def test_merge_rejects_mixed_campaigns():
    a = run_campaign(Campaign("conjecture_c32", k=1, n_max=3))
    b = run_campaign(Campaign("conjecture_c32", k=1, n_max=2))
    with pytest.raises(ValueError):
        merge_reports([a, b])


def test_bound_probe_certificates_reverify():
    c = Campaign("bound_probe", k=1, n_max=4, mode=ORIENTED, dedupe=True)
    r = run_campaign(c)
    # P(1,1,1) needs four vertices; the four-vertex tournaments all contain it
    assert r.extra["max_chi_without"] == 3 and r.extra["f_lower_bound"] == 4
    assert r.counterexamples
    for e in r.counterexamples:
        assert reverify_counterexample(c, e)
    forged = dict(r.counterexamples[0], chi=r.counterexamples[0]["chi"] + 1)
    assert not reverify_counterexample(c, forged)


def test_report_schema():
    r = run_campaign(Campaign("conjecture_c32", k=1, n_max=3))
    obj = json.loads(r.dumps())
    for key in ("v", "kind", "k", "n", "mode", "strategy", "seed", "tested", "chi_hist",
                "counterexamples", "failures", "ms"):
        assert key in obj
    assert obj["v"] == 1 and obj["n"] == 3


def test_store_round_trip_and_duplicates(tmp_path):
    path = tmp_path / "runs.jsonl"
    r1 = run_campaign(Campaign("conjecture_c32", k=1, n_max=3))
    r2 = run_campaign(Campaign("conjecture_c32", k=1, n_max=4, mode=GENERAL))
    assert store_append(path, r1) and store_append(path, r2)
    assert not store_append(path, r1)  # same campaign hash
    assert len(path.read_text().splitlines()) == 2
    got = store_query(path, kind="conjecture_c32", mode=GENERAL)
    assert [x["hash"] for x in got.reports] == [r2.campaign.key()]
    assert len(store_query(path, n=3).reports) == 1
    assert store_query(tmp_path / "absent.jsonl").reports == []


def test_store_tolerates_corrupt_lines(tmp_path):
    path = tmp_path / "runs.jsonl"
    r1 = run_campaign(Campaign("conjecture_c32", k=1, n_max=3))
    store_append(path, r1)
    with path.open("a") as fh:
        fh.write('{"v": 1, "hash": "trunc\n')
        fh.write('[1, 2, 3]\n')
    store_append(path, run_campaign(Campaign("conjecture_c32", k=1, n_max=2)))
    res = store_query(path)
    assert len(res.reports) == 2
    assert [line for line, _ in res.corrupt] == [2, 3]
