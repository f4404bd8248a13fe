import pytest
from hypothesis import given, settings

from blockpath.canon import digraph_from_states
from blockpath.coloring import (
    check_lemma21,
    chromatic_number,
    clique_number,
    critical_subdigraph,
    gallai_roy_path,
    has_chi_at_least,
    is_k_colorable,
)
from blockpath.digraph import (
    GENERAL,
    ORIENTED,
    arcless,
    build,
    delete_vertex,
    directed_cycle,
    fixture,
    mask_of,
    reverse,
    transitive_tournament,
)
from blockpath.errors import PreconditionError

from .conftest import digraphs
from .oracles import brute_chi


@pytest.mark.parametrize("d, want", [
    (transitive_tournament(4), 4),
    (directed_cycle(5), 3),
    (arcless(6), 1),
    (arcless(0), 0),
    (directed_cycle(2), 2),
    (fixture("paley7"), 7),
])
def test_chromatic_number_examples(d, want):
    cert = chromatic_number(d)
    assert cert.chi == want
    assert cert.check(d)


def test_is_k_colorable_examples():
    c5 = directed_cycle(5)
    assert is_k_colorable(c5, 2) is None
    col = is_k_colorable(c5, 3)
    assert col is not None and all(col[u] != col[v] for u, v in c5.arcs())
    assert is_k_colorable(fixture("regular5"), 4) is None


def test_critical_subdigraph_examples():
    tt5_plus = build(6, [(i, j) for i in range(5) for j in range(i + 1, 5)])
    sub, mp = critical_subdigraph(tt5_plus, 5)
    assert sub == transitive_tournament(5) and mp == (0, 1, 2, 3, 4)
    c5 = directed_cycle(5)
    assert critical_subdigraph(c5, 3) == (c5, (0, 1, 2, 3, 4))
    sub, mp = critical_subdigraph(transitive_tournament(6), 4)
    assert sub == transitive_tournament(4)
    assert chromatic_number(sub).chi == 4
    assert min(sub.degree(v) for v in sub.vertices) == 3
    with pytest.raises(PreconditionError):
        critical_subdigraph(c5, 4)


def test_gallai_roy_examples():
    assert gallai_roy_path(transitive_tournament(6)) == [0, 1, 2, 3, 4, 5]
    p = gallai_roy_path(directed_cycle(5))
    assert len(p) >= 3
    assert all(directed_cycle(5).has_arc(a, b) for a, b in zip(p, p[1:]))
    assert gallai_roy_path(arcless(3)) == [0]


def test_lemma21_examples():
    rep = check_lemma21(directed_cycle(5), 2)
    assert rep.applicable and rep.chi == 3 and rep.bound_holds
    rep = check_lemma21(transitive_tournament(5), 2)
    assert not rep.applicable and rep.max_in_degree == 4 and rep.bound_holds is None
    rep = check_lemma21(fixture("regular5"), 2)
    assert rep.max_in_degree == 2 and rep.clique_number == 5 and not rep.applicable
    with pytest.raises(PreconditionError):
        check_lemma21(directed_cycle(5), 1)


@given(digraphs(max_order=7))
def test_chi_matches_colourability_sweep(d):
    cert = chromatic_number(d)
    assert cert.check(d)
    if d.order:
        assert is_k_colorable(d, cert.chi) is not None
    if cert.chi > 1:
        assert is_k_colorable(d, cert.chi - 1) is None
    assert has_chi_at_least(d, cert.chi) and not has_chi_at_least(d, cert.chi + 1)
    assert clique_number(d) <= cert.chi


@settings(max_examples=40)
@given(digraphs(max_order=6))
def test_chi_matches_brute_force(d):
    assert chromatic_number(d).chi == brute_chi(d)


@given(digraphs(max_order=8))
def test_chi_invariant_under_reverse(d):
    assert chromatic_number(reverse(d)).chi == chromatic_number(d).chi


@given(digraphs(min_order=1, max_order=8))
def test_gallai_roy_path_is_long_and_non_extendable(d):
    p = gallai_roy_path(d)
    assert len(set(p)) == len(p)
    assert all(d.has_arc(a, b) for a, b in zip(p, p[1:]))
    assert len(p) >= chromatic_number(d).chi
    on = mask_of(p)
    assert not d.out[p[-1]] & ~on
    assert not d.inn[p[0]] & ~on


@settings(max_examples=50)
@given(digraphs(min_order=1, max_order=8))
def test_critical_subdigraph_is_critical(d):
    t = chromatic_number(d).chi
    sub, mp = critical_subdigraph(d, t)
    assert chromatic_number(sub).chi == t
    assert all(d.has_arc(mp[u], mp[v]) == sub.has_arc(u, v) for u in sub.vertices for v in sub.vertices)
    assert all(sub.degree(v) >= t - 1 for v in sub.vertices)
    for v in sub.vertices:
        assert chromatic_number(delete_vertex(sub, v)[0]).chi == t - 1


def test_lemma21_exhaustive_order_5():
    # every applicable (digraph, n) pair on up to 5 vertices keeps chi <= 2n
    from blockpath.canon import enumerate_digraphs

    for n in range(1, 6):
        for d in enumerate_digraphs(n, ORIENTED, dedupe=True):
            for bound in range(2, 4):
                rep = check_lemma21(d, bound)
                assert rep.bound_holds in (None, True)


@given(digraphs(mode=GENERAL, max_order=7))
def test_lemma21_mirrored_form_is_reverse(d):
    for bound in (2, 3):
        a = check_lemma21(d, bound)
        b = check_lemma21(reverse(d), bound)
        assert a.applicable_out == b.applicable and a.bound_holds_out == b.bound_holds


def test_digraph_from_states_digon():
    d = digraph_from_states(2, [3], GENERAL)
    assert chromatic_number(d).chi == 2
