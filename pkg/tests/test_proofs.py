import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from blockpath.canon import enumerate_tournaments
from blockpath.coloring import chromatic_number
from blockpath.digraph import GENERAL, ORIENTED, directed_cycle, fixture, reverse, transitive_tournament
from blockpath.errors import PreconditionError
from blockpath.patterns import P, Pbar, find_pattern, flip, verify_witness
from blockpath.proofs import (
    extreme_index,
    f_upper_bound,
    find_P1k1,
    find_P1k1_via_origins,
    find_P1l1_at_least,
    find_reversed_three_block,
    find_three_block_decomposition,
    g,
    g_extreme,
    g_extreme_closed_form_x4,
    target_pattern,
    tree_bound,
)
from blockpath.rng import SplitMix64, random_dense_digraph

from .trace_check import check_l23, check_origins, check_t31, check_t33


def _g_oracle(m, i):
    # unrolled sum: g(m, i) = g(m-i, 0) + 2 * sum_{j<i} (m-j-3), except that
    # a chain passing through (4, 1) stops there at the fixed value 4
    if m - i == 3 and i >= 1:
        return 4 + 2 * sum(m - j - 3 for j in range(i - 1))
    return (m - i) + 2 * sum(m - j - 3 for j in range(i))


# -- g sequence --------------------------------------------------------------


def test_g_examples():
    assert g(4, 0) == 4 and g(4, 1) == 4
    assert (g(5, 1), g(6, 2), g(7, 2)) == (8, 14, 19)
    assert (g_extreme(6), g_extreme(5), g_extreme(4)) == (14, 8, 4)
    assert (extreme_index(6), extreme_index(7)) == (2, 2)


def test_g_domain():
    for m, i in [(3, 0), (4, 2), (5, 2), (6, 3), (8, -1)]:
        with pytest.raises(PreconditionError):
            g(m, i)


@given(st.integers(4, 150), st.data())
def test_g_matches_unrolled_sum(m, data):
    i = data.draw(st.integers(0, m // 2 - 1))
    assert g(m, i) == _g_oracle(m, i)


def test_g_increasing_in_i():
    for m in range(4, 101):
        for i in range(1, m // 2):
            assert g(m, i) >= g(m, i - 1)


def test_extreme_closed_forms_from_m5():
    for m in range(5, 201):
        assert 4 * g_extreme(m) == g_extreme_closed_form_x4(m)
        assert 4 * g_extreme(m) <= 3 * m * m


def test_extreme_closed_form_departs_at_m4():
    # the even-m sum unrolls to g(m/2+1, 0), which skips the fixed value g(4,1)=4
    assert g_extreme(4) == 4 and g_extreme_closed_form_x4(4) == 20


def test_f_upper_bound_examples():
    assert [f_upper_bound(m) for m in (4, 6, 10)] == [4, 14, 50]
    assert tree_bound(6) == 25
    assert f_upper_bound(5) == min(8, 16)


# -- finders -----------------------------------------------------------------


def test_t31_examples():
    for n, k in [(6, 2), (7, 3)]:
        d = transitive_tournament(n)
        w, tr = find_P1l1_at_least(d, k)
        assert verify_witness(d, w) and w.pattern.blocks[1] >= k
        assert check_t31(d, tr, k) == []
    with pytest.raises(PreconditionError):
        find_P1l1_at_least(directed_cycle(5), 1)


def test_origins_examples():
    for n, k in [(10, 2), (7, 1)]:
        d = transitive_tournament(n)
        w, tr = find_P1k1_via_origins(d, k)
        assert verify_witness(d, w) and w.pattern == P(1, k, 1)
        assert check_origins(d, tr, k) == []
    with pytest.raises(PreconditionError):
        find_P1k1_via_origins(transitive_tournament(6), 2)


def test_t33_examples():
    for d, k in [(fixture("regular5"), 2), (transitive_tournament(7), 3)]:
        w, tr = find_P1k1(d, k)
        assert verify_witness(d, w) and w.pattern == P(1, k, 1)
        assert find_pattern(d, P(1, k, 1)) is not None
        assert check_t33(d, tr, k) == []
    with pytest.raises(PreconditionError):
        find_P1k1(directed_cycle(5), 2)
    with pytest.raises(PreconditionError):
        find_P1k1(transitive_tournament(5), 1)


def test_t33_every_tournament_of_order_5():
    ts = list(enumerate_tournaments(5))
    assert len(ts) == 12
    for t in ts:
        w, tr = find_P1k1(t, 2)
        assert verify_witness(t, w)
        assert check_t33(t, tr, 2) == []


def test_l23_examples():
    tt8 = transitive_tournament(8)
    w, tr = find_three_block_decomposition(tt8, 1, 1, 5)
    assert w.pattern == P(1, 2, 1) and verify_witness(tt8, w)
    assert check_l23(tt8, tr) == []
    w, tr = find_reversed_three_block(tt8, 1, 1, 5)
    assert w.pattern == Pbar(1, 2, 1) and verify_witness(tt8, w)
    # the same sequence is a forward witness in the reversed host
    assert verify_witness(reverse(tt8), type(w)(w.vertices, flip(w.pattern)))
    assert flip(flip(w.pattern)) == w.pattern


def test_l23_base_case_m4():
    for t in enumerate_tournaments(4):
        w, tr = find_three_block_decomposition(t, 1, 1, 4)
        assert w.pattern == P(1, 1, 1) and verify_witness(t, w)
        assert "BASE" in tr.branches()


def test_l23_preconditions():
    with pytest.raises(PreconditionError):
        find_three_block_decomposition(transitive_tournament(7), 1, 1, 5)  # chi 7 = g(5,1) - 1
    with pytest.raises(PreconditionError):
        find_reversed_three_block(transitive_tournament(7), 1, 1, 5)
    with pytest.raises(PreconditionError):
        find_three_block_decomposition(transitive_tournament(8), 3, 1, 5)  # k > m-2-i
    assert target_pattern(2, 1, 5) == P(2, 1, 1)
    assert target_pattern(1, 0, 4) == P(1, 2)


@pytest.mark.parametrize("k", [1, 2])
def test_l23_all_order_8_tournaments_sample(k):
    for idx, t in enumerate(enumerate_tournaments(8)):
        if idx % 97:
            continue
        for finder in (find_three_block_decomposition, find_reversed_three_block):
            w, tr = finder(t, k, 1, 5)
            assert verify_witness(t, w)
        assert check_l23(t, find_three_block_decomposition(t, k, 1, 5)[1]) == []


# -- random hosts ------------------------------------------------------------


@st.composite
def dense_hosts(draw, n_min, n_max, mode=None):
    seed = draw(st.integers(0, 2**64 - 1))
    rng = SplitMix64(seed)
    n = draw(st.integers(n_min, n_max))
    m = draw(st.sampled_from([ORIENTED, GENERAL])) if mode is None else mode
    return random_dense_digraph(n, m, rng)


@settings(max_examples=150)
@given(dense_hosts(5, 10), st.sampled_from([2, 3]))
def test_t33_on_random_hosts(d, k):
    if chromatic_number(d).chi < 2 * k + 1:
        return
    w, tr = find_P1k1(d, k)
    assert w.pattern == P(1, k, 1) and verify_witness(d, w)
    assert check_t33(d, tr, k) == []


@settings(max_examples=100)
@given(dense_hosts(5, 10), st.sampled_from([1, 2, 3]))
def test_t31_on_random_hosts(d, k):
    if chromatic_number(d).chi < k + 4:
        return
    w, tr = find_P1l1_at_least(d, k)
    assert verify_witness(d, w) and w.pattern.blocks[1] >= k
    assert check_t31(d, tr, k) == []


@settings(max_examples=60)
@given(dense_hosts(7, 11))
def test_origins_on_random_hosts(d):
    if chromatic_number(d).chi < 7:
        return
    w, tr = find_P1k1_via_origins(d, 1)
    assert verify_witness(d, w)
    assert check_origins(d, tr, 1) == []


def test_general_host_with_digons_reduced():
    d = fixture("rotational(5,1,2,3,4)")  # complete symmetric digraph on 5 vertices
    assert d.mode == GENERAL
    w, tr = find_P1k1(d, 2)
    assert verify_witness(d, w)
    assert tr.branches()[0] == "REDUCE"
