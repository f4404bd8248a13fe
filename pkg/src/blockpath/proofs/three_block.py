"""Three-block paths P(k, m-1-k-i, i) in g(m,i)-chromatic digraphs."""

from __future__ import annotations

from ..coloring import chromatic_number, max_clique
from ..digraph import Digraph, induced, mask_of, reverse
from ..errors import InternalInconsistency, PreconditionError
from ..patterns import BlockPattern, P, PathWitness, find_pattern, flip, iter_occurrences
from .common import finish, oriented_host, require_chi
from .gseq import g, in_domain
from .trace import BASE, EXTERNAL, RECURSE_H, SPLIT, TOURNAMENT_HPRIME, ProofTrace


def target_pattern(k: int, i: int, m: int) -> BlockPattern:
    mid = m - 1 - k - i
    return P(k, mid, i) if i > 0 else P(k, mid)


def _check_args(k: int, i: int, m: int) -> None:
    if not in_domain(m, i):
        raise PreconditionError(f"(m, i) = ({m}, {i}) outside the g domain")
    if not 1 <= k <= m - 2 - i:
        raise PreconditionError(f"k must satisfy 1 <= k <= m-2-i, got k={k}")


def find_three_block_decomposition(d: Digraph, k: int, i: int, m: int) -> tuple[PathWitness, ProofTrace]:
    """Witness for P(k, m-1-k-i, i) by the out-degree split recursion.

    The vertices of out-degree at least m-2 form the high side. When its
    chromatic number reaches g(m-1, i-1), the finder recurses there and
    extends the smaller witness by one out-arc. Otherwise it takes a maximum
    clique on the low side and matches the pattern inside that tournament.
    """
    _check_args(k, i, m)
    trace = ProofTrace("l23")
    require_chi(d, g(m, i))
    host = oriented_host(d, trace)
    w = _solve(host, k, i, m, trace)
    return finish(d, w, trace, "l23"), trace


def find_reversed_three_block(d: Digraph, k: int, i: int, m: int) -> tuple[PathWitness, ProofTrace]:
    """Same search on the reversed host; the vertex sequence realises the
    arc-reversed pattern in ``d``."""
    w, trace = find_three_block_decomposition(reverse(d), k, i, m)
    trace.finder = "l24"
    out = PathWitness(w.vertices, flip(w.pattern))
    return finish(d, out, trace, "l24"), trace


def _solve(d: Digraph, k: int, i: int, m: int, trace: ProofTrace) -> PathWitness:
    target = target_pattern(k, i, m)
    if i == 0 or (m == 4 and i == 1):
        w = find_pattern(d, target)
        trace.add(BASE, f"l23.base(m={m},i={i})", params={"m": m, "i": i, "k": k},
                  path=w.vertices if w else (), external=True,
                  note="cited base case replaced by the exhaustive matcher")
        if w is None:
            raise InternalInconsistency(f"base case {target} not found", trace)
        return w

    high = [v for v in d.vertices if d.out_degree(v) >= m - 2]
    low = [v for v in d.vertices if d.out_degree(v) < m - 2]
    sub_high, map_high = induced(d, high)
    chi_high = chromatic_number(sub_high).chi
    need = g(m - 1, i - 1)
    trace.add(SPLIT, "l23.split-by-out-degree", sets={"high_out": high, "low_out": low},
              params={"m": m, "i": i, "chi_high_out": chi_high, "need_high_out": need})

    if chi_high >= need:
        found = None
        with trace.within(map_high):
            for occ in _sub_witnesses(sub_high, k, i - 1, m - 1, trace):
                sub_path = [map_high[v] for v in occ.vertices]
                free = d.out[sub_path[-1]] & ~mask_of(sub_path)
                if free:
                    found = sub_path, (free & -free).bit_length() - 1
                    break
        if found is not None:
            sub_path, extra = found
            w = PathWitness(tuple(sub_path) + (extra,), target)
            trace.add(RECURSE_H, "l23.extend-by-out-arc", sets={"block": sub_path, "end": sub_path[-1:], "extension": [extra]},
                      params={"m": m, "i": i}, path=w.vertices)
            return w
        trace.add(RECURSE_H, "l23.no-extendable-block", sets={"high_out": high},
                  note="no path found on the high side has a free out-neighbour at its end")

    sub_low, map_low = induced(d, low)
    chi_low = chromatic_number(sub_low).chi
    if chi_low <= 2 * (m - 3):
        raise InternalInconsistency(
            f"side chromatic numbers {chi_high} and {chi_low} cannot sum to g({m},{i})={g(m, i)}", trace)
    clique = [map_low[v] for v in max_clique([sub_low.und(v) for v in sub_low.vertices])]
    trace.add(TOURNAMENT_HPRIME, "l23.tournament-in-low-out", sets={"low_out": low, "clique": clique},
              params={"chi_low_out": chi_low, "order": len(clique)})
    if len(clique) < 2 * m - 5:
        raise InternalInconsistency(
            f"low side is {chi_low}-chromatic with max out-degree <= m-3 but has no K_{2 * m - 5}", trace)
    tour, map_t = induced(d, clique)
    w = find_pattern(tour, target) if tour.order >= target.order else None
    if w is None:
        raise InternalInconsistency(f"{target} missing from a tournament of order {tour.order}", trace)
    w = w.mapped(map_t)
    trace.add(EXTERNAL, "l23.match-in-tournament", sets={"clique": clique}, path=w.vertices, external=True,
              note="tournament path theorem replaced by the exhaustive matcher")
    return w


def _sub_witnesses(d: Digraph, k: int, i: int, m: int, trace: ProofTrace):
    """Witnesses for the smaller pattern on the high side.

    A recursive level yields its single construction. A base level whose
    pattern ends on a backward block yields every occurrence in order: the
    end vertex then points back into the path, so its out-arcs may all be
    used up and a later occurrence has to be tried.
    """
    if i == 0:
        target = target_pattern(k, i, m)
        trace.add(BASE, f"l23.base(m={m},i={i})", params={"m": m, "i": i, "k": k}, external=True,
                  note="occurrences of the two-block path listed by the exhaustive matcher")
        found = False
        for w in iter_occurrences(d, target):
            found = True
            yield w
        if not found:
            raise InternalInconsistency(f"base case {target} not found", trace)
        return
    yield _solve(d, k, i, m, trace)
