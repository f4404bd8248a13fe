"""P(1,k,1) in every (2k+1)-chromatic digraph, k >= 2.

The host is cut down to cands (2k+1)-critical subdigraph and split by
in-degree. A long directed path on the colour-rich side drives the search.
Each RETURN step looks for cands directed k-arc path along the current path,
allowing at most two detours through the vertices named at that step, and
closes it with an in-arc at its end and an out-arc at its start.
"""

from __future__ import annotations

from ..coloring import chromatic_number, critical_subdigraph, extend_directed_path, gallai_roy_path
from ..digraph import Digraph, induced, iter_bits, mask_of
from ..errors import InternalInconsistency, PreconditionError
from ..patterns import P, PathWitness, find_pattern
from .common import close_near, complete_P1l1, finish, oriented_host, require_chi
from .trace import CLAIM, CRITICAL, EXTERNAL, RESTART, RETURN, SPLIT, TOURNAMENT, ProofTrace


def find_P1k1(d: Digraph, k: int) -> tuple[PathWitness, ProofTrace]:
    if k < 2:
        raise PreconditionError("k must be >= 2")
    trace = ProofTrace("t33")
    require_chi(d, 2 * k + 1)
    host = oriented_host(d, trace)
    crit, mapping = critical_subdigraph(host, 2 * k + 1)
    trace.add(CRITICAL, "t33.criticalize", sets={"critical": set(mapping)}, params={"threshold": 2 * k + 1})
    with trace.within(mapping):
        w = _Search(crit, k, trace).run()
    return finish(d, w.mapped(mapping), trace, "t33"), trace


class _Search:
    def __init__(self, c: Digraph, k: int, trace: ProofTrace):
        self.c = c
        self.k = k
        self.trace = trace
        self.high = [v for v in c.vertices if c.in_degree(v) >= k + 1]
        self.low = [v for v in c.vertices if c.in_degree(v) <= k]
        self.high_mask = mask_of(self.high)
        self.low_mask = mask_of(self.low)

    def fail(self, msg: str):
        raise InternalInconsistency(msg, self.trace)

    def ret(self, anchor: str, hit, sets=None) -> PathWitness:
        w, q = hit
        sets = dict(sets or {})
        sets["closing_path"] = q
        self.trace.add(RETURN, anchor, sets=sets, path=w.vertices)
        return w

    def run(self) -> PathWitness:
        c, k = self.c, self.k
        for v in self.low:
            if c.out_degree(v) < k:
                self.fail(f"vertex {v} of the low in-degree side has out-degree below k in cands critical host")
        sub_low, map_low = induced(c, self.low)
        sub_high, map_high = induced(c, self.high)
        chi_low = chromatic_number(sub_low).chi
        chi_high = chromatic_number(sub_high).chi
        self.trace.add(SPLIT, "t33.split-by-in-degree", sets={"high_in": self.high, "low_in": self.low},
                       params={"chi_high_in": chi_high, "chi_low_in": chi_low, "k": k})
        if chi_low >= k:
            p = [map_low[v] for v in gallai_roy_path(sub_low)]
            return self.branch_one(p, sub_low, map_low)
        if chi_high >= k + 2:
            p = [map_high[v] for v in gallai_roy_path(sub_high)]
            return self.branch_two(p)
        self.fail(f"side chromatic numbers {chi_high} and {chi_low} contradict cands {2 * k + 1}-critical host")

    # -- low in-degree side is k-chromatic ------------------------------------------------------

    def _longer_in_low(self, path, sub_low, map_low):
        inv = {v: j for j, v in enumerate(map_low)}
        ext = extend_directed_path(sub_low, [inv[v] for v in path])
        return [map_low[v] for v in ext]

    def branch_one(self, p, sub_low, map_low) -> PathWitness:
        c, k, tr = self.c, self.k, self.trace
        while True:
            if len(p) < k:
                self.fail("directed path on the low side is shorter than its chromatic number")
            tr.add(CLAIM, "t33.b1.maximal-path-in-low-in", sets={"path": p}, path=p,
                   params={"length": len(p) - 1})
            on = mask_of(p)
            if len(p) == k:
                # cands path of length k-1: the last vertex sends >= 2 arcs to the high side
                cands = list(iter_bits(c.out[p[-1]] & ~on))
                v = list(iter_bits(c.out[p[0]] & ~on))
                for x in cands:
                    w = complete_P1l1(c, p + [x])
                    if w is not None:
                        return self.ret("t33.b1.short-path", (w, p + [x]), {"candidates": cands, "out_head_off_path": v})
                self.fail("cands directed path of length k-1 on the low side yielded no P(1,k,1)")

            excess = len(p) - k
            tail = p[-1]
            hit = self.tail_into_high(p, cyclic=False)
            if hit is not None:
                return hit
            if not c.has_arc(tail, p[0]):
                hit = close_near(c, p, (), k)
                tr.add(CLAIM, "t33.b1.last-to-first-arc", sets={"path": p},
                       params={"path_len": excess, "tail_hits_inside": sum(1 for x in p[1:excess - 1] if c.has_arc(tail, x))})
                if hit is None:
                    self.fail("the last-to-first arc is missing and no P(1,k,1) was exhibited")
                return self.ret("t33.b1.last-to-first-arc", hit)

            tr.add(CLAIM, "t33.b1.cycle", sets={"path": p}, params={"path_len": excess})
            longer = None
            for j in range(1, len(p)):
                rot = p[j:] + p[:j]
                ext = self._longer_in_low(rot, sub_low, map_low)
                if len(ext) > len(p):
                    longer = ext
                    break
                hit = self.tail_into_high(rot, cyclic=True)
                if hit is not None:
                    return hit
            if longer is None:
                for x in p:
                    for entry_in in iter_bits(c.inn[x] & ~on):
                        if self.low_mask >> entry_in & 1:
                            j = p.index(x)
                            longer = self._longer_in_low([entry_in] + p[j:] + p[:j], sub_low, map_low)
                            break
                        hit = close_near(c, p, (entry_in,), k, cyclic=True)
                        if hit is None:
                            self.fail(f"in-neighbour {entry_in} on the high side of cycle vertex {x} yielded no P(1,k,1)")
                        return self.ret("t33.b1.in-neighbour-in-high-in", hit, {"pivot": [entry_in], "entry": [x]})
                    if longer is not None:
                        break
            if longer is not None:
                tr.add(RESTART, "t33.b1.longer-path-in-low-in", sets={"path": longer}, path=longer)
                p = longer
                continue

            # every vertex of the cycle has all its neighbours on it
            if len(p) != c.order:
                self.fail("closed cycle does not span the critical host")
            tr.add(TOURNAMENT, "t33.b1.regular-tournament", sets={"path": p},
                   params={"order": c.order, "tournament": int(c.is_tournament())})
            if not c.is_tournament() or c.order != 2 * k + 1:
                self.fail("closed cycle is not cands (2k+1)-tournament")
            w = find_pattern(c, P(1, k, 1))
            if w is None:
                self.fail("P(1,k,1) missing from cands (2k+1)-tournament")
            tr.add(EXTERNAL, "t33.b1.match-in-tournament", path=w.vertices, external=True,
                   note="tournament path theorem replaced by the exhaustive matcher")
            return w

    def tail_into_high(self, p, cyclic: bool):
        c, k = self.c, self.k
        tail = p[-1]
        cands = list(iter_bits(c.out[tail] & self.high_mask & ~mask_of(p)))
        if not cands:
            return None
        hit = close_near(c, p, cands, k, cyclic=cyclic)
        anchor = "t33.b1.last-vertex-into-high-in"
        self.trace.add(CLAIM, anchor, sets={"path": p, "out_last_high_in": cands}, params={"count": len(cands)})
        if hit is None:
            self.fail(f"last vertex {tail} has out-neighbours {cands} on the high side and no P(1,k,1) was exhibited")
        return self.ret(anchor, hit, {"candidates": cands})

    # -- high in-degree side is (k+2)-chromatic ----------------------------------------------------

    def branch_two(self, p) -> PathWitness:
        c, k, tr = self.c, self.k, self.trace
        if len(p) < k + 2:
            self.fail("directed path on the high side is shorter than its chromatic number")
        excess = len(p) - k
        tr.add(CLAIM, "t33.b2.maximal-path-in-high-in", sets={"path": p}, path=p, params={"path_len": excess})
        pivot = p[0]
        cands = list(iter_bits(c.inn[pivot] & self.low_mask))
        if cands:
            hit = close_near(c, p, cands, k)
            tr.add(CLAIM, "t33.b2.first-vertex-from-low-in", sets={"in_pivot_low_in": cands})
            if hit is None:
                self.fail("first vertex has an in-neighbour on the low side and no P(1,k,1) was exhibited")
            return self.ret("t33.b2.first-vertex-from-low-in", hit, {"first_candidate": cands[:1]})
        on = mask_of(p)
        if c.inn[pivot] & ~on:
            self.fail("first vertex of cands non-extendable path on the high side has an in-neighbour off the path")
        chase = [j + 1 for j in range(k, len(p) - 1) if c.has_arc(p[j], pivot)]
        far_in = [v for v in iter_bits(c.inn[p[k - 1]]) if v not in p[:k - 1]]
        tr.add(CLAIM, "t33.b2.in-neighbours-of-pivot", sets={"in_pivot_far": far_in, "in_pivot": list(iter_bits(c.inn[pivot]))},
               params={"chase_first": chase[0] if chase else 0, "chase_second": chase[1] if len(chase) > 1 else 0})
        hit = close_near(c, p, (), k)
        if hit is None:
            self.fail("in-neighbours of the first and k-th vertices yielded no P(1,k,1)")
        return self.ret("t33.b2.pivot-chase", hit, {"chase": [p[t - 1] for t in chase]})
