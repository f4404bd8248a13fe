"""P(1,l,1) with l >= k in every (k+4)-chromatic digraph."""

from __future__ import annotations

from ..coloring import critical_subdigraph
from ..digraph import Digraph, iter_bits
from ..errors import InternalInconsistency, PreconditionError
from ..patterns import P, PathWitness, find_pattern
from .common import finish, oriented_host, require_chi
from .trace import CLAIM, CRITICAL, EXTERNAL, RETURN, ProofTrace


def find_P1l1_at_least(d: Digraph, k: int) -> tuple[PathWitness, ProofTrace]:
    """Witness for some P(1,l,1), l >= k, with the trace of how it was built.

    The search works in a (k+4)-critical subdigraph. It takes a P(k,1)
    occurrence, prepends in-neighbours to its first block while any lie off
    the path, and then closes the path at its first vertex in one of three
    ways, each recorded as a RETURN step.
    """
    if k < 1:
        raise PreconditionError("k must be >= 1")
    trace = ProofTrace("t31")
    require_chi(d, k + 4)
    host = oriented_host(d, trace)
    crit, mapping = critical_subdigraph(host, k + 4)
    trace.add(CRITICAL, "t31.criticalize", sets={"critical": set(mapping)}, params={"threshold": k + 4})
    with trace.within(mapping):
        w = _search(crit, k, trace)
    w = w.mapped(mapping)
    return finish(d, w, trace, "t31"), trace


def _search(c: Digraph, k: int, trace: ProofTrace) -> PathWitness:
    seed = find_pattern(c, P(k, 1))
    if seed is None:
        raise InternalInconsistency(f"no P({k},1) in a {k + 4}-critical host", trace)
    run = list(seed.vertices[:-1])
    back = seed.vertices[-1]
    trace.add(EXTERNAL, "t31.seed-two-block-path", sets={"path": run + [back], "tail": [back]},
              params={"first_block": k}, path=seed.vertices, external=True,
              note="P(k,1) located by the exhaustive matcher")

    on = 0
    for v in run + [back]:
        on |= 1 << v
    grown = 0
    while c.inn[run[0]] & ~on:
        free = c.inn[run[0]] & ~on
        extra = (free & -free).bit_length() - 1
        run.insert(0, extra)
        on |= 1 << extra
        grown += 1
    first_len = len(run) - 1
    head = run[0]
    trace.add(CLAIM, "t31.maximal-first-block", sets={"path": run + [back], "head": [head], "tail": [back]},
              params={"first_block": first_len, "prepended": grown}, path=run + [back])

    outside = c.out[head] & ~on
    if outside:
        extra = (outside & -outside).bit_length() - 1
        w = PathWitness((back, *reversed(run), extra), P(1, first_len, 1))
        trace.add(RETURN, "t31.exit-out-neighbour-off-path", sets={"exit": [extra]},
                  params={"last_block": first_len}, path=w.vertices)
        return w

    # every neighbour of the head is on the path
    nbrs = c.und(head)
    hit_at = next((j for j in range(2, len(run)) if nbrs >> run[j] & 1), None)
    if hit_at is None or len(run) - hit_at < k + 1:
        raise InternalInconsistency("head lacks the neighbours its degree guarantees", trace)
    hit = run[hit_at]
    tail = run[hit_at:]
    if c.has_arc(head, hit):
        core = [head] + tail
        w = PathWitness((back, *reversed(core), run[1]), P(1, len(core) - 1, 1))
        anchor = "t31.exit-arc-head-to-hit"
    elif c.has_arc(hit, head):
        core = tail
        w = PathWitness((back, *reversed(core), head), P(1, len(core) - 1, 1))
        anchor = "t31.exit-arc-hit-to-head"
    else:  # pragma: no cover - hit_at was chosen from the underlying neighbourhood
        raise InternalInconsistency("chosen neighbour is not adjacent to the head", trace)
    trace.add(RETURN, anchor, sets={"hit": [hit], "head_nbrs": set(iter_bits(nbrs))},
              params={"hit_index": hit_at + 1, "last_block": len(core) - 1}, path=w.vertices)
    return w
