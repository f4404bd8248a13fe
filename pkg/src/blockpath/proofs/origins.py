"""P(1,k,1) in every (3k+4)-chromatic digraph, via origins of P(k,1)."""

from __future__ import annotations

from ..coloring import chromatic_number
from ..digraph import Digraph, induced
from ..errors import InternalInconsistency, PreconditionError
from ..patterns import P, PathWitness, find_pattern
from .common import finish, oriented_host, require_chi
from .trace import CLAIM, EXTERNAL, RETURN, ProofTrace


def find_P1k1_via_origins(d: Digraph, k: int) -> tuple[PathWitness, ProofTrace]:
    """Witness for P(1,k,1) built from the start vertices of P(k,1).

    The finder collects every vertex that starts a P(k,1) occurrence and
    picks one with out-degree at least k+2. That vertex has an out-neighbour
    off its occurrence, and the arc to it closes the witness. If no start
    vertex qualifies, the finder records the colouring data and raises.
    """
    if k < 1:
        raise PreconditionError("k must be >= 1")
    trace = ProofTrace("origins")
    require_chi(d, 3 * k + 4)
    host = oriented_host(d, trace)
    two = P(k, 1)
    origins = [origin for origin in host.vertices if find_pattern(host, two, start=origin) is not None]
    trace.add(EXTERNAL, "origins.collect-origins", sets={"origins": origins}, params={"k": k},
              external=True, note="origins of P(k,1) by the exhaustive matcher")
    if not origins:
        raise InternalInconsistency("no P(k,1) in a (3k+4)-chromatic host", trace)

    roomy = [origin for origin in origins if host.out_degree(origin) >= k + 2]
    if not roomy:
        rest = [v for v in host.vertices if v not in set(origins)]
        sub_in, _ = induced(host, origins)
        sub_out, mp = induced(host, rest)
        chi_in = chromatic_number(sub_in).chi
        chi_out = chromatic_number(sub_out).chi
        stray = find_pattern(sub_out, two) if sub_out.order >= two.order else None
        trace.add(CLAIM, "origins.low-out-degree-origins", sets={"origins": origins, "non_origins": rest},
                  params={"chi_origins": chi_in, "chi_rest": chi_out},
                  path=[mp[v] for v in stray.vertices] if stray else ())
        raise InternalInconsistency("every origin has out-degree <= k+1", trace)

    origin = roomy[0]
    origin_occ = find_pattern(host, two, start=origin)
    on = 0
    for v in origin_occ.vertices:
        on |= 1 << v
    free = host.out[origin] & ~on
    if not free:
        raise InternalInconsistency("origin with out-degree >= k+2 has no free out-neighbour", trace)
    extra = (free & -free).bit_length() - 1
    run = origin_occ.vertices[:-1]
    back = origin_occ.vertices[-1]
    trace.add(CLAIM, "origins.high-out-degree-origin", sets={"origin": [origin], "origin_path": origin_occ.vertices},
              params={"out_degree": host.out_degree(origin)}, path=origin_occ.vertices)
    w = PathWitness((back, *reversed(run), extra), P(1, k, 1))
    trace.add(RETURN, "origins.extend-by-exit-arc", sets={"exit": [extra]}, path=w.vertices)
    return finish(d, w, trace, "origins"), trace
