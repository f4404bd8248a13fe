"""Shared machinery for the proof-guided finders."""

from __future__ import annotations

from typing import Iterable, Iterator, Optional, Sequence

from ..coloring import chromatic_number
from ..digraph import GENERAL, Digraph, iter_bits, orient
from ..errors import InternalInconsistency, PreconditionError
from ..patterns import P, PathWitness, verify_witness
from .trace import REDUCE, ProofTrace


def require_chi(d: Digraph, threshold: int) -> int:
    c = chromatic_number(d).chi
    if c < threshold:
        raise PreconditionError(f"chromatic number {c} is below the required {threshold}")
    return c


def oriented_host(d: Digraph, trace: ProofTrace) -> Digraph:
    """Oriented reduction of a general-mode host (same underlying graph)."""
    if d.mode == GENERAL and d.has_digon():
        trace.add(REDUCE, "digon-reduction", note="dropped the arc (v,u), u<v, of every digon")
        return orient(d)
    return orient(d) if d.mode == GENERAL else d


def complete_P1l1(d: Digraph, q: Sequence[int]) -> Optional[PathWitness]:
    """Turn a directed path ``q[0] -> ... -> q[-1]`` into P(1, len(q)-1, 1).

    Needs an in-neighbour of ``q[-1]`` and an out-neighbour of ``q[0]``, both
    off ``q`` and distinct. The witness reads ``a, q[-1], ..., q[0], b``.
    """
    on = 0
    for v in q:
        on |= 1 << v
    ins = d.inn[q[-1]] & ~on
    outs = d.out[q[0]] & ~on
    for a in iter_bits(ins):
        rest = outs & ~(1 << a)
        if rest:
            b = (rest & -rest).bit_length() - 1
            return PathWitness((a, *reversed(q), b), P(1, len(q) - 1, 1))
    return None


def directed_paths(
    d: Digraph,
    base: Sequence[int],
    extra: Iterable[int],
    arcs: int,
    max_off: int = 2,
    cyclic: bool = False,
) -> Iterator[list[int]]:
    """Directed paths with ``arcs`` arcs inside ``base + extra`` that leave the
    arc set of ``base`` (a directed path, or cycle if ``cyclic``) at most
    ``max_off`` times. Deterministic DFS in ascending vertex order.
    """
    allowed = 0
    for v in base:
        allowed |= 1 << v
    for v in extra:
        allowed |= 1 << v
    succ = {}
    for j in range(len(base) - 1):
        succ[base[j]] = base[j + 1]
    if cyclic and len(base) > 1:
        succ[base[-1]] = base[0]

    path: list[int] = []

    def rec(used: int, off: int):
        if len(path) == arcs + 1:
            yield list(path)
            return
        u = path[-1]
        cand = d.out[u] & allowed & ~used
        for w in iter_bits(cand):
            o = off + (0 if succ.get(u) == w else 1)
            if o > max_off:
                continue
            path.append(w)
            yield from rec(used | 1 << w, o)
            path.pop()

    for s in iter_bits(allowed):
        path.append(s)
        yield from rec(1 << s, 0)
        path.pop()


def close_near(
    d: Digraph,
    base: Sequence[int],
    extra: Iterable[int],
    k: int,
    max_off: int = 2,
    cyclic: bool = False,
) -> Optional[tuple[PathWitness, list[int]]]:
    """First P(1,k,1) whose directed k-block runs along ``base`` up to
    ``max_off`` detours through ``extra``; completions may use any vertex."""
    for q in directed_paths(d, base, extra, k, max_off, cyclic):
        w = complete_P1l1(d, q)
        if w is not None:
            return w, q
    return None


def finish(d: Digraph, w: PathWitness, trace: ProofTrace, what: str) -> PathWitness:
    if not verify_witness(d, w):
        raise InternalInconsistency(f"{what}: constructed path does not verify", trace)
    trace.outcome = w
    return w
