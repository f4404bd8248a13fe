"""Canonical labelling, isomorph rejection and exhaustive enumeration.

Canonical forms come from a small individualisation-refinement search: the
vertex partition is refined by neighbour counts per cell, non-singleton cells
are split by individualising each member in turn, and the lexicographically
least adjacency encoding over all leaves wins. Automorphisms found along the
way prune sibling branches. This is exact at any size, but only intended for
``order <= 10``.
"""

from __future__ import annotations

import itertools
from functools import lru_cache
from typing import Iterator

from .digraph import GENERAL, MODES, ORIENTED, Digraph, iter_bits
from .errors import CapExceeded, DigraphError

CANON_CAP = 10
TOURNAMENT_CAP = 8
LABELED_CAP = 6
DEDUPE_CAP = 5

_MODE_CODE = {ORIENTED: 0, GENERAL: 1}


def _refine(d: Digraph, colors: list[int]) -> list[int]:
    n = d.order
    rank0 = {c: r for r, c in enumerate(sorted(set(colors)))}
    colors = [rank0[c] for c in colors]
    ncells = len(rank0)
    while True:
        cells = [0] * ncells
        for v, c in enumerate(colors):
            cells[c] |= 1 << v
        sigs = []
        for v in range(n):
            o, i = d.out[v], d.inn[v]
            sigs.append(
                (colors[v],)
                + tuple((o & m).bit_count() for m in cells)
                + tuple((i & m).bit_count() for m in cells)
            )
        rank = {s: r for r, s in enumerate(sorted(set(sigs)))}
        new = [rank[s] for s in sigs]
        if len(rank) == ncells:
            return new
        colors, ncells = new, len(rank)


def _encode(d: Digraph, colors: list[int]) -> tuple[int, ...]:
    # colors is discrete here: colors[v] is v's new label
    inv = [0] * d.order
    for v, c in enumerate(colors):
        inv[c] = v
    rows = []
    for p in range(d.order):
        m = 0
        for w in iter_bits(d.out[inv[p]]):
            m |= 1 << (d.order - 1 - colors[w])
        rows.append(m)
    return tuple(rows)


def _orbit_rep(gens: list[tuple[int, ...]], n: int) -> list[int]:
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for g in gens:
        for x in range(n):
            a, b = find(x), find(g[x])
            if a != b:
                parent[max(a, b)] = min(a, b)
    return [find(x) for x in range(n)]


def canonical_labeling(d: Digraph, cap: int = CANON_CAP) -> tuple[list[int], tuple[int, ...]]:
    """Return ``(label, encoding)`` where ``label[v]`` is v's canonical position."""
    if d.order > cap:
        raise CapExceeded(f"canonical form capped at order {cap}, got {d.order}")
    n = d.order
    if n == 0:
        return [], ()
    best: list = [None, None]  # encoding, colors
    gens: list[tuple[int, ...]] = []

    def visit(colors: list[int], fixed: tuple[int, ...]):
        colors = _refine(d, colors)
        ncells = max(colors) + 1
        if ncells == n:
            enc = _encode(d, colors)
            if best[0] is None or enc < best[0]:
                best[0], best[1] = enc, colors
            elif enc == best[0]:
                # same encoding: best^-1 o colors is an automorphism
                inv = [0] * n
                for v, c in enumerate(best[1]):
                    inv[c] = v
                gens.append(tuple(inv[colors[v]] for v in range(n)))
            return
        sizes = [0] * ncells
        for c in colors:
            sizes[c] += 1
        target = next(c for c in range(ncells) if sizes[c] > 1)
        members = [v for v in range(n) if colors[v] == target]
        done: list[int] = []
        for v in members:
            if done:
                usable = [g for g in gens if all(g[f] == f for f in fixed)]
                if usable:
                    rep = _orbit_rep(usable, n)
                    if any(rep[v] == rep[u] for u in done):
                        continue
            new = [2 * c + (1 if c == target and u != v else 0) for u, c in enumerate(colors)]
            visit(new, fixed + (v,))
            done.append(v)

    visit([0] * n, ())
    return best[1], best[0]


def canonical_form(d: Digraph, cap: int = CANON_CAP) -> bytes:
    """Byte string that is equal for two digraphs iff they are isomorphic.

    Mode is part of the form, so an oriented digraph and the same arcs in
    general mode are distinct.
    """
    _, enc = canonical_labeling(d, cap)
    nbytes = max(1, (d.order + 7) // 8)
    return bytes([d.order, _MODE_CODE[d.mode]]) + b"".join(r.to_bytes(nbytes, "big") for r in enc)


def relabel(d: Digraph, label) -> Digraph:
    """Digraph with vertex ``v`` renamed to ``label[v]``."""
    out = [0] * d.order
    for u in range(d.order):
        m = 0
        for w in iter_bits(d.out[u]):
            m |= 1 << label[w]
        out[label[u]] = m
    return Digraph(d.order, tuple(out), d.mode)


def canonical_digraph(d: Digraph, cap: int = CANON_CAP) -> Digraph:
    label, _ = canonical_labeling(d, cap)
    return relabel(d, label)


def is_isomorphic(a: Digraph, b: Digraph) -> bool:
    if a.order != b.order or a.mode != b.mode or a.arc_count() != b.arc_count():
        return False
    return canonical_form(a) == canonical_form(b)


# -- enumeration ------------------------------------------------------------


def _pairs(n: int) -> list[tuple[int, int]]:
    return [(i, j) for i in range(n) for j in range(i + 1, n)]


def digraph_from_states(n: int, states, mode: str) -> Digraph:
    """Digraph from a pair-state vector over pairs ``i<j`` in lex order.

    States: 0 none, 1 ``i->j``, 2 ``j->i``, 3 both (general mode only).
    """
    out = [0] * n
    for (i, j), s in zip(_pairs(n), states):
        if s & 1:
            out[i] |= 1 << j
        if s & 2:
            out[j] |= 1 << i
    return Digraph(n, tuple(out), mode)


def _extend_all(d: Digraph, nstates: int) -> Iterator[Digraph]:
    n = d.order
    for states in itertools.product(range(nstates), repeat=n):
        out = list(d.out) + [0]
        for u, s in enumerate(states):
            if s & 1:
                out[u] |= 1 << n
            if s & 2:
                out[n] |= 1 << u
        yield Digraph(n + 1, tuple(out), d.mode)


def _new_tournament_classes(n: int) -> Iterator[tuple[bytes, Digraph]]:
    """Each class of order ``n`` once, as (key, canonical copy), in discovery order."""
    seen: set[bytes] = set()
    for t in _tournament_reps(n - 1):
        # tournament extension: every pair with the new vertex gets state 1 or 2
        for bits in range(1 << (n - 1)):
            out = list(t.out) + [0]
            for u in range(n - 1):
                if bits >> u & 1:
                    out[n - 1] |= 1 << u
                else:
                    out[u] |= 1 << (n - 1)
            cand = Digraph(n, tuple(out), ORIENTED)
            label, enc = canonical_labeling(cand)
            key = bytes([n, 0]) + b"".join(r.to_bytes(2, "big") for r in enc)
            if key not in seen:
                seen.add(key)
                yield key, relabel(cand, label)


@lru_cache(maxsize=None)
def _tournament_reps(n: int) -> tuple[Digraph, ...]:
    if n <= 1:
        return (Digraph(n, (0,) * n, ORIENTED),)
    found = dict(_new_tournament_classes(n))
    return tuple(found[k] for k in sorted(found))


def stream_tournaments(n: int, cap: int = TOURNAMENT_CAP + 2) -> Iterator[Digraph]:
    """Non-isomorphic tournaments of order ``n`` yielded as they are found.

    Unlike :func:`enumerate_tournaments` nothing of order ``n`` is cached, so
    a caller may stop part-way through a class count too large to finish.
    """
    if n < 1:
        raise DigraphError("tournament order must be >= 1")
    if n > cap:
        raise CapExceeded(f"tournament streaming capped at order {cap}, got {n}")
    if n == 1:
        yield from _tournament_reps(1)
        return
    for _, t in _new_tournament_classes(n):
        yield t


def enumerate_tournaments(n: int, cap: int = TOURNAMENT_CAP) -> Iterator[Digraph]:
    """One canonical representative per isomorphism class, in canonical order."""
    if n < 1:
        raise DigraphError("tournament order must be >= 1")
    if n > cap:
        raise CapExceeded(f"tournament enumeration capped at order {cap}, got {n}")
    yield from _tournament_reps(n)


@lru_cache(maxsize=None)
def _digraph_reps(n: int, mode: str) -> tuple[Digraph, ...]:
    if n <= 1:
        return (Digraph(n, (0,) * n, mode),)
    nstates = 3 if mode == ORIENTED else 4
    seen: dict[bytes, Digraph] = {}
    for d in _digraph_reps(n - 1, mode):
        for cand in _extend_all(d, nstates):
            label, enc = canonical_labeling(cand)
            key = b"".join(r.to_bytes(2, "big") for r in enc)
            if key not in seen:
                seen[key] = relabel(cand, label)
    return tuple(seen[k] for k in sorted(seen))


def enumerate_digraphs(
    n: int,
    mode: str = ORIENTED,
    dedupe: bool = False,
    cap: int | None = None,
    shard: tuple[int, int] | None = None,
) -> Iterator[Digraph]:
    """Exhaustive enumeration of digraphs of order ``n``.

    Labelled enumeration walks pair-state vectors in lexicographic order. A
    ``shard=(index, count)`` keeps the vectors whose leading pair states,
    read as a base-3/4 number, are congruent to ``index`` mod ``count``;
    deduplicated streams shard round-robin by position.
    """
    if mode not in MODES:
        raise DigraphError(f"unknown mode {mode!r}")
    if cap is None:
        cap = DEDUPE_CAP if dedupe else LABELED_CAP
    if n > cap:
        raise CapExceeded(f"digraph enumeration capped at order {cap}, got {n}")
    if n < 0:
        raise DigraphError("order must be non-negative")
    if dedupe:
        reps = _digraph_reps(n, mode)
        for idx, d in enumerate(reps):
            if shard is None or idx % shard[1] == shard[0]:
                yield d
        return
    nstates = 3 if mode == ORIENTED else 4
    npairs = n * (n - 1) // 2
    if shard is None:
        for states in itertools.product(range(nstates), repeat=npairs):
            yield digraph_from_states(n, states, mode)
        return
    index, count = shard
    plen = 0
    while nstates**plen < count and plen < npairs:
        plen += 1
    for prefix in itertools.product(range(nstates), repeat=plen):
        key = 0
        for s in prefix:
            key = key * nstates + s
        if key % count != index:
            continue
        for rest in itertools.product(range(nstates), repeat=npairs - plen):
            yield digraph_from_states(n, prefix + rest, mode)
