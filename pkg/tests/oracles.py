"""Independent reference computations used to freeze expected values.

Nothing here shares code with the library's search routines: isomorphism is
decided by trying every permutation, counts come from Burnside's lemma, and
pattern occurrence is checked by scanning every vertex sequence.
"""

import itertools
from math import factorial

from blockpath.digraph import GENERAL, ORIENTED


def arc_set(d):
    return {(u, v) for u in range(d.order) for v in range(d.order) if d.out[u] >> v & 1}


def permuted_arcs(arcs, perm):
    return frozenset((perm[u], perm[v]) for u, v in arcs)


def brute_canonical(d):
    arcs = arc_set(d)
    return min(tuple(sorted(permuted_arcs(arcs, p))) for p in itertools.permutations(range(d.order)))


def automorphism_count(d):
    arcs = frozenset(arc_set(d))
    return sum(1 for p in itertools.permutations(range(d.order)) if permuted_arcs(arcs, p) == arcs)


def _partitions(n, largest=None):
    largest = n if largest is None else largest
    if n == 0:
        yield ()
        return
    for part in range(min(n, largest), 0, -1):
        for rest in _partitions(n - part, part):
            yield (part,) + rest


def _class_size(parts):
    n = sum(parts)
    denom = 1
    for length in set(parts):
        mult = parts.count(length)
        denom *= length ** mult * factorial(mult)
    return factorial(n) // denom


def _perm_of(parts):
    perm, start = [], 0
    for length in parts:
        perm += [start + (j + 1) % length for j in range(length)]
        start += length
    return perm


def burnside_count(n, family):
    """Number of isomorphism classes of tournaments, oriented graphs or
    general loop-free digraphs on ``n`` vertices."""
    total = 0
    for parts in _partitions(n):
        perm = _perm_of(parts)
        seen, orbits = set(), []
        for u in range(n):
            for v in range(n):
                if u == v or (u, v) in seen:
                    continue
                orb, x = [], (u, v)
                while x not in seen:
                    seen.add(x)
                    orb.append(x)
                    x = (perm[x[0]], perm[x[1]])
                orbits.append(frozenset(orb))
        if family == GENERAL:
            fixed = 2 ** len(orbits)
        else:
            self_rev = sum(1 for o in orbits if (next(iter(o))[1], next(iter(o))[0]) in o)
            paired = (len(orbits) - self_rev) // 2
            if family == "tournament":
                fixed = 0 if self_rev else 2 ** paired
            else:
                assert family == ORIENTED
                fixed = 3 ** paired
        total += _class_size(parts) * fixed
    return total // factorial(n)


def occurs(d, blocks, first_forward, seq):
    """True iff the vertex sequence realises the block pattern."""
    dirs = []
    forward = first_forward
    for b in blocks:
        dirs += [forward] * b
        forward = not forward
    if len(seq) != len(dirs) + 1 or len(set(seq)) != len(seq):
        return False
    arcs = arc_set(d)
    return all(((a, b) if f else (b, a)) in arcs for a, b, f in zip(seq, seq[1:], dirs))


def brute_find(d, blocks, first_forward=True):
    """Lexicographically first occurrence by scanning every sequence."""
    length = sum(blocks) + 1
    for seq in itertools.permutations(range(d.order), length):
        if occurs(d, blocks, first_forward, seq):
            return seq
    return None


def brute_chi(d):
    """Smallest colour count by trying every assignment."""
    n = d.order
    if n == 0:
        return 0
    edges = {(min(u, v), max(u, v)) for u, v in arc_set(d)}
    for k in range(1, n + 1):
        for col in itertools.product(range(k), repeat=n):
            if all(col[u] != col[v] for u, v in edges):
                return k
    return n
