"""Exact chromatic number of the underlying graph, criticalisation, and
Gallai-Roy directed paths."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .digraph import Digraph, induced, iter_bits
from .errors import CapExceeded, PreconditionError

CHI_CAP = 16


@dataclass(frozen=True)
class ChromaticCertificate:
    """``chi`` with a proper colouring and evidence that ``chi - 1`` colours fail.

    The evidence is a clique of size ``chi`` when one exists; otherwise
    ``clique`` is the largest clique found and ``exhaustive`` records that
    the branch-and-bound search refuted every ``chi - 1`` colouring.
    """

    chi: int
    coloring: tuple[int, ...]
    clique: tuple[int, ...]
    exhaustive: bool

    def check(self, d: Digraph) -> bool:
        if len(self.coloring) != d.order:
            return False
        for u, v in d.arcs():
            if self.coloring[u] == self.coloring[v]:
                return False
        if len(set(self.coloring)) != self.chi:
            return False
        if len(self.clique) > self.chi:
            return False
        for i, u in enumerate(self.clique):
            for v in self.clique[i + 1:]:
                if not d.und(u) >> v & 1:
                    return False
        return self.exhaustive or len(self.clique) == self.chi


def _adjacency(d: Digraph) -> list[int]:
    return [d.und(v) for v in range(d.order)]


def max_clique(adj: list[int]) -> tuple[int, ...]:
    """Maximum clique by bitset branch and bound (greedy-colouring bound)."""
    n = len(adj)
    best: list[int] = []

    def bound(cand: int) -> int:
        # number of colour classes in a greedy colouring of cand
        k = 0
        while cand:
            k += 1
            q = cand
            while q:
                low = q & -q
                v = low.bit_length() - 1
                q &= ~adj[v] & ~low
                cand &= ~low
        return k

    def expand(clique: list[int], cand: int):
        nonlocal best
        if not cand:
            if len(clique) > len(best):
                best = clique[:]
            return
        if len(clique) + bound(cand) <= len(best):
            return
        while cand:
            if len(clique) + cand.bit_count() <= len(best):
                return
            low = cand & -cand
            v = low.bit_length() - 1
            clique.append(v)
            expand(clique, cand & adj[v])
            clique.pop()
            cand &= ~low

    expand([], (1 << n) - 1)
    return tuple(sorted(best))


def clique_number(d: Digraph) -> int:
    return len(max_clique(_adjacency(d)))


def _greedy_dsatur(adj: list[int]) -> list[int]:
    n = len(adj)
    color = [-1] * n
    sat = [0] * n
    for _ in range(n):
        v = max(
            (u for u in range(n) if color[u] < 0),
            key=lambda u: (sat[u].bit_count(), adj[u].bit_count(), -u),
        )
        c = 0
        while sat[v] >> c & 1:
            c += 1
        color[v] = c
        for w in iter_bits(adj[v]):
            sat[w] |= 1 << c
    return color


def chromatic_number(d: Digraph, cap: int = CHI_CAP) -> ChromaticCertificate:
    """Exact chromatic number by DSATUR branch and bound.

    The maximum clique is precoloured (it bounds from below and breaks colour
    symmetry); a greedy DSATUR colouring bounds from above.
    """
    n = d.order
    if n > cap:
        raise CapExceeded(f"chromatic number capped at order {cap}, got {n}")
    if n == 0:
        return ChromaticCertificate(0, (), (), True)
    adj = _adjacency(d)
    clique = max_clique(adj)
    lb = len(clique)
    best = _greedy_dsatur(adj)
    best_k = max(best) + 1
    if best_k == lb:
        return ChromaticCertificate(best_k, tuple(best), clique, False)

    color = [-1] * n
    sat = [0] * n
    for c, v in enumerate(clique):
        color[v] = c
        for w in iter_bits(adj[v]):
            sat[w] |= 1 << c

    def rec(colored: int, used: int) -> bool:
        nonlocal best, best_k
        if colored == n:
            best_k, best = used, color[:]
            return best_k == lb
        v = -1
        key = None
        for u in range(n):
            if color[u] < 0:
                k = (sat[u].bit_count(), adj[u].bit_count())
                if key is None or k > key:
                    key, v = k, u
        for c in range(used + 1):
            if c + 1 >= best_k:
                break
            if sat[v] >> c & 1:
                continue
            color[v] = c
            changed = []
            bit = 1 << c
            for w in iter_bits(adj[v]):
                if color[w] < 0 and not sat[w] & bit:
                    sat[w] |= bit
                    changed.append(w)
            if rec(colored + 1, max(used, c + 1)):
                return True
            for w in changed:
                sat[w] &= ~bit
            color[v] = -1
        return False

    rec(lb, lb)
    return ChromaticCertificate(best_k, tuple(best), clique, best_k > lb)


def chi(d: Digraph) -> int:
    return chromatic_number(d).chi


def is_k_colorable(d: Digraph, k: int, cap: int = CHI_CAP) -> Optional[tuple[int, ...]]:
    """A proper ``k``-colouring, or ``None`` if none exists.

    Plain backtracking in vertex order; the first vertex gets colour 0 and
    each vertex may open at most one new colour.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    n = d.order
    if n > cap:
        raise CapExceeded(f"colourability capped at order {cap}, got {n}")
    adj = _adjacency(d)
    color = [-1] * n

    def rec(v: int, used: int) -> bool:
        if v == n:
            return True
        forbidden = 0
        for w in iter_bits(adj[v]):
            if color[w] >= 0:
                forbidden |= 1 << color[w]
        for c in range(min(used + 1, k)):
            if not forbidden >> c & 1:
                color[v] = c
                if rec(v + 1, max(used, c + 1)):
                    return True
        color[v] = -1
        return False

    return tuple(color) if rec(0, 0) else None


def has_chi_at_least(d: Digraph, t: int) -> bool:
    if t <= 0:
        return True
    if t == 1:
        return d.order >= 1
    return is_k_colorable(d, t - 1) is None


def critical_subdigraph(d: Digraph, t: int) -> tuple[Digraph, tuple[int, ...]]:
    """A ``t``-critical induced subdigraph and its ``new -> old`` vertex map.

    Vertices are deleted in ascending order whenever the chromatic number
    stays at least ``t``.
    """
    if t < 1:
        raise ValueError("t must be >= 1")
    if not has_chi_at_least(d, t):
        raise PreconditionError(f"chromatic number below {t}")
    keep = list(d.vertices)
    for v in list(keep):
        trial = [u for u in keep if u != v]
        sub, _ = induced(d, trial)
        if has_chi_at_least(sub, t):
            keep = trial
    sub, mapping = induced(d, keep)
    for v in sub.vertices:
        assert sub.degree(v) >= t - 1, "critical subdigraph has a low-degree vertex"
    return sub, mapping


def gallai_roy_path(d: Digraph) -> list[int]:
    """Non-extendable directed path with at least ``chi(d)`` vertices.

    Arcs are added in lexicographic order to a spanning acyclic subdigraph
    whenever they close no cycle. The longest-path level in that subdigraph
    is a proper colouring, so its deepest chain has at least ``chi`` vertices;
    the chain is then extended greedily at both ends in ``d``.
    """
    n = d.order
    if n == 0:
        return []
    acyc = [0] * n

    def reaches(src: int, dst: int) -> bool:
        seen = 1 << src
        frontier = seen
        while frontier:
            if frontier >> dst & 1:
                return True
            nxt = 0
            for u in iter_bits(frontier):
                nxt |= acyc[u]
            frontier = nxt & ~seen
            seen |= nxt
        return False

    for u, v in d.arcs():
        if not reaches(v, u):
            acyc[u] |= 1 << v

    # topological order by repeatedly removing sources
    indeg = [0] * n
    for u in range(n):
        for v in iter_bits(acyc[u]):
            indeg[v] += 1
    order = []
    ready = [v for v in range(n) if indeg[v] == 0]
    while ready:
        u = ready.pop(0)
        order.append(u)
        for v in iter_bits(acyc[u]):
            indeg[v] -= 1
            if indeg[v] == 0:
                ready.append(v)
    level = [0] * n
    pred = [-1] * n
    for u in order:
        for v in iter_bits(acyc[u]):
            if level[u] + 1 > level[v] or (level[u] + 1 == level[v] and u < pred[v]):
                level[v] = level[u] + 1
                pred[v] = u
    top = max(range(n), key=lambda v: (level[v], -v))
    path = [top]
    while pred[path[-1]] >= 0:
        path.append(pred[path[-1]])
    path.reverse()
    return extend_directed_path(d, path)


def extend_directed_path(d: Digraph, path: list[int]) -> list[int]:
    """Greedily extend a directed path at both ends until neither end can grow."""
    path = list(path)
    on = 0
    for v in path:
        on |= 1 << v
    while True:
        free = d.out[path[-1]] & ~on
        if not free:
            break
        w = (free & -free).bit_length() - 1
        path.append(w)
        on |= 1 << w
    while True:
        free = d.inn[path[0]] & ~on
        if not free:
            break
        w = (free & -free).bit_length() - 1
        path.insert(0, w)
        on |= 1 << w
    return path


@dataclass(frozen=True)
class Lemma21Report:
    """Outcome of checking ``chi <= 2n`` under bounded in-degree.

    ``applicable`` requires max in-degree <= n and no clique on ``2n+1``
    vertices; the ``*_out`` fields report the mirrored out-degree form.
    ``bound_holds`` is ``None`` when the hypothesis does not apply.
    """

    n: int
    chi: int
    clique_number: int
    max_in_degree: int
    max_out_degree: int
    applicable: bool
    bound_holds: Optional[bool]
    applicable_out: bool
    bound_holds_out: Optional[bool]


def check_lemma21(d: Digraph, n: int) -> Lemma21Report:
    if n < 2:
        raise PreconditionError("the in-degree bound needs n >= 2")
    c = chi(d)
    omega = clique_number(d)
    din = max((d.in_degree(v) for v in d.vertices), default=0)
    dout = max((d.out_degree(v) for v in d.vertices), default=0)
    app = din <= n and omega <= 2 * n
    app_out = dout <= n and omega <= 2 * n
    return Lemma21Report(
        n=n,
        chi=c,
        clique_number=omega,
        max_in_degree=din,
        max_out_degree=dout,
        applicable=app,
        bound_holds=(c <= 2 * n) if app else None,
        applicable_out=app_out,
        bound_holds_out=(c <= 2 * n) if app_out else None,
    )
