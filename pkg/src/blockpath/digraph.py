"""Digraphs on dense integer vertices, stored as per-vertex out-neighbour bitsets."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator, NamedTuple, Sequence

from .errors import (
    DigonError,
    DigraphError,
    DuplicateArcError,
    LoopError,
    VertexRangeError,
)

ORIENTED = "oriented"
GENERAL = "general"
MODES = (ORIENTED, GENERAL)


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the indices of set bits in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


@dataclass(frozen=True)
class Digraph:
    """Loop-free digraph on vertices ``0..order-1``.

    ``out[v]`` is the bitmask of out-neighbours of ``v``. Instances are
    immutable; use :func:`build` or :meth:`from_masks` to construct one with
    validation.
    """

    order: int
    out: tuple[int, ...]
    mode: str = ORIENTED
    inn: tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        inn = [0] * self.order
        for u, m in enumerate(self.out):
            for v in iter_bits(m):
                inn[v] |= 1 << u
        object.__setattr__(self, "inn", tuple(inn))

    @classmethod
    def from_masks(cls, order: int, out: Sequence[int], mode: str = ORIENTED) -> "Digraph":
        if mode not in MODES:
            raise DigraphError(f"unknown mode {mode!r}")
        if len(out) != order:
            raise DigraphError("mask count does not match order")
        full = (1 << order) - 1
        for u, m in enumerate(out):
            if m & ~full:
                raise VertexRangeError(f"vertex {u} has an out-neighbour >= {order}")
            if m >> u & 1:
                raise LoopError(f"loop at vertex {u}")
        d = cls(order, tuple(out), mode)
        if mode == ORIENTED:
            for u in range(order):
                both = d.out[u] & d.inn[u]
                if both:
                    v = both.bit_length() - 1
                    raise DigonError(f"digon between {u} and {v} in oriented mode")
        return d

    # -- queries ---------------------------------------------------------

    @property
    def vertices(self) -> range:
        return range(self.order)

    def has_arc(self, u: int, v: int) -> bool:
        return bool(self.out[u] >> v & 1)

    def arcs(self) -> list[tuple[int, int]]:
        """Arcs in lexicographic order."""
        return [(u, v) for u in range(self.order) for v in iter_bits(self.out[u])]

    def arc_count(self) -> int:
        return sum(m.bit_count() for m in self.out)

    def und(self, v: int) -> int:
        """Underlying-graph neighbourhood of ``v`` as a bitmask."""
        return self.out[v] | self.inn[v]

    def out_degree(self, v: int) -> int:
        return self.out[v].bit_count()

    def in_degree(self, v: int) -> int:
        return self.inn[v].bit_count()

    def degree(self, v: int) -> int:
        """Degree of ``v`` in the underlying simple graph."""
        return self.und(v).bit_count()

    def is_tournament(self) -> bool:
        full = (1 << self.order) - 1
        for v in range(self.order):
            if self.out[v] & self.inn[v]:
                return False
            if self.und(v) != full & ~(1 << v):
                return False
        return True

    def has_digon(self) -> bool:
        return any(self.out[v] & self.inn[v] for v in range(self.order))

    def __str__(self) -> str:
        return f"Digraph(n={self.order}, m={self.arc_count()}, {self.mode})"


class Degrees(NamedTuple):
    out_degree: int
    in_degree: int
    out_neighbors: frozenset
    in_neighbors: frozenset


def build(order: int, arcs: Iterable[tuple[int, int]], mode: str = ORIENTED) -> Digraph:
    """Build a digraph from an explicit arc list, rejecting anything invalid."""
    if mode not in MODES:
        raise DigraphError(f"unknown mode {mode!r}")
    if order < 0:
        raise DigraphError("order must be non-negative")
    out = [0] * order
    for u, v in arcs:
        if not (0 <= u < order and 0 <= v < order):
            raise VertexRangeError(f"arc ({u},{v}) out of range for order {order}")
        if u == v:
            raise LoopError(f"loop at vertex {u}")
        if out[u] >> v & 1:
            raise DuplicateArcError(f"duplicate arc ({u},{v})")
        if mode == ORIENTED and out[v] >> u & 1:
            raise DigonError(f"arcs ({v},{u}) and ({u},{v}) form a digon")
        out[u] |= 1 << v
    return Digraph(order, tuple(out), mode)


def _check_vertex(d: Digraph, v: int) -> None:
    if not 0 <= v < d.order:
        raise VertexRangeError(f"vertex {v} out of range for order {d.order}")


def reverse(d: Digraph) -> Digraph:
    return Digraph(d.order, d.inn, d.mode)


def degrees(d: Digraph, v: int) -> Degrees:
    _check_vertex(d, v)
    return Degrees(
        d.out_degree(v),
        d.in_degree(v),
        frozenset(iter_bits(d.out[v])),
        frozenset(iter_bits(d.inn[v])),
    )


def induced(d: Digraph, vertices: Iterable[int]) -> tuple[Digraph, tuple[int, ...]]:
    """Induced subdigraph relabelled to ``0..|S|-1``.

    Returns the subdigraph and the map ``new -> old`` (ascending old ids).
    """
    keep = sorted(set(vertices))
    for v in keep:
        _check_vertex(d, v)
    pos = {v: i for i, v in enumerate(keep)}
    sel = mask_of(keep)
    out = []
    for v in keep:
        m = 0
        for w in iter_bits(d.out[v] & sel):
            m |= 1 << pos[w]
        out.append(m)
    return Digraph(len(keep), tuple(out), d.mode), tuple(keep)


def delete_vertex(d: Digraph, v: int) -> tuple[Digraph, tuple[int, ...]]:
    return induced(d, (u for u in d.vertices if u != v))


def orient(d: Digraph) -> Digraph:
    """Drop the arc ``(v,u)``, ``u < v``, of every digon.

    The result is oriented-mode, spans the same underlying graph and is a
    subdigraph of ``d``, so any path found in it is a path of ``d``.
    """
    out = list(d.out)
    for u in range(d.order):
        for v in iter_bits(d.out[u] & d.inn[u]):
            if v < u:
                out[u] &= ~(1 << v)
    return Digraph(d.order, tuple(out), ORIENTED)


def with_mode(d: Digraph, mode: str) -> Digraph:
    return Digraph.from_masks(d.order, d.out, mode)


# -- fixtures -------------------------------------------------------------


def transitive_tournament(n: int) -> Digraph:
    return build(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def directed_cycle(n: int) -> Digraph:
    if n < 2:
        raise DigraphError("a directed cycle needs at least 2 vertices")
    if n == 2:
        return build(2, [(0, 1), (1, 0)], GENERAL)
    return build(n, [(i, (i + 1) % n) for i in range(n)])


def rotational(n: int, offsets: Iterable[int]) -> Digraph:
    """Circulant digraph on Z_n with ``i -> i+s`` for each offset ``s``."""
    offs = sorted({s % n for s in offsets})
    if 0 in offs:
        raise LoopError("offset 0 would create loops")
    mode = GENERAL if any((-s) % n in offs for s in offs) else ORIENTED
    return build(n, [(i, (i + s) % n) for i in range(n) for s in offs], mode)


def arcless(n: int, mode: str = ORIENTED) -> Digraph:
    return Digraph(n, (0,) * n, mode)


def fixture(name: str, *args) -> Digraph:
    """Named digraphs.

    ``c3``, ``regular5``, ``paley7`` take no arguments; ``tt``,
    ``directed_cycle`` and ``arcless`` take the order; ``rotational`` takes the
    order and an offset list. A string such as ``"tt(5)"`` or
    ``"rotational(7,1,2,4)"`` is accepted as well.
    """
    if "(" in name and not args:
        head, _, rest = name.partition("(")
        if not rest.endswith(")"):
            raise KeyError(name)
        nums = [int(x) for x in rest[:-1].replace(" ", "").split(",") if x]
        name = head
        if head == "rotational":
            args = (nums[0], nums[1:])
        else:
            args = tuple(nums)
    name = name.lower()
    if name == "c3":
        return directed_cycle(3)
    if name == "regular5":
        return rotational(5, (1, 2))
    if name == "paley7":
        return rotational(7, (1, 2, 4))
    if name in ("tt", "transitive"):
        return transitive_tournament(*args)
    if name in ("directed_cycle", "cycle", "c"):
        return directed_cycle(*args)
    if name == "rotational":
        return rotational(*args)
    if name == "arcless":
        return arcless(*args)
    raise KeyError(f"unknown fixture {name!r}")


EXCEPTIONAL_TOURNAMENTS = ("c3", "regular5", "paley7")
