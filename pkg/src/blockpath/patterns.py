"""Oriented paths described by block lengths, and the exhaustive matcher."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Optional, Sequence

from .digraph import Digraph
from .errors import CapExceeded, DigraphError, PatternError

FWD = "fwd"
BWD = "bwd"
LISTING_CAP = 8


@dataclass(frozen=True)
class BlockPattern:
    """Oriented path with the given block lengths.

    ``first`` is the direction of the first block; later blocks alternate.
    ``BlockPattern((k, l, r), FWD)`` is P(k,l,r) and the ``BWD`` version is
    its arc-reversal.
    """

    blocks: tuple[int, ...]
    first: str = FWD

    def __post_init__(self):
        blocks = tuple(self.blocks)
        object.__setattr__(self, "blocks", blocks)
        if not blocks:
            raise PatternError("a pattern needs at least one block")
        if any(not isinstance(b, int) or b < 1 for b in blocks):
            raise PatternError(f"block lengths must be positive integers: {blocks}")
        if self.first not in (FWD, BWD):
            raise PatternError(f"first direction must be {FWD!r} or {BWD!r}")

    @property
    def length(self) -> int:
        return sum(self.blocks)

    @property
    def order(self) -> int:
        return self.length + 1

    @property
    def directions(self) -> tuple[int, ...]:
        """+1 where arc j goes from position j to j+1, -1 where it goes back."""
        sign = 1 if self.first == FWD else -1
        out = []
        for b in self.blocks:
            out.extend([sign] * b)
            sign = -sign
        return tuple(out)

    @property
    def label(self) -> str:
        return ",".join(map(str, self.blocks)) + "/" + self.first

    def __str__(self) -> str:
        name = "P" if self.first == FWD else "Pbar"
        return f"{name}({','.join(map(str, self.blocks))})"


def pattern(blocks: Sequence[int], first: str = FWD) -> BlockPattern:
    return BlockPattern(tuple(blocks), first)


def P(*blocks: int) -> BlockPattern:
    return BlockPattern(tuple(blocks), FWD)


def Pbar(*blocks: int) -> BlockPattern:
    return BlockPattern(tuple(blocks), BWD)


def parse_pattern(text: str, first: str = FWD) -> BlockPattern:
    """Parse ``"k,l,r"`` or the label form ``"k,l,r/bwd"``."""
    if "/" in text:
        text, first = text.split("/", 1)
    try:
        blocks = tuple(int(x) for x in text.split(","))
    except ValueError:
        raise PatternError(f"cannot parse pattern {text!r}") from None
    return BlockPattern(blocks, first.strip())


def flip(p: BlockPattern) -> BlockPattern:
    """Reverse every arc."""
    return BlockPattern(p.blocks, BWD if p.first == FWD else FWD)


def mirror(p: BlockPattern) -> BlockPattern:
    """The same path read from its other end."""
    last_fwd = (p.first == FWD) == (len(p.blocks) % 2 == 1)
    return BlockPattern(p.blocks[::-1], BWD if last_fwd else FWD)


def is_antidirected(p: BlockPattern) -> bool:
    return all(b == 1 for b in p.blocks)


def compositions(total: int) -> Iterator[tuple[int, ...]]:
    """Compositions of ``total`` into positive parts, in lexicographic order."""
    if total == 0:
        yield ()
        return
    for head in range(1, total + 1):
        for tail in compositions(total - head):
            yield (head,) + tail


def patterns_of_order(n: int) -> list[BlockPattern]:
    """Every block pattern with ``n`` vertices (both first directions)."""
    if n < 2:
        return []
    return [BlockPattern(c, f) for c in compositions(n - 1) for f in (FWD, BWD)]


@dataclass(frozen=True)
class PathWitness:
    vertices: tuple[int, ...]
    pattern: BlockPattern

    def arcs(self) -> list[tuple[int, int]]:
        vs = self.vertices
        return [
            (vs[j], vs[j + 1]) if s > 0 else (vs[j + 1], vs[j])
            for j, s in enumerate(self.pattern.directions)
        ]

    def mapped(self, mapping: Sequence[int]) -> "PathWitness":
        """Rename vertices through ``mapping`` (e.g. an induced-subgraph map)."""
        return PathWitness(tuple(mapping[v] for v in self.vertices), self.pattern)

    def to_json(self) -> dict:
        return {"pattern": self.pattern.label, "vertices": list(self.vertices)}


def _position_filters(d: Digraph, p: BlockPattern) -> list[int]:
    dirs = p.directions
    need = []
    for j in range(p.order):
        nout = nin = 0
        if j > 0:
            if dirs[j - 1] > 0:
                nin += 1
            else:
                nout += 1
        if j < p.length:
            if dirs[j] > 0:
                nout += 1
            else:
                nin += 1
        m = 0
        for v in d.vertices:
            if d.out_degree(v) >= nout and d.in_degree(v) >= nin:
                m |= 1 << v
        need.append(m)
    return need


def iter_occurrences(d: Digraph, p: BlockPattern, start: Optional[int] = None) -> Iterator[PathWitness]:
    """All occurrences of ``p`` in lexicographic order of vertex sequence.

    ``start`` pins the first vertex.
    """
    if p.order > d.order:
        raise PatternError(f"pattern of order {p.order} exceeds host order {d.order}")
    dirs = p.directions
    allowed = _position_filters(d, p)
    L = p.length
    seq: list[int] = []

    def rec(j: int, used: int):
        if j == L + 1:
            yield PathWitness(tuple(seq), p)
            return
        prev = seq[-1]
        cand = (d.out[prev] if dirs[j - 1] > 0 else d.inn[prev]) & ~used & allowed[j]
        while cand:
            low = cand & -cand
            seq.append(low.bit_length() - 1)
            yield from rec(j + 1, used | low)
            seq.pop()
            cand ^= low

    firsts = allowed[0] if start is None else allowed[0] & (1 << start)
    while firsts:
        low = firsts & -firsts
        seq.append(low.bit_length() - 1)
        yield from rec(1, low)
        seq.pop()
        firsts ^= low


def find_pattern(d: Digraph, p: BlockPattern, start: Optional[int] = None) -> Optional[PathWitness]:
    """Lexicographically first occurrence of ``p`` in ``d``, or ``None``."""
    return next(iter_occurrences(d, p, start), None)


def contains(d: Digraph, p: BlockPattern) -> bool:
    return p.order <= d.order and find_pattern(d, p) is not None


def list_occurrences(d: Digraph, p: BlockPattern, cap: int = LISTING_CAP) -> list[PathWitness]:
    if d.order > cap:
        raise CapExceeded(f"occurrence listing capped at host order {cap}")
    return list(iter_occurrences(d, p))


def verify_witness(d: Digraph, w: PathWitness) -> bool:
    """Check a witness against the host's arc set directly."""
    try:
        vs = list(w.vertices)
        blocks = list(w.pattern.blocks)
        forward = w.pattern.first == FWD
    except Exception:
        return False
    if len(vs) != sum(blocks) + 1 or len(set(vs)) != len(vs):
        return False
    if any(not isinstance(v, int) or not 0 <= v < d.order for v in vs):
        return False
    arcs = set(d.arcs())
    pos = 0
    for b in blocks:
        for _ in range(b):
            arc = (vs[pos], vs[pos + 1]) if forward else (vs[pos + 1], vs[pos])
            if arc not in arcs:
                return False
            pos += 1
        forward = not forward
    return True


@dataclass(frozen=True)
class PathsReport:
    order: int
    found: dict
    missing: tuple[BlockPattern, ...]

    def missing_labels(self) -> list[str]:
        return [p.label for p in self.missing]


def contains_all_paths_report(t: Digraph, cap: int = 7) -> PathsReport:
    """Which patterns on ``|T|`` vertices occur in the tournament ``T``."""
    if not t.is_tournament():
        raise DigraphError("host is not a tournament")
    if t.order > cap:
        raise CapExceeded(f"path report capped at order {cap}")
    found = {}
    missing = []
    for p in patterns_of_order(t.order):
        w = find_pattern(t, p)
        if w is None:
            missing.append(p)
        else:
            found[p.label] = w
    return PathsReport(t.order, found, tuple(missing))


def directed_path_witness(vertices: Sequence[int]) -> PathWitness:
    if len(vertices) < 2:
        raise PatternError("a directed path witness needs at least one arc")
    return PathWitness(tuple(vertices), BlockPattern((len(vertices) - 1,), FWD))
