"""Edge-list and digraph6 serialisation.

Edge-list text::

    # optional comments
    dg <n> <m> <oriented|general>
    u v
    ...

digraph6 is the nauty ``&``-prefixed format: the order, then the n x n
adjacency matrix row-major, six bits per printable character (offset 63).
"""

from __future__ import annotations

from pathlib import Path
from typing import Iterator

from .digraph import GENERAL, MODES, ORIENTED, Digraph, build
from .errors import FormatError


def _strip(line: str) -> str:
    return line.split("#", 1)[0].strip()


def to_edge_list(d: Digraph) -> str:
    arcs = d.arcs()
    lines = [f"dg {d.order} {len(arcs)} {d.mode}"]
    lines += [f"{u} {v}" for u, v in arcs]
    return "\n".join(lines) + "\n"


def _parse_header(line: str) -> tuple[int, int, str]:
    parts = line.split()
    if len(parts) != 4 or parts[0] != "dg":
        raise FormatError(f"malformed header {line!r}")
    try:
        n, m = int(parts[1]), int(parts[2])
    except ValueError:
        raise FormatError(f"malformed header {line!r}") from None
    if n < 0 or m < 0:
        raise FormatError(f"negative size in header {line!r}")
    if parts[3] not in MODES:
        raise FormatError(f"unknown mode {parts[3]!r}")
    return n, m, parts[3]


def iter_edge_lists(text: str) -> Iterator[Digraph]:
    """Parse one or more concatenated edge-list blocks."""
    lines = [ln for ln in (_strip(raw) for raw in text.splitlines()) if ln]
    pos = 0
    while pos < len(lines):
        n, m, mode = _parse_header(lines[pos])
        pos += 1
        arcs = []
        while pos < len(lines) and not lines[pos].startswith("dg"):
            parts = lines[pos].split()
            if len(parts) != 2:
                raise FormatError(f"malformed arc line {lines[pos]!r}")
            try:
                arcs.append((int(parts[0]), int(parts[1])))
            except ValueError:
                raise FormatError(f"malformed arc line {lines[pos]!r}") from None
            pos += 1
        if len(arcs) != m:
            raise FormatError(f"header declares {m} arcs, found {len(arcs)}")
        yield build(n, arcs, mode)


def parse_edge_list(text: str) -> Digraph:
    graphs = list(iter_edge_lists(text))
    if len(graphs) != 1:
        raise FormatError(f"expected exactly one digraph, found {len(graphs)}")
    return graphs[0]


# -- digraph6 ---------------------------------------------------------------


def _encode_n(n: int) -> str:
    if n <= 62:
        return chr(63 + n)
    if n <= 258047:
        return "~" + "".join(chr(63 + (n >> s & 63)) for s in (12, 6, 0))
    raise FormatError("order too large for digraph6")


def to_digraph6(d: Digraph) -> str:
    n = d.order
    bits = [(d.out[i] >> j) & 1 for i in range(n) for j in range(n)]
    bits += [0] * (-len(bits) % 6)
    chars = []
    for k in range(0, len(bits), 6):
        v = 0
        for b in bits[k:k + 6]:
            v = v << 1 | b
        chars.append(chr(63 + v))
    return "&" + _encode_n(n) + "".join(chars)


def parse_digraph6(s: str, mode: str | None = None) -> Digraph:
    """Parse a digraph6 string.

    With ``mode=None`` the result is oriented when digon-free and general
    otherwise.
    """
    s = s.strip()
    if s.startswith(">>digraph6<<"):
        s = s[12:]
    if not s.startswith("&"):
        raise FormatError("digraph6 data must start with '&'")
    data = s[1:]
    if not data:
        raise FormatError("missing order")
    vals = [ord(c) - 63 for c in data]
    if any(not 0 <= v < 64 for v in vals):
        raise FormatError("character outside the digraph6 range")
    if vals[0] == 63:
        if len(vals) < 4:
            raise FormatError("truncated order field")
        n = vals[1] << 12 | vals[2] << 6 | vals[3]
        body = vals[4:]
    else:
        n = vals[0]
        body = vals[1:]
    need = -(-n * n // 6)
    if len(body) != need:
        raise FormatError(f"expected {need} data characters for order {n}, got {len(body)}")
    bits = []
    for v in body:
        bits.extend((v >> s) & 1 for s in range(5, -1, -1))
    arcs = []
    for i in range(n):
        if bits[i * n + i]:
            raise FormatError(f"nonzero diagonal at vertex {i}")
        for j in range(n):
            if bits[i * n + j]:
                arcs.append((i, j))
    if mode is None:
        aset = set(arcs)
        mode = GENERAL if any((v, u) in aset for u, v in arcs) else ORIENTED
    return build(n, arcs, mode)


# -- files ------------------------------------------------------------------


def parse_any(text: str) -> list[Digraph]:
    """Parse edge-list blocks or digraph6 lines, detected from the first record."""
    body = [ln for ln in (_strip(raw) for raw in text.splitlines()) if ln]
    if not body:
        raise FormatError("no digraph found")
    if body[0].startswith("&") or body[0].startswith(">>digraph6<<"):
        return [parse_digraph6(ln) for ln in body]
    return list(iter_edge_lists(text))


def read_digraphs(path) -> list[Digraph]:
    return parse_any(Path(path).read_text())


def read_digraph(path) -> Digraph:
    graphs = read_digraphs(path)
    if len(graphs) != 1:
        raise FormatError(f"{path}: expected one digraph, found {len(graphs)}")
    return graphs[0]
