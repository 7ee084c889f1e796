"""Edge-list and digraph6 text formats.

Edge list::

    # optional comment lines
    n m
    u v        (m lines, arc u->v, 0-based)

digraph6 (nauty): ``&``, then ``chr(n + 63)`` for n <= 62, then the n*n
row-major adjacency bits zero-padded to a multiple of 6, big-endian within
each 6-bit group, each group written as ``chr(value + 63)``.
"""

from __future__ import annotations

from pathlib import Path

from dikroma.digraph import Digraph
from dikroma.errors import ContractError, ParseError

DIGRAPH6_MAX_N = 62


def parse_edge_list(text: str) -> Digraph:
    lines = [
        (no, line.strip())
        for no, line in enumerate(text.splitlines(), start=1)
        if line.strip() and not line.lstrip().startswith("#")
    ]
    if not lines:
        raise ParseError("missing 'n m' header", "line 1")
    no, header = lines[0]
    n, m = _int_pair(header, no)
    if n < 1 or n > 64:
        raise ParseError(f"vertex count {n} outside 1..64", f"line {no}")
    if m < 0:
        raise ParseError(f"negative arc count {m}", f"line {no}")
    body = lines[1:]
    if len(body) < m:
        raise ParseError(f"header announces {m} arcs but only {len(body)} follow",
                         f"line {body[-1][0] if body else no}")
    if len(body) > m:
        raise ParseError("trailing data after the last arc", f"line {body[m][0]}")
    out = [0] * n
    for no, line in body:
        u, v = _int_pair(line, no)
        for x in (u, v):
            if not 0 <= x < n:
                raise ParseError(f"vertex {x} out of range 0..{n - 1}", f"line {no}")
        if u == v:
            raise ParseError(f"loop arc {u} {v}", f"line {no}")
        if (out[u] >> v) & 1:
            raise ParseError(f"duplicate arc {u} {v}", f"line {no}")
        out[u] |= 1 << v
    return Digraph(n, out)


def _int_pair(line: str, no: int) -> tuple[int, int]:
    parts = line.split()
    if len(parts) != 2:
        raise ParseError(f"expected two integers, got {line!r}", f"line {no}")
    try:
        return int(parts[0]), int(parts[1])
    except ValueError:
        raise ParseError(f"expected two integers, got {line!r}", f"line {no}") from None


def to_edge_list(d: Digraph) -> str:
    lines = [f"{d.n} {d.m}"]
    lines += [f"{u} {v}" for u, v in d.arcs()]
    return "\n".join(lines) + "\n"


def to_digraph6(d: Digraph) -> str:
    if d.n > DIGRAPH6_MAX_N:
        raise ContractError(f"digraph6 output supports n <= {DIGRAPH6_MAX_N}")
    bits = [(row >> v) & 1 for row in d.out for v in range(d.n)]
    bits += [0] * (-len(bits) % 6)
    chunks = []
    for i in range(0, len(bits), 6):
        value = 0
        for b in bits[i:i + 6]:
            value = (value << 1) | b
        chunks.append(chr(value + 63))
    return "&" + chr(d.n + 63) + "".join(chunks)


def parse_digraph6(text: str) -> Digraph:
    s = text.strip()
    if s.startswith(">>digraph6<<"):
        s = s[len(">>digraph6<<"):]
    if not s.startswith("&"):
        raise ParseError("digraph6 must start with '&'", "byte 0")
    if len(s) < 2:
        raise ParseError("missing vertex count", "byte 1")
    for pos, ch in enumerate(s[1:], start=1):
        if not 63 <= ord(ch) <= 126:
            raise ParseError(f"invalid digraph6 character {ch!r}", f"byte {pos}")
    n = ord(s[1]) - 63
    if n > DIGRAPH6_MAX_N:
        raise ParseError("multi-byte vertex counts (n > 62) are not supported", "byte 1")
    if n < 1:
        raise ParseError("digraph6 vertex count must be at least 1", "byte 1")
    nbytes = -(-n * n // 6)
    body = s[2:]
    if len(body) < nbytes:
        raise ParseError(f"expected {nbytes} adjacency bytes, got {len(body)}",
                         f"byte {len(s)}")
    if len(body) > nbytes:
        raise ParseError("trailing garbage after adjacency data", f"byte {2 + nbytes}")
    bits = []
    for ch in body:
        value = ord(ch) - 63
        bits += [(value >> k) & 1 for k in range(5, -1, -1)]
    if any(bits[n * n:]):
        raise ParseError("nonzero padding bits", f"byte {len(s) - 1}")
    out = [0] * n
    for u in range(n):
        for v in range(n):
            if bits[u * n + v]:
                if u == v:
                    raise ParseError(f"loop at vertex {u}", f"byte {2 + (u * n + v) // 6}")
                out[u] |= 1 << v
    return Digraph(n, out)


def parse_digraph(text: str) -> Digraph:
    """Auto-detect: a leading '&' selects digraph6, anything else edge list."""
    if text.lstrip().startswith("&") or text.lstrip().startswith(">>digraph6<<"):
        return parse_digraph6(text)
    return parse_edge_list(text)


def read_digraph(source: str | Path) -> Digraph:
    """Read a digraph from a file path, or from inline digraph6 text."""
    s = str(source)
    if s.startswith("&"):
        return parse_digraph6(s)
    return parse_digraph(Path(s).read_text())
