"""Bit-exact graph6 codec.

The format packs the upper triangle of the adjacency matrix in column-major
order into 6-bit groups, each offset by 63 into printable ASCII.  Orders up
to 62 use a single header byte n+63; larger orders use '~' plus an 18-bit
big-endian group, or '~~' plus a 36-bit group.
"""

from __future__ import annotations

from .graphs import Graph

_OFFSET = 63
_MAX_SHORT = 62
_MAX_MEDIUM = 258047
_MAX_LONG = 68719476735
_HEADER = ">>graph6<<"


class Graph6Error(ValueError):
    """Malformed graph6 input; carries the byte offset of the defect."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte offset {offset})")
        self.offset = offset


def _encode_order(n: int) -> list[int]:
    if n <= _MAX_SHORT:
        return [n + _OFFSET]
    if n <= _MAX_MEDIUM:
        return [126] + [((n >> s) & 63) + _OFFSET for s in (12, 6, 0)]
    if n <= _MAX_LONG:
        return [126, 126] + [((n >> s) & 63) + _OFFSET for s in (30, 24, 18, 12, 6, 0)]
    raise ValueError(f"graph6 cannot encode order {n}")


def encode_graph6(g: Graph) -> str:
    """Encode a graph as a graph6 string (no header, no newline)."""
    out = _encode_order(g.n)
    bits = 0
    nbits = 0
    for col in range(1, g.n):
        for row in range(col):
            bits = (bits << 1) | (1 if (row, col) in g.edges else 0)
            nbits += 1
            if nbits == 6:
                out.append(bits + _OFFSET)
                bits = 0
                nbits = 0
    if nbits:
        out.append((bits << (6 - nbits)) + _OFFSET)
    return "".join(chr(b) for b in out)


def _decode_order(data: bytes) -> tuple[int, int]:
    """Return (order, header length)."""

    def group(i: int) -> int:
        if i >= len(data):
            raise Graph6Error("truncated order field", len(data))
        b = data[i]
        if not _OFFSET <= b <= 126:
            raise Graph6Error(f"byte {b} outside graph6 range 63..126", i)
        return b - _OFFSET

    if group(0) != 63:
        return group(0), 1
    if group(1) != 63:
        n = (group(1) << 12) | (group(2) << 6) | group(3)
        return n, 4
    n = 0
    for i in range(2, 8):
        n = (n << 6) | group(i)
    return n, 8


def decode_graph6(text: str | bytes) -> Graph:
    """Decode a graph6 string or byte string; accepts the optional header."""
    if isinstance(text, str):
        try:
            data = text.encode("ascii")
        except UnicodeEncodeError as exc:
            raise Graph6Error("non-ASCII input", exc.start) from None
    else:
        data = bytes(text)
    if data.startswith(_HEADER.encode()):
        data = data[len(_HEADER):]
    data = data.rstrip(b"\r\n")
    if not data:
        raise Graph6Error("empty input", 0)
    n, start = _decode_order(data)
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    if len(data) < start + nbytes:
        raise Graph6Error(
            f"truncated edge data: need {nbytes} bytes, have {len(data) - start}",
            len(data),
        )
    if len(data) > start + nbytes:
        raise Graph6Error("trailing data after edge bytes", start + nbytes)
    edges = []
    bit = 0
    row, col = 0, 1
    for i in range(start, len(data)):
        b = data[i]
        if not _OFFSET <= b <= 126:
            raise Graph6Error(f"byte {b} outside graph6 range 63..126", i)
        group = b - _OFFSET
        for shift in (5, 4, 3, 2, 1, 0):
            if bit < nbits:
                if (group >> shift) & 1:
                    edges.append((row, col))
                bit += 1
                row += 1
                if row == col:
                    row, col = 0, col + 1
            elif (group >> shift) & 1:
                raise Graph6Error("nonzero padding bits", i)
    return Graph.from_edges(n, edges)
