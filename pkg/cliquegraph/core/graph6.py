"""graph6 encoding and decoding over bitset graphs."""
from __future__ import annotations

from typing import Final, List

from .errors import Graph6ParseError, InvalidArgumentError
from .graph import Graph

HEADER: Final[str] = ">>graph6<<"
_BIAS: Final[int] = 63
_SMALL_N: Final[int] = 62
_MEDIUM_N: Final[int] = 258047
_MAX_N: Final[int] = 68719476735


def _encode_size(n: int) -> List[int]:
    if n <= _SMALL_N:
        return [n]
    if n <= _MEDIUM_N:
        return [_SMALL_N + 1] + [(n >> shift) & 0x3F for shift in (12, 6, 0)]
    if n <= _MAX_N:
        return [_SMALL_N + 1, _SMALL_N + 1] + [(n >> shift) & 0x3F for shift in (30, 24, 18, 12, 6, 0)]
    raise InvalidArgumentError(f"graph6 cannot encode n={n}")


def write_graph6(graph: Graph) -> str:
    """Encode ``graph`` as a graph6 line without header or newline."""
    values = _encode_size(graph.n)
    chunk = 0
    filled = 0
    for j in range(1, graph.n):
        row = graph.adj[j]
        for i in range(j):
            chunk = (chunk << 1) | (row >> i & 1)
            filled += 1
            if filled == 6:
                values.append(chunk)
                chunk = filled = 0
    if filled:
        values.append(chunk << (6 - filled))
    return "".join(chr(value + _BIAS) for value in values)


def parse_graph6(text: str) -> Graph:
    """Decode one graph6 line; an optional ``>>graph6<<`` header is skipped."""
    line = text.rstrip("\r\n")
    start = len(HEADER) if line.startswith(HEADER) else 0
    data = line[start:]
    values: List[int] = []
    for index, char in enumerate(data):
        code = ord(char)
        if not _BIAS <= code <= _BIAS + 63:
            raise Graph6ParseError(f"character {char!r} outside the printable range", start + index)
        values.append(code - _BIAS)
    if not values:
        raise Graph6ParseError("empty input", start)

    if values[0] <= _SMALL_N:
        n, pos = values[0], 1
    elif len(values) >= 2 and values[1] <= _SMALL_N:
        if len(values) < 4:
            raise Graph6ParseError("truncated 18-bit size header", start + len(values))
        n = (values[1] << 12) | (values[2] << 6) | values[3]
        pos = 4
    else:
        if len(values) < 8:
            raise Graph6ParseError("truncated 36-bit size header", start + len(values))
        n = 0
        for value in values[2:8]:
            n = (n << 6) | value
        pos = 8

    bit_count = n * (n - 1) // 2
    expected = (bit_count + 5) // 6
    body = values[pos:]
    if len(body) != expected:
        offset = start + pos + min(len(body), expected)
        raise Graph6ParseError(f"expected {expected} data bytes for n={n}, found {len(body)}", offset)
    padding = expected * 6 - bit_count
    if padding and body[-1] & ((1 << padding) - 1):
        raise Graph6ParseError("nonzero padding bits", start + pos + expected - 1)

    rows = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            if body[k // 6] >> (5 - k % 6) & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            k += 1
    return Graph(n, tuple(rows))
