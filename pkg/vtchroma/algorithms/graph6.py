"""graph6 codec.

Size prefix: one byte n+63 for n <= 62, '~' plus three 6-bit bytes for
n <= 258047, '~~' plus six bytes beyond that. The body packs the upper
triangle column by column (x01, x02, x12, x03, ...) into 6-bit groups,
each offset by 63, zero padded at the end.
"""

from pathlib import Path
from typing import Iterable, Iterator, Optional

from vtchroma.core.config import settings
from vtchroma.core.exceptions import (
    CapacityExceededError,
    Graph6ParseError,
    GraphValidationError,
)
from vtchroma.models.graph import Graph

HEADER = ">>graph6<<"
_SHORT_MAX = 62
_MEDIUM_MAX = 258047


def _decode_size(data: bytes) -> tuple[int, int]:
    if not data:
        raise Graph6ParseError("empty graph6 string")
    if data[0] != 126:
        return data[0] - 63, 1
    if len(data) >= 2 and data[1] == 126:
        if len(data) < 8:
            raise Graph6ParseError("truncated size field")
        return _bits_value(data[2:8]), 8
    if len(data) < 4:
        raise Graph6ParseError("truncated size field")
    return _bits_value(data[1:4]), 4


def _bits_value(chunk: bytes) -> int:
    value = 0
    for byte in chunk:
        value = (value << 6) | (byte - 63)
    return value


def _encode_size(n: int) -> str:
    if n <= _SHORT_MAX:
        return chr(n + 63)
    if n <= _MEDIUM_MAX:
        return "~" + "".join(chr(((n >> shift) & 63) + 63) for shift in (12, 6, 0))
    return "~~" + "".join(chr(((n >> shift) & 63) + 63) for shift in (30, 24, 18, 12, 6, 0))


def parse_graph6(text: str, capacity: Optional[int] = None) -> Graph:
    s = text.strip()
    if s.startswith(HEADER):
        s = s[len(HEADER):]
    try:
        data = s.encode("ascii")
    except UnicodeEncodeError:
        raise Graph6ParseError("non-ASCII character in graph6 string")
    for pos, byte in enumerate(data):
        if not 63 <= byte <= 126:
            raise Graph6ParseError(f"malformed byte {byte!r} at position {pos}")

    n, offset = _decode_size(data)
    limit = capacity or settings.GRAPH_CAPACITY
    if n > limit:
        raise CapacityExceededError(n, limit)

    nbits = n * (n - 1) // 2
    body = data[offset:]
    expected = (nbits + 5) // 6
    if len(body) < expected:
        raise Graph6ParseError(f"truncated bit stream: expected {expected} bytes, got {len(body)}")
    if len(body) > expected:
        raise Graph6ParseError(f"trailing data: expected {expected} bytes, got {len(body)}")

    adj = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            byte = body[k // 6] - 63
            if byte >> (5 - k % 6) & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            k += 1
    if expected and (body[-1] - 63) & ((1 << (6 * expected - nbits)) - 1):
        raise Graph6ParseError("non-zero padding bits")
    return Graph(n, tuple(adj))


def write_graph6(g: Graph) -> str:
    if g.n > settings.GRAPH_CAPACITY:
        raise CapacityExceededError(g.n, settings.GRAPH_CAPACITY)
    out = [_encode_size(g.n)]
    group = 0
    filled = 0
    for j in range(1, g.n):
        for i in range(j):
            group = (group << 1) | (g.adj[i] >> j & 1)
            filled += 1
            if filled == 6:
                out.append(chr(group + 63))
                group = filled = 0
    if filled:
        out.append(chr((group << (6 - filled)) + 63))
    return "".join(out)


def read_graph6_lines(lines: Iterable[str]) -> Iterator[tuple[int, Graph]]:
    """Yield (line number, graph) per graph6 line; blank lines and '#' comments skipped."""
    for number, line in enumerate(lines, start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        try:
            graph = parse_graph6(stripped)
        except GraphValidationError as exc:
            raise Graph6ParseError(exc.message, line_number=number) from exc
        yield number, graph


def read_graph6_file(path: Path) -> list[tuple[int, Graph]]:
    with open(path, encoding="ascii", errors="replace") as handle:
        return list(read_graph6_lines(handle))
