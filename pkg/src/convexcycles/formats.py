"""graph6 and plain edge-list text formats.

graph6 packs the upper triangle of the adjacency matrix, column by column,
into 6-bit groups offset by 63; the short header covers n <= 62 and the
'~'-prefixed long headers cover larger orders.  The edge-list format is one
"u v" pair per line with '#' comments; the vertex count is taken to be
1 + the largest endpoint mentioned.
"""

from __future__ import annotations

from .errors import ParseError
from .graphs import Graph, from_edge_list

GRAPH6_HEADER = ">>graph6<<"


def _decode_size(data: list[int]) -> tuple[int, int]:
    """Return (n, index of first payload byte)."""
    if not data:
        raise ParseError("empty graph6 line")
    if data[0] < 63:
        n = data[0]
        if n > 62:
            raise ParseError(f"short-form order {n} exceeds 62")
        return n, 1
    # long forms: '~' + 3 bytes (18 bits), '~~' + 6 bytes (36 bits)
    if len(data) >= 2 and data[1] == 63:
        if len(data) < 8:
            raise ParseError("truncated 8-byte graph6 size header")
        n = 0
        for b in data[2:8]:
            n = (n << 6) | b
        return n, 8
    if len(data) < 4:
        raise ParseError("truncated 4-byte graph6 size header")
    n = (data[1] << 12) | (data[2] << 6) | data[3]
    return n, 4


def parse_graph6(text: str) -> Graph:
    """Decode one graph6 line into a labeled graph."""
    line = text.strip()
    if line.startswith(GRAPH6_HEADER):
        line = line[len(GRAPH6_HEADER):]
    if not line:
        raise ParseError("empty graph6 line")
    data = []
    for ch in line:
        b = ord(ch) - 63
        if not 0 <= b <= 63:
            raise ParseError(f"character {ch!r} outside the graph6 alphabet")
        data.append(b)
    # the '~' marker itself decodes to 63, only legal inside the size header
    n, start = _decode_size(data)
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    payload = data[start:]
    if len(payload) < need:
        raise ParseError(f"graph6 payload too short: {len(payload)} bytes, need {need}")
    if len(payload) > need:
        raise ParseError(f"graph6 payload too long: {len(payload)} bytes, need {need}")
    edges = []
    bit = 0
    for v in range(1, n):
        for u in range(v):
            byte, off = divmod(bit, 6)
            if payload[byte] >> (5 - off) & 1:
                edges.append((u, v))
            bit += 1
    return from_edge_list(n, edges)


def _encode_size(n: int) -> str:
    if n <= 62:
        return chr(n + 63)
    if n <= 258047:
        return "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    if n <= 68719476735:
        return "~~" + "".join(chr(((n >> s) & 63) + 63) for s in (30, 24, 18, 12, 6, 0))
    raise ParseError(f"order {n} exceeds the graph6 limit")


def write_graph6(g: Graph) -> str:
    """Encode a labeled graph as one graph6 line (no trailing newline)."""
    chunks = [_encode_size(g.n)]
    acc = 0
    width = 0
    for v in range(1, g.n):
        for u in range(v):
            acc = (acc << 1) | (1 if g.has_edge(u, v) else 0)
            width += 1
            if width == 6:
                chunks.append(chr(acc + 63))
                acc, width = 0, 0
    if width:
        chunks.append(chr((acc << (6 - width)) + 63))
    return "".join(chunks)


def parse_edge_list(text: str) -> Graph:
    """Parse "u v" lines; '#' starts a comment, blank lines are skipped."""
    edges = []
    top = -1
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ParseError(f"line {lineno}: expected 'u v', got {raw!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError as exc:
            raise ParseError(f"line {lineno}: non-integer endpoint in {raw!r}") from exc
        if u < 0 or v < 0:
            raise ParseError(f"line {lineno}: negative vertex in {raw!r}")
        edges.append((u, v))
        top = max(top, u, v)
    return from_edge_list(top + 1, edges)


def write_edge_list(g: Graph) -> str:
    return "".join(f"{e.u} {e.v}\n" for e in g.edge_list)


def looks_like_graph6(line: str) -> bool:
    s = line.strip()
    if s.startswith(GRAPH6_HEADER):
        return True
    return bool(s) and all(63 <= ord(c) <= 126 for c in s)


def load_graph_text(text: str) -> Graph:
    """Auto-detect graph6 versus edge-list and parse accordingly.

    graph6 input is taken from the first non-blank line; edge-list input
    consumes the whole text.
    """
    for raw in text.splitlines():
        line = raw.strip()
        if not line:
            continue
        # digits, spaces, and '#' all fall outside the graph6 alphabet, so
        # edge-list lines can never be mistaken for graph6
        if looks_like_graph6(line):
            return parse_graph6(line)
        break
    return parse_edge_list(text)
