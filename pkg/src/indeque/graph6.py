"""graph6 and edge-list text formats.

graph6 is McKay's printable 6-bit encoding of undirected simple
graphs: a vertex-count header followed by the upper triangle of the
adjacency matrix in column-major order, packed into 6-bit chunks that
are offset by 63.  Vertex counts below 63 use a one-byte header;
counts up to 258047 use a four-byte header introduced by '~'.  Larger
graphs, sparse6 and digraph6 are rejected.
"""

from __future__ import annotations

from .graph import Graph

HEADER = ">>graph6<<"


class Graph6Error(ValueError):
    """Malformed graph6 input."""


class UnsupportedFormatError(Graph6Error):
    """Input is sparse6/digraph6 or otherwise out of scope."""


def _encode_n(n: int) -> str:
    if n < 0:
        raise Graph6Error(f"negative vertex count {n}")
    if n <= 62:
        return chr(63 + n)
    if n <= 258047:
        return "~" + chr(63 + (n >> 12 & 63)) + chr(63 + (n >> 6 & 63)) + chr(63 + (n & 63))
    raise Graph6Error(f"vertex count {n} exceeds the supported graph6 range")


def serialize_graph6(g: Graph) -> str:
    """Canonical graph6 line for ``g`` (no trailing newline)."""
    out = [_encode_n(g.n)]
    acc = 0
    nbits = 0
    for col in range(1, g.n):
        colmask = g.masks[col]
        for row in range(col):
            acc = acc << 1 | (colmask >> row & 1)
            nbits += 1
            if nbits == 6:
                out.append(chr(63 + acc))
                acc = 0
                nbits = 0
    if nbits:
        acc <<= 6 - nbits
        out.append(chr(63 + acc))
    return "".join(out)


def parse_graph6(line: str) -> Graph:
    """Parse one graph6 line (an optional '>>graph6<<' header is allowed)."""
    s = line.strip()
    if s.startswith(HEADER):
        s = s[len(HEADER):]
    if not s:
        raise Graph6Error("empty graph6 line")
    if s.startswith(":") or s.startswith(">>sparse6<<"):
        raise UnsupportedFormatError("sparse6 is not supported")
    if s.startswith("&") or s.startswith(">>digraph6<<"):
        raise UnsupportedFormatError("digraph6 is not supported")
    for ch in s:
        if not 63 <= ord(ch) <= 126:
            raise Graph6Error(f"illegal character {ch!r} in graph6 line")

    if s[0] == "~":
        if len(s) >= 2 and s[1] == "~":
            raise UnsupportedFormatError(
                "graphs needing the eight-byte graph6 header are not supported"
            )
        if len(s) < 4:
            raise Graph6Error("malformed length prefix: truncated '~' header")
        n = (ord(s[1]) - 63) << 12 | (ord(s[2]) - 63) << 6 | (ord(s[3]) - 63)
        if n < 63:
            raise Graph6Error("malformed length prefix: '~' header for a small graph")
        body = s[4:]
    else:
        n = ord(s[0]) - 63
        body = s[1:]

    nbits = n * (n - 1) // 2
    expected = (nbits + 5) // 6
    if len(body) != expected:
        raise Graph6Error(
            f"body has {len(body)} bytes, expected {expected} for {n} vertices"
        )
    edges = []
    bitpos = 0
    for ch in body:
        val = ord(ch) - 63
        for k in range(5, -1, -1):
            bit = val >> k & 1
            if bitpos < nbits:
                if bit:
                    # column-major upper triangle: bit index -> (row, col)
                    edges.append(bitpos)
            elif bit:
                raise Graph6Error("padding bits are not zero")
            bitpos += 1
    pairs = []
    col = 1
    base = 0
    for idx in edges:
        while idx >= base + col:
            base += col
            col += 1
        pairs.append((idx - base, col))
    return Graph(n, pairs)


# -- edge-list text format ---------------------------------------------


class EdgeListError(ValueError):
    """Malformed edge-list text."""


def serialize_edge_list(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def parse_edge_list(text: str) -> Graph:
    """Parse edge-list text: a "n m" line, then m "u v" lines.

    Blank lines and lines starting with '#' are ignored.
    """
    rows = [
        ln.strip()
        for ln in text.splitlines()
        if ln.strip() and not ln.strip().startswith("#")
    ]
    if not rows:
        raise EdgeListError("no data lines")
    head = rows[0].split()
    if len(head) != 2:
        raise EdgeListError(f"expected 'n m' header, got {rows[0]!r}")
    try:
        n, m = int(head[0]), int(head[1])
    except ValueError as exc:
        raise EdgeListError(f"non-integer header {rows[0]!r}") from exc
    if len(rows) - 1 != m:
        raise EdgeListError(f"header promises {m} edges, found {len(rows) - 1}")
    edges = []
    for row in rows[1:]:
        parts = row.split()
        if len(parts) != 2:
            raise EdgeListError(f"expected 'u v', got {row!r}")
        try:
            edges.append((int(parts[0]), int(parts[1])))
        except ValueError as exc:
            raise EdgeListError(f"non-integer edge line {row!r}") from exc
    return Graph(n, edges)
