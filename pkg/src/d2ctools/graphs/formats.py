"""
Text codecs for graphs and colorings.

graph6: byte 0 is n + 63 (or '~' followed by three 6-bit groups for 63 <= n <= 258047), then the upper triangle
of the adjacency matrix in column order x(0,1), x(0,2), x(1,2), x(0,3), ... packed into 6-bit groups, each
group + 63, zero-padded on the right. An optional ">>graph6<<" header is accepted and never written.

Edge list: a "n m" header followed by m "u v" lines with 0-based endpoints. Blank lines and lines starting with
'#' are ignored.

Colorings: one color (1 or 2) per line; line i is the color of vertex i.
"""

from typing import Optional

from d2ctools.graphs.core import Graph, TwoColoring

GRAPH6_HEADER = ">>graph6<<"
MAX_SINGLE_BYTE_N = 62
MAX_GRAPH6_N = 258047


class GraphParseError(ValueError):
    def __init__(self, message: str, offset: Optional[int] = None, line: Optional[int] = None):
        self.offset = offset
        self.line = line
        if offset is not None:
            message = f"{message} (byte offset {offset})"
        elif line is not None:
            message = f"{message} (line {line})"
        super().__init__(message)


class UnsupportedGraphSize(ValueError):
    pass


def _encode_size(n: int) -> str:
    if n <= MAX_SINGLE_BYTE_N:
        return chr(n + 63)
    if n <= MAX_GRAPH6_N:
        return "~" + "".join(chr(((n >> shift) & 63) + 63) for shift in (12, 6, 0))
    raise UnsupportedGraphSize(f"graph6 output supports n <= {MAX_GRAPH6_N}, got n={n}")


def write_graph6(g: Graph) -> str:
    chars = [_encode_size(g.n)]
    nbits = g.n * (g.n - 1) // 2
    bits = bytearray(nbits + (-nbits) % 6)
    for u, v in g.edges:
        bits[v * (v - 1) // 2 + u] = 1
    for start in range(0, len(bits), 6):
        value = 0
        for bit in bits[start : start + 6]:
            value = (value << 1) | bit
        chars.append(chr(value + 63))
    return "".join(chars)


def parse_graph6(text: str) -> Graph:
    record = text.strip()
    base = 0
    if record.startswith(GRAPH6_HEADER):
        record = record[len(GRAPH6_HEADER) :]
        base = len(GRAPH6_HEADER)
    if not record:
        raise GraphParseError("empty graph6 record", offset=base)
    for i, ch in enumerate(record):
        if not 63 <= ord(ch) <= 126:
            raise GraphParseError(f"byte {ord(ch)} outside [63, 126]", offset=base + i)

    if record[0] == "~":
        if len(record) > 1 and record[1] == "~":
            raise UnsupportedGraphSize(f"graph6 input supports n <= {MAX_GRAPH6_N}; 8-byte size form found")
        if len(record) < 4:
            raise GraphParseError("truncated 4-byte size field", offset=base + len(record))
        n = 0
        for ch in record[1:4]:
            n = (n << 6) | (ord(ch) - 63)
        data_start = 4
    else:
        n = ord(record[0]) - 63
        data_start = 1
    if n == 0:
        raise GraphParseError("empty graph (n = 0) is not accepted", offset=base)

    nbits = n * (n - 1) // 2
    expected = (nbits + 5) // 6
    found = len(record) - data_start
    if found != expected:
        raise GraphParseError(
            f"n={n} needs {expected} data bytes but the record has {found}",
            offset=base + data_start + min(found, expected),
        )

    edges = []
    bit = 0
    u, v = 0, 1
    for i in range(data_start, len(record)):
        value = ord(record[i]) - 63
        for shift in range(5, -1, -1):
            is_set = (value >> shift) & 1
            if bit < nbits:
                if is_set:
                    edges.append((u, v))
                u += 1
                if u == v:
                    u, v = 0, v + 1
            elif is_set:
                raise GraphParseError("nonzero padding bit", offset=base + i)
            bit += 1
    return Graph(n=n, edges=frozenset(edges))


def _parse_int(token: str, line: int) -> int:
    try:
        return int(token)
    except ValueError:
        raise GraphParseError(f"expected an integer, got {token!r}", line=line) from None


def parse_edge_list(text: str) -> Graph:
    header: Optional[tuple[int, int]] = None
    edges: set[tuple[int, int]] = set()
    last_line = 0
    for line_number, raw in enumerate(text.splitlines(), start=1):
        last_line = line_number
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if header is None:
            if len(parts) != 2:
                raise GraphParseError("header must be 'n m'", line=line_number)
            n, m = (_parse_int(p, line_number) for p in parts)
            if n <= 0:
                raise GraphParseError(f"vertex count must be positive, got {n}", line=line_number)
            if m < 0:
                raise GraphParseError(f"edge count must be non-negative, got {m}", line=line_number)
            header = (n, m)
            continue

        n, m = header
        if len(parts) != 2:
            raise GraphParseError("edge line must be 'u v'", line=line_number)
        u, v = (_parse_int(p, line_number) for p in parts)
        if u == v:
            raise GraphParseError(f"self-loop at vertex {u}", line=line_number)
        if not (0 <= u < n and 0 <= v < n):
            raise GraphParseError(f"endpoint out of range [0, {n}) in edge ({u}, {v})", line=line_number)
        key = (u, v) if u < v else (v, u)
        if key in edges:
            raise GraphParseError(f"duplicate edge ({u}, {v})", line=line_number)
        if len(edges) == m:
            raise GraphParseError(f"more than the declared {m} edges", line=line_number)
        edges.add(key)

    if header is None:
        raise GraphParseError("missing 'n m' header", line=max(last_line, 1))
    n, m = header
    if len(edges) != m:
        raise GraphParseError(f"declared {m} edges but found {len(edges)}", line=max(last_line, 1))
    return Graph(n=n, edges=frozenset(edges))


def write_edge_list(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.sorted_edges())
    return "\n".join(lines) + "\n"


def parse_coloring(text: str) -> TwoColoring:
    colors = []
    for line_number, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        value = _parse_int(line, line_number)
        if value not in (1, 2):
            raise GraphParseError(f"color must be 1 or 2, got {value}", line=line_number)
        colors.append(value)
    return TwoColoring(colors=tuple(colors))
