"""graph6 and edge-list readers/writers.

Edge-list layout: a header line ``n m`` followed by ``m`` lines ``u v`` with
0-indexed endpoints.  Blank lines and ``#`` comments are ignored.
"""

from __future__ import annotations

from .errors import ParseError
from .graph import Graph

FORMATS = ("graph6", "edge-list")


def _text(data: bytes | str) -> str:
    if isinstance(data, bytes):
        try:
            return data.decode("ascii")
        except UnicodeDecodeError as exc:
            raise ParseError(f"non-ASCII input: {exc}") from None
    return data


def parse_graph(data: bytes | str, fmt: str) -> Graph:
    if fmt == "graph6":
        return parse_graph6(data)
    if fmt == "edge-list":
        return parse_edge_list(data)
    raise ValueError(f"unknown format {fmt!r}")


def write_graph(g: Graph, fmt: str) -> bytes:
    if fmt == "graph6":
        return write_graph6(g)
    if fmt == "edge-list":
        return write_edge_list(g)
    raise ValueError(f"unknown format {fmt!r}")


# -- edge list ---------------------------------------------------------------

def parse_edge_list(data: bytes | str) -> Graph:
    lines = [
        (i, line.split("#", 1)[0].split())
        for i, line in enumerate(_text(data).splitlines(), start=1)
    ]
    lines = [(i, toks) for i, toks in lines if toks]
    if not lines:
        raise ParseError("empty input", 1)
    lineno, header = lines[0]
    n, m = _ints(header, lineno, "header 'n m'")
    if n < 1 or m < 0:
        raise ParseError(f"bad header values n={n} m={m}", lineno)
    body = lines[1:]
    if len(body) != m:
        where = body[m][0] if len(body) > m else (body[-1][0] if body else lineno)
        raise ParseError(f"header announces {m} edges, found {len(body)}", where)
    rows = [0] * n
    for lineno, toks in body:
        u, v = _ints(toks, lineno, "edge 'u v'")
        if not (0 <= u < n and 0 <= v < n):
            raise ParseError(f"vertex id out of range 0..{n - 1} in ({u}, {v})", lineno)
        if u == v:
            raise ParseError(f"self-loop at vertex {u}", lineno)
        if rows[u] >> v & 1:
            raise ParseError(f"duplicate edge ({u}, {v})", lineno)
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph._from_rows(rows)


def _ints(toks: list[str], lineno: int, what: str) -> tuple[int, int]:
    if len(toks) != 2:
        raise ParseError(f"expected {what}, got {' '.join(toks)!r}", lineno)
    try:
        return int(toks[0]), int(toks[1])
    except ValueError:
        raise ParseError(f"expected {what}, got {' '.join(toks)!r}", lineno) from None


def write_edge_list(g: Graph) -> bytes:
    out = [f"{g.n} {g.num_edges}"]
    out += [f"{u} {v}" for u, v in g.edges()]
    return ("\n".join(out) + "\n").encode("ascii")


# -- graph6 ------------------------------------------------------------------
# Upper triangle in column order (0,1),(0,2),(1,2),(0,3),... packed six bits
# per byte, each byte offset by 63.

def _encode_n(n: int) -> bytes:
    if n <= 62:
        return bytes([n + 63])
    if n <= 258047:
        return bytes([126] + [((n >> s) & 63) + 63 for s in (12, 6, 0)])
    return bytes([126, 126] + [((n >> s) & 63) + 63 for s in (30, 24, 18, 12, 6, 0)])


def write_graph6(g: Graph) -> bytes:
    n = g.n
    rows = g.rows
    out = bytearray(_encode_n(n))
    acc = 0
    k = 0
    for j in range(1, n):
        rj = rows[j]
        for i in range(j):
            acc = (acc << 1) | (rj >> i & 1)
            k += 1
            if k == 6:
                out.append(acc + 63)
                acc = k = 0
    if k:
        out.append((acc << (6 - k)) + 63)
    return bytes(out)


def parse_graph6(data: bytes | str) -> Graph:
    text = _text(data).strip()
    if text.startswith(">>graph6<<"):
        text = text[10:]
    if "\n" in text:
        raise ParseError("graph6 input must hold exactly one graph", 2)
    raw = text.encode("ascii")
    if not raw:
        raise ParseError("empty graph6 string", 1)
    for b in raw:
        if not 63 <= b <= 126:
            raise ParseError(f"byte {b!r} outside graph6 range 63..126", 1)
    vals = [b - 63 for b in raw]
    if vals[0] != 63:
        n, pos = vals[0], 1
    elif len(vals) >= 4 and vals[1] != 63:
        n, pos = (vals[1] << 12) | (vals[2] << 6) | vals[3], 4
    elif len(vals) >= 8:
        n = 0
        for v in vals[2:8]:
            n = (n << 6) | v
        pos = 8
    else:
        raise ParseError("truncated graph6 size prefix", 1)
    if n < 1:
        raise ParseError("graph6 encodes an empty vertex set", 1)
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    body = vals[pos:]
    if len(body) != need:
        raise ParseError(f"graph6 body has {len(body)} bytes, expected {need}", 1)
    rows = [0] * n
    bit = 0
    for j in range(1, n):
        for i in range(j):
            if body[bit // 6] >> (5 - bit % 6) & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            bit += 1
    return Graph._from_rows(rows)


def sniff_format(path: str) -> str:
    lower = path.lower()
    if lower.endswith((".g6", ".graph6")):
        return "graph6"
    if lower.endswith((".el", ".edges", ".txt")):
        return "edge-list"
    raise ValueError(f"cannot infer format from {path!r}; pass --format")
