"""graph6, sparse6 and JSON graph encodings.

graph6 and sparse6 follow McKay's definitions: printable bytes 63..126, each
carrying six bits big-endian.  Only simple graphs are accepted; sparse6 input
with loops or repeated edges is rejected.
"""

from __future__ import annotations

import json
from typing import Any

from .graph import MAX_VERTICES, Graph

GRAPH6_HEADER = b">>graph6<<"
SPARSE6_HEADER = b">>sparse6<<"


class FormatError(ValueError):
    """Malformed input; ``offset`` is the byte position where parsing failed."""

    def __init__(self, message: str, offset: int) -> None:
        super().__init__(f"byte {offset}: {message}")
        self.offset = offset


def _as_bytes(data: bytes | str) -> bytes:
    if isinstance(data, str):
        try:
            return data.encode("ascii")
        except UnicodeEncodeError as exc:
            raise FormatError("non-ASCII character", exc.start) from None
    return data


def _encode_size(n: int) -> bytes:
    if n < 0 or n > 68719476735:
        raise ValueError(f"cannot encode order {n}")
    if n <= 62:
        return bytes([n + 63])
    if n <= 258047:
        return b"~" + bytes(63 + ((n >> s) & 63) for s in (12, 6, 0))
    return b"~~" + bytes(63 + ((n >> s) & 63) for s in (30, 24, 18, 12, 6, 0))


def _decode_size(data: bytes, pos: int) -> tuple[int, int]:
    def chunk(i: int) -> int:
        if i >= len(data):
            raise FormatError("truncated vertex count", i)
        c = data[i]
        if not 63 <= c <= 126:
            raise FormatError(f"invalid byte {c!r}", i)
        return c - 63

    first = chunk(pos)
    if first < 63:
        return first, pos + 1
    if pos + 1 < len(data) and data[pos + 1] == 126:
        width, start = 6, pos + 2
    else:
        width, start = 3, pos + 1
    n = 0
    for i in range(start, start + width):
        n = (n << 6) | chunk(i)
    return n, start + width


def _six_bit_bytes(bitlist: list[int]) -> bytes:
    out = bytearray()
    for i in range(0, len(bitlist), 6):
        group = bitlist[i : i + 6]
        value = 0
        for b in group:
            value = (value << 1) | b
        out.append(63 + (value << (6 - len(group))))
    return bytes(out)


def _check_order(n: int, offset: int) -> None:
    if n > MAX_VERTICES:
        raise FormatError(f"order {n} exceeds the cap of {MAX_VERTICES}", offset)


# graph6 ----------------------------------------------------------------------


def emit_graph6(G: Graph, header: bool = False) -> bytes:
    bitlist = [1 if G.has_edge(i, j) else 0 for j in range(1, G.n) for i in range(j)]
    pad = (-len(bitlist)) % 6
    body = _six_bit_bytes(bitlist + [0] * pad)
    return (GRAPH6_HEADER if header else b"") + _encode_size(G.n) + body


def parse_graph6(data: bytes | str) -> Graph:
    raw = _as_bytes(data).rstrip(b"\n")
    pos = len(GRAPH6_HEADER) if raw.startswith(GRAPH6_HEADER) else 0
    n, pos = _decode_size(raw, pos)
    _check_order(n, 0)
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    for offset in range(pos, len(raw)):
        if not 63 <= raw[offset] <= 126:
            raise FormatError(f"invalid byte {raw[offset]!r}", offset)
    if len(raw) - pos != nbytes:
        raise FormatError(f"expected {nbytes} edge bytes for order {n}, got {len(raw) - pos}", min(len(raw), pos + nbytes))
    rows = [0] * n
    k = 0
    for offset in range(pos, len(raw)):
        value = raw[offset] - 63
        for shift in range(5, -1, -1):
            bit = (value >> shift) & 1
            if k >= nbits:
                if bit:
                    raise FormatError("nonzero padding bit", offset)
            elif bit:
                j, i = _triangle_position(k)
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            k += 1
    return Graph(n, tuple(rows))


def _triangle_position(k: int) -> tuple[int, int]:
    """Column-major upper triangle: bit k is the pair ``(i, j)`` with i < j."""
    j = 1
    while k >= j:
        k -= j
        j += 1
    return j, k


# sparse6 ---------------------------------------------------------------------


def _sparse6_width(n: int) -> int:
    k = 1
    while (1 << k) < n:
        k += 1
    return k


def emit_sparse6(G: Graph, header: bool = False) -> bytes:
    n = G.n
    k = _sparse6_width(n)

    def enc(x: int) -> list[int]:
        return [(x >> s) & 1 for s in range(k - 1, -1, -1)]

    bitlist: list[int] = []
    cur = 0
    for u, v in sorted(G.edges(), key=lambda e: (e[1], e[0])):
        if v == cur:
            bitlist += [0] + enc(u)
        elif v == cur + 1:
            cur = v
            bitlist += [1] + enc(u)
        else:
            cur = v
            bitlist += [1] + enc(v) + [0] + enc(u)
    # With k < 6 a full padding group could be read as a spurious edge to
    # vertex n-1; an extra 0 bit prevents that.
    if k < 6 and n == (1 << k) and (-len(bitlist)) % 6 >= k and cur < n - 1:
        bitlist.append(0)
    bitlist += [1] * ((-len(bitlist)) % 6)
    return (SPARSE6_HEADER if header else b"") + b":" + _encode_size(n) + _six_bit_bytes(bitlist)


def parse_sparse6(data: bytes | str) -> Graph:
    raw = _as_bytes(data).rstrip(b"\n")
    pos = len(SPARSE6_HEADER) if raw.startswith(SPARSE6_HEADER) else 0
    if pos >= len(raw) or raw[pos] != ord(":"):
        raise FormatError("sparse6 data must start with ':'", pos)
    n, pos = _decode_size(raw, pos + 1)
    _check_order(n, pos - 1)
    k = _sparse6_width(n)
    stream: list[tuple[int, int]] = []
    for offset in range(pos, len(raw)):
        c = raw[offset]
        if not 63 <= c <= 126:
            raise FormatError(f"invalid byte {c!r}", offset)
        stream.extend((((c - 63) >> s) & 1, offset) for s in range(5, -1, -1))
    rows = [0] * n
    v, i = 0, 0
    while i + 1 + k <= len(stream):
        b = stream[i][0]
        x = 0
        for bit, _ in stream[i + 1 : i + 1 + k]:
            x = (x << 1) | bit
        offset = stream[i][1]
        i += 1 + k
        if b:
            v += 1
        if x >= n or v >= n:
            break
        if x > v:
            v = x
            continue
        if x == v:
            raise FormatError("loops are not allowed", offset)
        if (rows[x] >> v) & 1:
            raise FormatError("repeated edge", offset)
        rows[x] |= 1 << v
        rows[v] |= 1 << x
    return Graph(n, tuple(rows))


# JSON and auto-detection -----------------------------------------------------


def to_json_obj(G: Graph) -> dict[str, Any]:
    obj: dict[str, Any] = {"n": G.n, "edges": [list(e) for e in G.edges()]}
    if G.labels is not None:
        obj["labels"] = list(G.labels)
    return obj


def from_json_obj(obj: dict[str, Any]) -> Graph:
    try:
        n = int(obj["n"])
        edges = [(int(u), int(v)) for u, v in obj["edges"]]
    except (KeyError, TypeError, ValueError) as exc:
        raise FormatError(f"bad JSON graph: {exc}", 0) from None
    return Graph.from_edges(n, edges, obj.get("labels"))


def parse_graph(text: bytes | str) -> Graph:
    """Decode graph6, sparse6 (leading ':') or a JSON object (leading '{')."""
    raw = _as_bytes(text).strip()
    if raw.startswith(b"{"):
        try:
            return from_json_obj(json.loads(raw))
        except json.JSONDecodeError as exc:
            raise FormatError(exc.msg, exc.pos) from None
    if raw.startswith(b":") or raw.startswith(SPARSE6_HEADER):
        return parse_sparse6(raw)
    return parse_graph6(raw)
