"""graph6 encoding (short form only, n <= 62).

Layout: one byte ``n + 63``, then the upper triangle of the adjacency
matrix in column order (x(0,1), x(0,2), x(1,2), x(0,3), ...), packed six
bits per byte, most significant first, zero-padded, each byte offset by 63.
"""

from __future__ import annotations

from .errors import Graph6Error
from .graph import Graph, from_edges

MAX_N = 62


def to_graph6(g: Graph) -> bytes:
    n = g.n
    if n > MAX_N:
        raise Graph6Error(f"graph6 short form supports n <= {MAX_N}, got {n}")
    bits = [1 if g.has_edge(i, j) else 0 for j in range(1, n) for i in range(j)]
    bits += [0] * (-len(bits) % 6)
    out = bytearray([n + 63])
    for k in range(0, len(bits), 6):
        val = 0
        for b in bits[k:k + 6]:
            val = (val << 1) | b
        out.append(val + 63)
    return bytes(out)


def from_graph6(data: bytes | str) -> Graph:
    if isinstance(data, str):
        data = data.encode("ascii")
    data = data.strip()
    if data.startswith(b">>graph6<<"):
        data = data[len(b">>graph6<<"):]
    if not data:
        raise Graph6Error("empty graph6 string")
    if any(not 63 <= c <= 126 for c in data):
        raise Graph6Error("graph6 bytes must lie in 63..126")
    n = data[0] - 63
    if n > MAX_N:
        raise Graph6Error(f"unsupported graph6 header (n > {MAX_N} or long form)")
    nbits = n * (n - 1) // 2
    body = data[1:]
    if len(body) != (nbits + 5) // 6:
        raise Graph6Error(
            f"graph6 body has {len(body)} bytes, expected {(nbits + 5) // 6} for n={n}"
        )
    bits = []
    for c in body:
        val = c - 63
        bits.extend((val >> s) & 1 for s in range(5, -1, -1))
    if any(bits[nbits:]):
        raise Graph6Error("nonzero padding bits")
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if bits[k]:
                edges.append((i, j))
            k += 1
    return from_edges(n, edges)
