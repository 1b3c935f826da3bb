"""graph6 reading and writing.

The format packs the upper triangle of the adjacency matrix, column by column
(x01, x02, x12, x03, ...), six bits per printable byte offset by 63. Orders
below 63 use a single header byte; larger orders use '~' followed by three
six-bit digits. Parse errors carry the byte offset of the problem, counted
from the start of the payload after an optional ``>>graph6<<`` prefix.
"""

from __future__ import annotations

from .errors import Graph6Error
from .graphs import Graph

HEADER = ">>graph6<<"


def write_graph6(g: Graph) -> str:
    n = g.n
    if n < 63:
        out = [chr(63 + n)]
    elif n <= 258047:
        out = ["~", chr(63 + (n >> 12)), chr(63 + (n >> 6 & 63)), chr(63 + (n & 63))]
    else:
        raise Graph6Error(f"order {n} too large for the 3-byte header", 0)
    acc = 0
    nbits = 0
    for j in range(1, n):
        col = g.adj[j]
        for i in range(j):
            acc = acc << 1 | (col >> i & 1)
            nbits += 1
            if nbits == 6:
                out.append(chr(63 + acc))
                acc = 0
                nbits = 0
    if nbits:
        out.append(chr(63 + (acc << (6 - nbits))))
    return "".join(out)


def parse_graph6(line: str) -> Graph:
    s = line.rstrip("\r\n")
    if s.startswith(HEADER):
        s = s[len(HEADER):]
    if not s:
        raise Graph6Error("empty graph6 payload", 0)
    for idx, ch in enumerate(s):
        if not 63 <= ord(ch) <= 126:
            raise Graph6Error(f"character {ch!r} outside graph6 alphabet", idx)
    if s[0] == "~":
        if len(s) < 4 or s[1] == "~":
            raise Graph6Error("malformed extended length header", 0)
        n = (ord(s[1]) - 63) << 12 | (ord(s[2]) - 63) << 6 | (ord(s[3]) - 63)
        if n < 63:
            raise Graph6Error(f"non-canonical extended header for order {n}", 0)
        body_start = 4
    else:
        n = ord(s[0]) - 63
        body_start = 1
    if n < 1:
        raise Graph6Error("graphs need at least one vertex", 0)
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    body = s[body_start:]
    if len(body) < nbytes:
        raise Graph6Error(
            f"payload too short: {len(body)} bytes carry fewer than {nbits} edge bits",
            len(s),
        )
    if len(body) > nbytes:
        raise Graph6Error("payload continues past the edge bits", body_start + nbytes)
    adj = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            bit = (ord(body[k // 6]) - 63) >> (5 - k % 6) & 1
            if bit:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            k += 1
    if nbytes:
        pad = (ord(body[-1]) - 63) & ((1 << (6 * nbytes - nbits)) - 1)
        if pad:
            raise Graph6Error("trailing padding bits are not zero", body_start + nbytes - 1)
    return Graph(n, tuple(adj))
