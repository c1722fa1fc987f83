#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
Standard graph6 strings, without the optional `>>graph6<<` header.

The vertex count is one printable byte (n + 63) for n <= 62 and `~`
followed by three bytes of 6 bits otherwise. Then the upper triangle of
the adjacency matrix is read column by column, (0,1), (0,2), (1,2),
(0,3), ... and packed 6 bits per printable byte, padded with zeros.
"""

# Internal modules
from spexlab.errors import ParseError
from spexlab.graphs.graph import MAX_VERTICES, Graph, check_capacity


###############################################################################
def _encode_n(n: int) -> str:
    if n <= 62:
        return chr(n + 63)
    return "~" + "".join(chr(((n >> shift) & 63) + 63) for shift in (12, 6, 0))


def graph6_encode(g: Graph) -> str:
    out = [_encode_n(g.n)]
    value = count = 0
    for j in range(1, g.n):
        column = g.adj[j]
        for i in range(j):
            value = (value << 1) | ((column >> i) & 1)
            count += 1
            if count == 6:
                out.append(chr(63 + value))
                value = count = 0
    if count:
        out.append(chr(63 + (value << (6 - count))))
    return "".join(out)


###############################################################################
def graph6_decode(text: str) -> Graph:
    text = text.strip()
    if text.startswith(">>graph6<<"):
        raise ParseError("graph6 headers are not accepted, strip '>>graph6<<' first")
    if not text:
        raise ParseError("empty graph6 string")
    codes = [ord(c) - 63 for c in text]
    if any(not 0 <= c <= 63 for c in codes):
        raise ParseError(f"character outside the graph6 range in {text!r}")

    if codes[0] == 63:
        if len(codes) < 4 or codes[1] == 63:
            raise ParseError(f"unsupported graph6 size prefix in {text!r}")
        n = (codes[1] << 12) | (codes[2] << 6) | codes[3]
        body = codes[4:]
    else:
        n = codes[0]
        body = codes[1:]

    if n > MAX_VERTICES:
        check_capacity(n)
    needed = (n * (n - 1) // 2 + 5) // 6
    if len(body) != needed:
        raise ParseError(
            f"graph6 body of {text!r} has {len(body)} bytes,"
            f" {needed} expected for n={n}"
        )

    bits = [(c >> shift) & 1 for c in body for shift in range(5, -1, -1)]
    total = n * (n - 1) // 2
    if any(bits[total:]):
        raise ParseError(f"non-zero padding bits in {text!r}")

    adj = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            if bits[k]:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            k += 1
    return Graph(n, tuple(adj))
