"""graph6 text format (bit-exact) and DOT export."""

from __future__ import annotations

from .graphs import Graph, MAX_VERTICES


class Graph6Error(ValueError):
    pass


def encode_graph6(g: Graph) -> str:
    """Standard graph6: size header, then upper triangle packed column-wise."""
    n = g.n
    if n <= 62:
        out = [chr(n + 63)]
    else:
        # 18-bit size form covers everything up to the package vertex cap.
        out = [chr(126), chr(63 + ((n >> 12) & 63)), chr(63 + ((n >> 6) & 63)), chr(63 + (n & 63))]
    acc = 0
    nbits = 0
    for j in range(1, n):
        for i in range(j):
            acc = (acc << 1) | (1 if g.adjacent(i, j) else 0)
            nbits += 1
            if nbits == 6:
                out.append(chr(63 + acc))
                acc = 0
                nbits = 0
    if nbits:
        out.append(chr(63 + (acc << (6 - nbits))))
    return "".join(out)


def decode_graph6(text: str) -> Graph:
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    if not s:
        raise Graph6Error("empty graph6 string")
    values = []
    for ch in s:
        v = ord(ch) - 63
        if not 0 <= v <= 63:
            raise Graph6Error(f"invalid graph6 character {ch!r}")
        values.append(v)

    if values[0] < 63:
        n = values[0]
        body = values[1:]
    else:
        if len(values) < 4:
            raise Graph6Error("truncated graph6 size header")
        if values[1] == 63:
            raise Graph6Error("8-byte graph6 sizes exceed the vertex cap")
        n = (values[1] << 12) | (values[2] << 6) | values[3]
        body = values[4:]
    if n < 1 or n > MAX_VERTICES:
        raise Graph6Error(f"graph6 order {n} outside 1..{MAX_VERTICES}")

    nbits = n * (n - 1) // 2
    expected = (nbits + 5) // 6
    if len(body) != expected:
        raise Graph6Error(f"graph6 body length {len(body)}, expected {expected} for n={n}")

    bits = []
    for value in body:
        for k in range(5, -1, -1):
            bits.append((value >> k) & 1)
    if any(bits[nbits:]):
        raise Graph6Error("nonzero padding bits in graph6 body")

    rows = [0] * n
    idx = 0
    for j in range(1, n):
        for i in range(j):
            if bits[idx]:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            idx += 1
    return Graph(n, rows)


def to_dot(g: Graph, name: str = "G") -> str:
    lines = [f"graph {name} {{"]
    for u in range(g.n):
        lines.append(f"  {u};")
    for u, v in g.edges():
        lines.append(f"  {u} -- {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"
