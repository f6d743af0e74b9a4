"""graph6 codec fidelity and DOT export."""

import pytest

from isoreg import Graph, Graph6Error, complete_graph, cycle_graph, decode_graph6, encode_graph6, to_dot

from conftest import build_corpus


def reference_encode(g: Graph) -> str:
    """Independent re-implementation: collect bits, then pack."""
    assert g.n <= 62
    bits = []
    for j in range(1, g.n):
        for i in range(j):
            bits.append(1 if g.adjacent(i, j) else 0)
    while len(bits) % 6:
        bits.append(0)
    out = chr(g.n + 63)
    for pos in range(0, len(bits), 6):
        value = 0
        for b in bits[pos : pos + 6]:
            value = value * 2 + b
        out += chr(value + 63)
    return out


def test_known_encodings():
    assert encode_graph6(complete_graph(4)) == "C~"
    assert encode_graph6(cycle_graph(5)) == "Dhc"


def test_round_trip_whole_corpus():
    for name, g in build_corpus().items():
        text = encode_graph6(g)
        assert text == reference_encode(g), name
        assert decode_graph6(text) == g, name


def test_header_variants():
    g = cycle_graph(5)
    assert decode_graph6(">>graph6<<" + encode_graph6(g)) == g


def test_single_vertex():
    g = Graph(1, [0])
    assert encode_graph6(g) == "@"
    assert decode_graph6("@") == g


def test_large_order_header():
    g = Graph.from_edges(70, [(i, i + 1) for i in range(69)])
    text = encode_graph6(g)
    assert text.startswith(chr(126))
    assert decode_graph6(text) == g


def test_decode_errors():
    good = encode_graph6(cycle_graph(5))
    with pytest.raises(Graph6Error):
        decode_graph6(good[:-1])  # truncated body
    with pytest.raises(Graph6Error):
        decode_graph6(chr(ord(good[0]) + 1) + good[1:])  # corrupted order byte
    with pytest.raises(Graph6Error):
        decode_graph6(good + "A")  # trailing junk
    with pytest.raises(Graph6Error):
        decode_graph6("D\x1f\x1f")  # characters below offset
    with pytest.raises(Graph6Error):
        decode_graph6("")
    # C5 needs 10 triangle bits; the last two body bits are padding and must
    # be zero: set the final padding bit.
    corrupted = good[:-1] + chr(((ord(good[-1]) - 63) | 1) + 63)
    with pytest.raises(Graph6Error):
        decode_graph6(corrupted)


def test_dot_export():
    dot = to_dot(cycle_graph(3), name="triangle")
    assert dot.splitlines()[0] == "graph triangle {"
    assert "  0 -- 1;" in dot
    assert dot.count("--") == 3
