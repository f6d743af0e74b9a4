"""Graph type, symbol constructions, and named graphs."""

import pytest

from isoreg import (
    BicirculantSymbol,
    Graph,
    TricirculantSymbol,
    bicirculant,
    cartesian_product,
    circulant,
    complement,
    complete_bipartite,
    complete_graph,
    cycle_graph,
    disjoint_union,
    empty_graph,
    gq22_voltage,
    is_isomorphic,
    line_graph,
    named_graph,
    paley,
    parse_symbol,
    srg_params,
    symbol_graph,
    triangular,
    tricirculant,
)


def test_graph_rejects_loops_and_asymmetry():
    with pytest.raises(ValueError):
        Graph(2, [0b01, 0b10])
    with pytest.raises(ValueError):
        Graph(2, [0b10, 0b00])
    with pytest.raises(ValueError):
        Graph.from_edges(3, [(0, 0)])
    with pytest.raises(ValueError):
        Graph(0, [])
    with pytest.raises(ValueError):
        Graph(5000, [0] * 5000)


def test_graph_basics():
    g = Graph.from_edges(4, [(0, 1), (1, 2), (2, 3)])
    assert g.degree(1) == 2
    assert g.neighbors(2) == [1, 3]
    assert g.edge_count() == 3
    assert list(g.edges()) == [(0, 1), (1, 2), (2, 3)]
    assert g.is_connected()
    assert not disjoint_union(g, g).is_connected()
    assert g.induced([1, 2, 3]) == Graph.from_edges(3, [(0, 1), (1, 2)])


def test_circulant_examples():
    assert circulant(5, {1, 4}) == cycle_graph(5)
    assert circulant(4, set()) == empty_graph(4)
    assert circulant(6, {1, 2, 3, 4, 5}) == complete_graph(6)


def test_circulant_rejects_bad_symbols():
    with pytest.raises(ValueError):
        circulant(5, {0, 1, 4})
    with pytest.raises(ValueError):
        circulant(5, {1})
    with pytest.raises(ValueError):
        circulant(1, set())


def test_bicirculant_named_symbols():
    clebsch = bicirculant(BicirculantSymbol(8, {1, -1, 4}, {3, -3, 4}, {0, 2}))
    assert srg_params(clebsch).as_tuple() == (16, 5, 0, 2)
    k4sq = bicirculant(BicirculantSymbol(8, {1, -1}, {3, -3}, {0, 1, 3, 4}))
    assert srg_params(k4sq).as_tuple() == (16, 6, 2, 2)
    assert is_isomorphic(k4sq, cartesian_product(complete_graph(4), complete_graph(4)))


def test_bicirculant_petersen_matches_kneser():
    from itertools import combinations

    petersen = named_graph("petersen")
    pairs = list(combinations(range(1, 6), 2))
    edges = [
        (i, j)
        for i in range(10)
        for j in range(i + 1, 10)
        if not set(pairs[i]) & set(pairs[j])
    ]
    kneser = Graph.from_edges(10, edges)
    assert is_isomorphic(petersen, kneser) is not None


def test_clebsch_matches_folded_five_cube():
    # Vertices: 4-bit strings; adjacent at Hamming distance 1 or 4 (the
    # folded 5-cube collapses antipodal pairs of the 5-cube).
    edges = []
    for u in range(16):
        for v in range(u + 1, 16):
            if (u ^ v).bit_count() in (1, 4):
                edges.append((u, v))
    folded = Graph.from_edges(16, edges)
    assert is_isomorphic(named_graph("clebsch"), folded) is not None


def test_shrikhande_matches_z4_lattice_construction():
    # Cayley graph of Z4 x Z4 with connection set {(1,0),(3,0),(0,1),(0,3),
    # (1,1),(3,3)}.
    connection = {(1, 0), (3, 0), (0, 1), (0, 3), (1, 1), (3, 3)}
    edges = []
    for a in range(16):
        for b in range(a + 1, 16):
            diff = ((b // 4 - a // 4) % 4, (b % 4 - a % 4) % 4)
            if diff in connection or ((-diff[0]) % 4, (-diff[1]) % 4) in connection:
                edges.append((a, b))
    shrikhande = Graph.from_edges(16, edges)
    assert is_isomorphic(named_graph("shrikhande-a"), shrikhande) is not None
    assert is_isomorphic(named_graph("k4xk4"), shrikhande) is None


def test_bicirculant_rejects_invalid_symbol():
    with pytest.raises(ValueError):
        BicirculantSymbol(8, {1}, {3, 5}, {0})
    with pytest.raises(ValueError):
        BicirculantSymbol(8, {0, 1, 7}, {3, 5}, {0})
    with pytest.raises(ValueError):
        BicirculantSymbol(8, {1, 7}, {3, 5}, {0}).multiply(2)


def test_rotation_is_automorphism():
    # The orbit rotation i -> i+1 preserves adjacency, exhaustively.
    sym = BicirculantSymbol(8, {1, -1, 4}, {3, -3, 4}, {0, 2})
    g = bicirculant(sym)
    n = sym.n

    def rho(v: int) -> int:
        return (v + 1) % n if v < n else n + ((v - n + 1) % n)

    for u in range(g.n):
        for v in range(g.n):
            assert g.adjacent(u, v) == g.adjacent(rho(u), rho(v))

    tsym = TricirculantSymbol(5, {1, -1}, {2, -2}, {1, -1}, {0}, {1, 2}, {0, 3})
    t = tricirculant(tsym)

    def rho3(v: int) -> int:
        orbit, i = divmod(v, 5)
        return orbit * 5 + (i + 1) % 5

    for u in range(t.n):
        for v in range(t.n):
            assert t.adjacent(u, v) == t.adjacent(rho3(u), rho3(v))


def test_bicirculant_complement_identity():
    # complement(bicirculant([S,S',T])) equals bicirculant([S^,S'^,T^c]) on
    # the same labels.
    sym = BicirculantSymbol(8, {1, -1}, {3, -3}, {0, 1, -1, 4})
    assert complement(bicirculant(sym)) == bicirculant(sym.complement())


@pytest.mark.parametrize("n", [5, 8, 13])
def test_symbol_equivalences_give_isomorphic_graphs(n):
    base = {
        5: BicirculantSymbol(5, {1, -1}, {2, -2}, {0}),
        8: BicirculantSymbol(8, {1, -1, 4}, {3, -3, 4}, {0, 2}),
        13: BicirculantSymbol(13, {1, -1, 3, -3, 4, -4}, {2, -2, 5, -5, 6, -6}, {0, 1, 3, 9}),
    }[n]
    g = bicirculant(base)
    assert is_isomorphic(g, bicirculant(base.translate(1))) is not None
    multiplier = 2 if n != 8 else 3
    assert is_isomorphic(g, bicirculant(base.multiply(multiplier))) is not None
    assert is_isomorphic(g, bicirculant(base.swap_orbits())) is not None


def test_tricirculant_trivial_cases():
    empty9 = tricirculant(TricirculantSymbol(3, (), (), (), (), (), ()))
    assert empty9 == empty_graph(9)
    s = {1, 2, 3, 4}
    three_k5 = tricirculant(TricirculantSymbol(5, s, s, s, (), (), ()))
    assert is_isomorphic(
        three_k5, disjoint_union(complete_graph(5), complete_graph(5), complete_graph(5))
    )


def test_paley_examples():
    assert paley(5) == cycle_graph(5)
    assert srg_params(paley(13)).as_tuple() == (13, 6, 2, 3)
    assert srg_params(paley(17)).as_tuple() == (17, 8, 3, 4)
    with pytest.raises(ValueError):
        paley(9)
    with pytest.raises(ValueError):
        paley(7)


def test_triangular_examples():
    assert is_isomorphic(triangular(5), complement(named_graph("petersen")))
    assert srg_params(triangular(6)).as_tuple() == (15, 8, 4, 4)
    assert srg_params(triangular(7)).as_tuple() == (21, 10, 5, 4)
    with pytest.raises(ValueError):
        triangular(2)


def test_line_graph_and_product():
    assert is_isomorphic(
        line_graph(complete_bipartite(4, 4)),
        cartesian_product(complete_graph(4), complete_graph(4)),
    )
    assert is_isomorphic(cartesian_product(complete_graph(2), complete_graph(2)), cycle_graph(4))
    assert is_isomorphic(line_graph(cycle_graph(5)), cycle_graph(5))
    assert triangular(6) == line_graph(complete_graph(6))


def test_complement_involution():
    pet = named_graph("petersen")
    assert complement(complement(pet)) == pet
    assert complement(complete_graph(4)) == empty_graph(4)


def test_gq22_voltage_facts():
    g = gq22_voltage()
    assert g.n == 15
    assert all(g.degree(v) == 6 for v in range(15))
    assert srg_params(g).as_tuple() == (15, 6, 1, 3)
    assert is_isomorphic(g, complement(triangular(6))) is not None
    assert is_isomorphic(g, complement(line_graph(complete_graph(6)))) is not None


def test_symbol_text_round_trip():
    sym = BicirculantSymbol(8, {1, -1, 4}, {3, -3, 4}, {0, 2})
    assert parse_symbol(sym.text()) == sym
    assert symbol_graph(parse_symbol(sym.text())) == bicirculant(sym)
    tsym = TricirculantSymbol(5, {1, -1}, (), (), {0}, {1}, {2})
    assert parse_symbol(tsym.text()) == tsym
    assert symbol_graph(parse_symbol("circ:n=5;S=1,-1")) == cycle_graph(5)
    with pytest.raises(ValueError):
        parse_symbol("bi:n=8;S=1")
    with pytest.raises(ValueError):
        parse_symbol("hex:n=8;S=1,-1")
    with pytest.raises(ValueError):
        parse_symbol("bi:n=8;S=a,b;Sp=;T=")


def test_named_registry():
    assert named_graph("C5") == cycle_graph(5)
    assert srg_params(named_graph("paley-13")).as_tuple() == (13, 6, 2, 3)
    with pytest.raises(ValueError):
        named_graph("nope")
    with pytest.raises(ValueError):
        named_graph("paley-x")
