"""Backtracking isomorphism and its invariants."""

from isoreg import (
    complement,
    cycle_graph,
    invariant_fingerprint,
    is_isomorphic,
    named_graph,
    path_graph,
)


def check_mapping(g, h, mapping):
    assert sorted(mapping) == list(range(g.n))
    for u in range(g.n):
        for v in range(g.n):
            assert g.adjacent(u, v) == h.adjacent(mapping[u], mapping[v])


def test_shrikhande_representations():
    a = named_graph("shrikhande-a")
    b = named_graph("shrikhande-b")
    mapping = is_isomorphic(a, b)
    assert mapping is not None
    check_mapping(a, b, mapping)


def test_shrikhande_vs_k4xk4():
    # Same parameters (16,6,2,2), different graphs.
    assert is_isomorphic(named_graph("shrikhande-a"), named_graph("k4xk4")) is None


def test_c5_self_complementary():
    c5 = cycle_graph(5)
    mapping = is_isomorphic(c5, complement(c5))
    assert mapping is not None
    check_mapping(c5, complement(c5), mapping)


def test_order_mismatch_and_small_negatives():
    assert is_isomorphic(cycle_graph(4), cycle_graph(5)) is None
    assert is_isomorphic(path_graph(4), cycle_graph(4)) is None


def test_fingerprint_separates_shrikhande_family():
    # Neighborhoods are C6 in Shrikhande but 2K3 in K4xK4; the component
    # count invariant sees it without any backtracking.
    fa = invariant_fingerprint(named_graph("shrikhande-a"))
    fk = invariant_fingerprint(named_graph("k4xk4"))
    assert fa != fk
    assert fa == invariant_fingerprint(named_graph("shrikhande-b"))
