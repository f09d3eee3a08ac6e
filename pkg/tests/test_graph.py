import random

import networkx as nx
import pytest
from hypothesis import given, strategies as st

import oracles as O
from conftest import random_graph
from glpt.constructions import complete_bipartite, complete_graph, g0, linear_forest, path_graph, star
from glpt.errors import DomainError, ParseError
from glpt.graph import (Graph, component_orders, encode_graph6, find_induced, is_h_free, is_linear_forest,
                        mask_of, parse_graph6)


def to_nx(g):
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


@st.composite
def graphs(draw, max_n=12):
    n = draw(st.integers(1, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True) if pairs else st.just([]))
    return Graph.from_edges(n, chosen)


def test_graph6_known_strings():
    assert parse_graph6("@").n == 1 and parse_graph6("@").num_edges == 0
    assert parse_graph6("A_").edges() == [(0, 1)]
    assert parse_graph6("Bw") == complete_graph(3)
    assert encode_graph6(complete_graph(2)) == "A_"
    assert encode_graph6(Graph(1, [0])) == "@"


def test_graph6_header_prefix_and_whitespace():
    assert parse_graph6(">>graph6<<Bw\n") == complete_graph(3)


@pytest.mark.parametrize("text, offset", [("A", 1), ("A_?", 2), ("Bx", 1), ("A\x7f", 1), ("", 0)])
def test_graph6_errors_name_offset(text, offset):
    with pytest.raises(ParseError) as exc:
        parse_graph6(text)
    assert exc.value.offset == offset


def test_sparse6_rejected():
    with pytest.raises(ParseError):
        parse_graph6(":Fa@x^")


def test_graph6_round_trip_corpus(corpus6):
    for g in corpus6:
        s = encode_graph6(g)
        assert parse_graph6(s) == g
        assert encode_graph6(parse_graph6(s)) == s


@given(graphs(max_n=70))
def test_graph6_matches_networkx(g):
    s = encode_graph6(g)
    ref = nx.to_graph6_bytes(to_nx(g), nodes=range(g.n), header=False).strip().decode()
    assert s == ref
    assert parse_graph6(s) == g


def test_large_header():
    g = path_graph(100)
    s = encode_graph6(g)
    assert s[0] == "~"
    assert parse_graph6(s) == g


def test_graph_validation():
    with pytest.raises(ValueError):
        Graph(2, [0b10, 0])  # asymmetric
    with pytest.raises(ValueError):
        Graph(1, [1])  # loop
    g = path_graph(3)
    with pytest.raises(AttributeError):
        g.n = 4


def test_find_induced_examples():
    assert find_induced(complete_bipartite(3, 5), linear_forest([3, 1])) is None
    occ = find_induced(g0(), linear_forest([1, 1, 1, 1]))
    assert occ is not None and g0().is_independent(mask_of(occ.values()))
    assert find_induced(complete_graph(4), complete_graph(4)) == {i: i for i in range(4)}


@given(graphs(max_n=7), st.integers(1, 4), st.randoms(use_true_random=False))
def test_find_induced_matches_brute_force(g, hn, rnd):
    h = random_graph(min(hn, g.n), 0.5, rnd)
    occ = find_induced(g, h)
    ref = O.induced_copy(g, h)
    assert (occ is None) == (ref is None)
    if occ is not None:
        assert len(set(occ.values())) == h.n
        for a in range(h.n):
            for b in range(a + 1, h.n):
                assert g.has_edge(occ[a], occ[b]) == h.has_edge(a, b)


def test_linear_forest_examples():
    assert is_linear_forest(path_graph(4))
    assert not is_linear_forest(star(3))
    assert is_linear_forest(linear_forest([3, 3, 3]))
    assert component_orders(linear_forest([3, 3, 3])) == [3, 3, 3]


@given(graphs(max_n=10))
def test_linear_forest_characterisation(g):
    comps = len(g.components())
    expected = g.max_degree() <= 2 and g.num_edges == g.n - comps
    assert is_linear_forest(g) == expected
    assert is_linear_forest(g) == (nx.is_forest(to_nx(g)) and g.max_degree() <= 2)


def test_components_and_reach():
    g = linear_forest([2, 3])
    assert g.components() == [0b11, 0b11100]
    assert not g.is_connected()
    assert g.reach(2) == 0b11100


def test_induced_and_complement():
    g = path_graph(4)
    h, keep = g.induced([1, 2, 3])
    assert keep == [1, 2, 3] and h.edges() == [(0, 1), (1, 2)]
    assert g.complement().num_edges == 6 - 3
    assert is_h_free(complete_graph(5), linear_forest([1, 1]))
