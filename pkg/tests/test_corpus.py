import os
import random
from itertools import combinations

import networkx as nx
import pytest
from hypothesis import given, strategies as st

from glpt.constructions import g0, petersen
from glpt.corpus import (KNOWN_COUNTS, brute_force_count, canonical_graph6, canonical_key, corpus_from_spec,
                         generate_connected, ingest)
from glpt.errors import DomainError, ParseError
from glpt.graph import Graph, encode_graph6

CORPUS9 = os.path.join(os.path.dirname(__file__), "..", "corpora", "connected9.g6")


def relabel(g: Graph, perm) -> Graph:
    return Graph.from_edges(g.n, [(perm[u], perm[v]) for u, v in g.edges()])


@pytest.mark.parametrize("n", range(1, 7))
def test_counts_match_brute_force(n):
    assert len(generate_connected(n)) == brute_force_count(n) == KNOWN_COUNTS[n]


def test_counts_up_to_eight():
    assert [len(generate_connected(n)) for n in range(1, 9)] == [KNOWN_COUNTS[n] for n in range(1, 9)]


def test_generated_graphs_pairwise_non_isomorphic():
    for n in range(1, 7):
        gs = generate_connected(n)
        assert all(g.n == n and g.is_connected() for g in gs)
        nxs = []
        for g in gs:
            h = nx.Graph()
            h.add_nodes_from(range(n))
            h.add_edges_from(g.edges())
            nxs.append(h)
        for a, b in combinations(nxs, 2):
            if sorted(d for _, d in a.degree()) == sorted(d for _, d in b.degree()):
                assert not nx.is_isomorphic(a, b)


def test_generator_limit():
    with pytest.raises(DomainError, match="ingest"):
        generate_connected(9)
    with pytest.raises(DomainError):
        generate_connected(0)


@st.composite
def graph_and_perm(draw):
    n = draw(st.integers(1, 10))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    edges = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    perm = draw(st.permutations(range(n)))
    return Graph.from_edges(n, edges), perm


@given(graph_and_perm())
def test_canonical_form_invariant_under_relabelling(gp):
    g, perm = gp
    assert canonical_graph6(g) == canonical_graph6(relabel(g, perm))


def test_canonical_form_on_symmetric_graphs():
    rng = random.Random(5)
    for g in (petersen(), g0()):
        ref = canonical_key(g)
        for _ in range(20):
            perm = list(range(g.n))
            rng.shuffle(perm)
            assert canonical_key(relabel(g, perm)) == ref


def test_canonical_form_separates():
    # C6 and two triangles share degree sequences
    c6 = Graph.from_edges(6, [(i, (i + 1) % 6) for i in range(6)])
    tt = Graph.from_edges(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)])
    assert canonical_key(c6) != canonical_key(tt)


def test_ingest_examples(tmp_path):
    f = tmp_path / "three.g6"
    f.write_text("@\nA_\nBw\n")
    gs = list(ingest(f))
    assert [g.n for g in gs] == [1, 2, 3]
    assert [g.label for g in gs] == ["line:1", "line:2", "line:3"]
    empty = tmp_path / "empty.g6"
    empty.write_text("")
    assert list(ingest(empty)) == []
    assert [g.num_edges for g in ingest("@\n\nBw\n")] == [0, 3]


def test_ingest_bad_line(tmp_path):
    f = tmp_path / "bad.g6"
    f.write_text("@\nA_\nB\x7f\nBw\n")
    with pytest.raises(ParseError, match="line 3"):
        list(ingest(f))
    errors = []
    gs = list(ingest(f, strict=False, errors=errors))
    assert len(gs) == 3 and [e.line for e in errors] == [3]


def test_corpus_specs(tmp_path):
    assert sum(1 for _ in corpus_from_spec("gen:4")) == 1 + 1 + 2 + 6
    assert sum(1 for _ in corpus_from_spec("gen:=5")) == 21
    f = tmp_path / "c.g6"
    f.write_text("".join(encode_graph6(g) + "\n" for g in generate_connected(4)))
    assert len(list(corpus_from_spec(str(f)))) == 6


@pytest.mark.slow
@pytest.mark.skipif(not os.path.exists(CORPUS9), reason="n = 9 corpus not built")
def test_corpus9_file():
    count = 0
    for g in ingest(CORPUS9):
        assert g.n == 9
        count += 1
    assert count == KNOWN_COUNTS[9]
