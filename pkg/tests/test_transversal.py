import random
from itertools import combinations

import pytest

import oracles as O
from conftest import random_connected
from glpt.constructions import (bipartite_gadget, complete_graph, g0, path_graph, star_blowup,
                                star_blowup_parts)
from glpt.errors import DomainError
from glpt.graph import Graph, bits
from glpt.params import block_cut_tree, independence_number
from glpt.paths import longest_path_family, max_path_order
from glpt.transversal import gallai_vertices, lpt_exact, min_hitting_set, special_blocks, transversal_report


def test_gallai_examples():
    assert gallai_vertices(path_graph(5)) == frozenset(range(5))
    assert gallai_vertices(g0()) == frozenset()
    s, _, _ = star_blowup_parts(1, 4)
    assert gallai_vertices(star_blowup(1, 4)) == frozenset(s)
    with pytest.raises(DomainError):
        gallai_vertices(Graph.from_edges(3, [(0, 1)]))


def test_lpt_examples():
    assert lpt_exact(complete_graph(5))[0] == 1
    n, w = lpt_exact(g0())
    assert n == 2 and w == frozenset({0, 1})


def test_special_block_examples():
    assert special_blocks(path_graph(4)) == (0, 1, 2)
    assert special_blocks(complete_graph(4)) == (0,)
    g = g0()
    sb = special_blocks(g)
    blocks = block_cut_tree(g).blocks
    assert [blocks[i].bit_count() for i in sb] == [9]


def _special_oracle(g):
    """B is special iff deleting its edges shortens the longest path."""
    full = O.longest_order(g)
    out = []
    for i, b in enumerate(block_cut_tree(g).blocks):
        if b.bit_count() < 2:
            continue
        vs = bits(b)
        rest = [(u, v) for u, v in g.edges() if not (u in vs and v in vs)]
        h = Graph.from_edges(g.n, rest)
        if max_path_order(h) < full:
            out.append(i)
    return tuple(out)


def test_gallai_and_special_against_deletion_oracle(corpus6):
    for g in corpus6:
        assert gallai_vertices(g) == frozenset(O.gallai_by_deletion(g))
        if g.n >= 2:
            assert special_blocks(g) == _special_oracle(g)


def test_deletion_oracles_on_random_graphs():
    rng = random.Random(21)
    for _ in range(60):
        g = random_connected(rng.randint(7, 10), 0.25, rng)
        assert gallai_vertices(g) == frozenset(O.gallai_by_deletion(g))
        assert special_blocks(g) == _special_oracle(g)


def test_lpt_witness_minimality():
    rng = random.Random(4)
    graphs = [g0()] + [random_connected(rng.randint(5, 11), 0.22, rng) for _ in range(80)]
    for g in graphs:
        k, w = lpt_exact(g)
        _, fam = longest_path_family(g)
        assert all(m & sum(1 << v for v in w) for m in fam)
        assert k == len(w) == O.min_hitting_set_size([set(bits(m)) for m in fam])
        assert (k == 1) == bool(gallai_vertices(g))


def test_min_hitting_set_lexicographic():
    sets = [0b0011, 0b0110, 0b1100, 0b1001]
    assert min_hitting_set(sets) == 0b0101
    assert min_hitting_set([]) == 0
    with pytest.raises(DomainError):
        min_hitting_set([0])
    rng = random.Random(2)
    for _ in range(200):
        sets = [rng.randrange(1, 1 << 7) for _ in range(rng.randint(1, 8))]
        w = min_hitting_set(sets)
        k = w.bit_count()
        assert all(s & w for s in sets)
        # the least k-subset in lexicographic order of sorted element lists
        best = None
        for c in combinations(range(7), k):
            m = sum(1 << v for v in c)
            if all(s & m for s in sets):
                best = m
                break
        assert k == O.min_hitting_set_size([set(bits(s)) for s in sets])
        assert w == best


def test_bipartite_gadget_gallai_side():
    for t in range(2, 5):
        g = bipartite_gadget(t)
        assert gallai_vertices(g) == frozenset(range(t))


def test_transversal_report_g0():
    r = transversal_report(g0())
    assert r.lpt == 2 and r.gallai == frozenset() and r.order == 10 and r.family_size == 18


def test_fixer_5p1_and_special_block_on_corpus(corpus7):
    for g in corpus7:
        if independence_number(g) <= 4:
            assert gallai_vertices(g)
        if g.n >= 2:
            cuts = block_cut_tree(g).cut_vertices
            if not any(cuts >> v & 1 for v in gallai_vertices(g)):
                assert special_blocks(g)
