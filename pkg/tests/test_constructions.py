import pytest

from glpt.constructions import (G0_R, bipartite_gadget, canonical_graph, complete_bipartite, enumerate_induced_linear_forests,
                                g0, g1, g2, ham_reg, linear_forest, path_graph, petersen, shape_name, star,
                                star_blowup, star_blowup_parts)
from glpt.errors import DomainError
from glpt.graph import find_induced, is_h_free, is_linear_forest
from glpt.params import INF, connectivity, girth, independence_number
from glpt.paths import hamiltonian


def test_canonical_graphs():
    p = canonical_graph("petersen")
    assert p.n == 10 and p.num_edges == 15 and set(p.degrees()) == {3}
    g = canonical_graph("g0")
    assert g.n == 12 and g.num_edges == 15 and g.degrees().count(1) == 3
    assert girth(g) == 5
    assert all(g.degree(r) == 1 for r in G0_R)
    with pytest.raises(DomainError):
        canonical_graph("heawood")


def test_g1_counts_and_girth():
    assert g1(1, 16).n == 57
    assert girth(g1(2, 31)) == 10
    for p, q in [(1, 16), (2, 31), (3, 46)]:
        h = g1(p, q)
        assert h.n == 12 + 12 * (p - 1) + 3 * (q - 1)
        assert girth(h) == 5 * p
        assert h.degrees().count(1) == 3 and h.max_degree() == 3
    assert is_h_free(g1(2, 31), complete_graph3())
    with pytest.raises(DomainError):
        g1(1, 15)
    with pytest.raises(DomainError):
        g1(0, 16)


def complete_graph3():
    from glpt.constructions import complete_graph
    return complete_graph(3)


def test_g2_claw_free_and_triangles():
    h = g2(1, 16)
    assert h.n == 75
    assert is_h_free(h, star(3))
    base = g1(1, 16)
    cubic = [w for w in range(base.n) if base.degree(w) == 3]
    # Triangle T_w = {w, base.n + 2i, base.n + 2i + 1}
    for i, w in enumerate(cubic):
        a, b = base.n + 2 * i, base.n + 2 * i + 1
        assert h.has_edge(w, a) and h.has_edge(w, b) and h.has_edge(a, b)
    with pytest.raises(DomainError):
        g2(2, 30)


def test_star_blowup():
    assert star_blowup(1, 3).n == 10
    g = star_blowup(2, 4)
    assert independence_number(g) <= 5
    assert connectivity(g) == 2
    for k, t in [(1, 3), (2, 4), (3, 5)]:
        g = star_blowup(k, t)
        s, xs, ys = star_blowup_parts(k, t)
        assert g.n == k + (k + 2) * t
        assert all(g.degree(v) == k * (k + 2) + (k - 1) for v in s)
        for x, y in zip(xs, ys):
            assert len(y) == k and all(g.has_edge(a, b) for a in s for b in y)
            assert all(not g.has_edge(a, b) for a in s for b in x if b not in y)
    with pytest.raises(DomainError):
        star_blowup(3, 2)


def test_ham_reg():
    g = ham_reg(6)
    assert g.n == 22 and set(g.degrees()) == {6}
    assert g.is_connected()
    assert independence_number(g) == 6 and connectivity(g) == 1
    assert not hamiltonian(g, "path")[0]
    for bad in (4, 7):
        with pytest.raises(DomainError):
            ham_reg(bad)


def test_bipartite_gadget():
    g = bipartite_gadget(3, False)
    assert g.max_degree() == 5 and is_h_free(g, linear_forest([3, 1]))
    h = bipartite_gadget(3, True)
    assert h.max_degree() == 4 and is_h_free(h, linear_forest([2, 1, 1]))
    assert bipartite_gadget(1, False) == complete_bipartite(1, 3)


def test_linear_forest_builder():
    assert linear_forest([4]) == path_graph(4)
    g = linear_forest([3, 1])
    assert g.n == 4 and g.num_edges == 2 and is_linear_forest(g)
    assert linear_forest([3, 3, 3]).num_edges == 6


def test_induced_linear_forests_of_g0():
    shapes9 = enumerate_induced_linear_forests(g0(), 9)
    assert shapes9 == [(7, 1, 1), (3, 3, 3)]
    assert sorted(shape_name(s) for s in shapes9) == ["3P3", "P7+2P1"]
    assert enumerate_induced_linear_forests(g0(), 10) == []
    assert enumerate_induced_linear_forests(path_graph(5), 5) == [(5,)]
    for s in shapes9:
        assert find_induced(g0(), linear_forest(s)) is not None


def test_induced_linear_forest_enumerator_small():
    # Every 4-vertex shape is realized in a long enough path's complement-free setting.
    p = path_graph(9)
    shapes = enumerate_induced_linear_forests(p, 4)
    assert (4,) in shapes and (1, 1, 1, 1) in shapes and (2, 2) in shapes
