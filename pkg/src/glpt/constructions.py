"""Named graphs: Petersen, the 12-vertex counterexample and its subdivided and
triangle-blown variants, sharpness gadgets, and small standard families.

Every builder audits its own output (vertex counts, degree patterns) and
raises IntegrityError if the audit fails.
"""

from __future__ import annotations

from itertools import combinations
from typing import Iterable

from .errors import DomainError, IntegrityError
from .graph import Graph, disjoint_union, iter_bits

G0_EDGES = 15


def _audit(cond: bool, what: str) -> None:
    if not cond:
        raise IntegrityError(f"construction audit failed: {what}")


# --- small families --------------------------------------------------------

def complete_graph(n: int) -> Graph:
    return Graph.from_edges(n, combinations(range(n), 2), f"K{n}")


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)], f"P{n}")


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise DomainError("cycles need n >= 3")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)], f"C{n}")


def empty_graph(n: int) -> Graph:
    return Graph(n, [0] * n, f"{n}P1")


def complete_bipartite(a: int, b: int) -> Graph:
    return Graph.from_edges(a + b, [(i, a + j) for i in range(a) for j in range(b)], f"K{a},{b}")


def star(k: int) -> Graph:
    return complete_bipartite(1, k)


def linear_forest(lengths: Iterable[int]) -> Graph:
    """Disjoint union of paths with the given vertex counts."""
    lengths = list(lengths)
    if any(x < 1 for x in lengths):
        raise DomainError("path orders must be >= 1")
    g = disjoint_union((path_graph(x) for x in lengths))
    return g.with_label("+".join(f"P{x}" for x in lengths))


# --- Petersen and the 12-vertex counterexample -----------------------------

def petersen() -> Graph:
    """Kneser graph K(5,2): 2-subsets of {0..4} in lex order, adjacent iff disjoint."""
    verts = list(combinations(range(5), 2))
    edges = [(i, j) for i, j in combinations(range(10), 2) if not set(verts[i]) & set(verts[j])]
    g = Graph.from_edges(10, edges, "petersen")
    _audit(g.num_edges == 15 and set(g.degrees()) == {3}, "petersen is 3-regular with 15 edges")
    return g


def g0() -> Graph:
    """Petersen with vertex 0 split into three pendant vertices.

    Layout: Petersen vertices 1..9 become 0..8; the pendant vertices R are
    9, 10, 11, attached to the former neighbors of vertex 0 in ascending order.
    """
    p = petersen()
    nbrs = p.neighbors(0)
    edges = [(u - 1, v - 1) for u, v in p.edges() if u != 0]
    edges += [(nb - 1, 9 + i) for i, nb in enumerate(nbrs)]
    g = Graph.from_edges(12, edges, "g0")
    degs = g.degrees()
    _audit(g.num_edges == G0_EDGES, "g0 has 15 edges")
    _audit(sorted(degs) == [1, 1, 1] + [3] * 9, "g0 has three leaves and nine cubic vertices")
    return g


G0_R = (9, 10, 11)


def canonical_graph(name: str) -> Graph:
    builders = {"petersen": petersen, "g0": g0}
    try:
        return builders[name.lower()]()
    except KeyError:
        raise DomainError(f"unknown canonical graph {name!r}; choose from {sorted(builders)}") from None


def _check_pq(p: int, q: int) -> None:
    if p < 1:
        raise DomainError("p must be >= 1")
    if q <= G0_EDGES * p:
        raise DomainError(f"q must exceed {G0_EDGES}*p = {G0_EDGES * p}")


def g1(p: int, q: int) -> Graph:
    """Subdivide g0: the three pendant edges become paths of length q, every
    other edge a path of length p.  g0's vertices keep ids 0..11; subdivision
    vertices follow, edge by edge in sorted edge order."""
    _check_pq(p, q)
    base = g0()
    r = set(G0_R)
    n = base.n
    edges = []
    for u, v in base.edges():
        length = q if (u in r or v in r) else p
        chain = [u] + list(range(n, n + length - 1)) + [v]
        n += length - 1
        edges.extend(zip(chain, chain[1:]))
    g = Graph.from_edges(n, edges, f"g1({p},{q})")
    _audit(n == 12 + 12 * (p - 1) + 3 * (q - 1), "g1 vertex count")
    degs = g.degrees()
    _audit(degs.count(1) == 3 and degs.count(3) == 9 and max(degs) == 3, "g1 degree pattern")
    return g


def g2(p: int, q: int) -> Graph:
    """Replace every cubic vertex w of g1(p, q) by a triangle.

    w keeps its id for the first triangle vertex; the other two are appended.
    w's former edges go to the triangle vertices in ascending order of the
    opposite endpoint's id.
    """
    h = g1(p, q)
    n = h.n
    port: dict[tuple[int, int], int] = {}
    tri_edges = []
    cubic = [w for w in range(h.n) if h.degree(w) == 3]
    for w in cubic:
        corners = [w, n, n + 1]
        n += 2
        tri_edges += [(corners[0], corners[1]), (corners[0], corners[2]), (corners[1], corners[2])]
        for c, nb in zip(corners, h.neighbors(w)):
            port[(w, nb)] = c
    edges = list(tri_edges)
    for u, v in h.edges():
        edges.append((port.get((u, v), u), port.get((v, u), v)))
    g = Graph.from_edges(n, edges, f"g2({p},{q})")
    _audit(n == h.n + 2 * len(cubic), "g2 vertex count")
    _audit(g.max_degree() == 3, "g2 is subcubic")
    return g


# --- sharpness gadgets -----------------------------------------------------

def star_blowup(k: int, t: int) -> Graph:
    """Star K_{1,k+2} with the center blown up to a k-clique S and each leaf to
    a t-clique X_i whose first k vertices Y_i are joined to all of S.

    Layout: S = 0..k-1, then X_1, ..., X_{k+2} as consecutive blocks of t.
    """
    if k < 1 or t < 1:
        raise DomainError("k and t must be >= 1")
    if t < k:
        raise DomainError("t must be >= k so that Y_i fits inside X_i")
    edges = list(combinations(range(k), 2))
    for i in range(k + 2):
        block = range(k + i * t, k + (i + 1) * t)
        edges += combinations(block, 2)
        for y in list(block)[:k]:
            edges += [(s, y) for s in range(k)]
    g = Graph.from_edges(k + (k + 2) * t, edges, f"star_blowup({k},{t})")
    _audit(all(g.degree(s) == k * (k + 2) + (k - 1) for s in range(k)), "hub degree k(k+2)+(k-1)")
    return g


def star_blowup_parts(k: int, t: int) -> tuple[list[int], list[list[int]], list[list[int]]]:
    """(S, [X_i], [Y_i]) vertex lists for ``star_blowup(k, t)``."""
    s = list(range(k))
    xs = [list(range(k + i * t, k + (i + 1) * t)) for i in range(k + 2)]
    ys = [x[:k] for x in xs]
    return s, xs, ys


def ham_reg(k: int) -> Graph:
    """k-regular graph with a cut vertex and no Hamiltonian path.

    Two copies of K_{k+1} minus an edge and one copy of K_{k+1} minus a
    matching on k-4 vertices, plus an apex joined to the k vertices of degree
    k-1.  Layout: the three blocks of k+1 vertices, then the apex.
    """
    if k < 6 or k % 2:
        raise DomainError("ham_reg needs an even k >= 6")
    edges = []
    deficient = []
    size = k + 1
    for b in range(3):
        off = b * size
        missing = {(0, 1)} if b < 2 else {(2 * i, 2 * i + 1) for i in range((k - 4) // 2)}
        for i, j in combinations(range(size), 2):
            if (i, j) not in missing:
                edges.append((off + i, off + j))
        deficient += [off + v for e in sorted(missing) for v in e]
    apex = 3 * size
    edges += [(apex, v) for v in deficient]
    g = Graph.from_edges(apex + 1, edges, f"ham_reg({k})")
    _audit(set(g.degrees()) == {k}, f"ham_reg is {k}-regular")
    return g


def bipartite_gadget(t: int, minus_matching: bool = False) -> Graph:
    """K_{t,t+2} (small side 0..t-1), optionally minus the matching i -- t+i."""
    if t < 1:
        raise DomainError("t must be >= 1")
    edges = [(i, t + j) for i in range(t) for j in range(t + 2) if not (minus_matching and i == j)]
    g = Graph.from_edges(2 * t + 2, edges, f"K{t},{t + 2}" + ("-M" if minus_matching else ""))
    _audit(g.max_degree() == (t + 1 if minus_matching else t + 2), "gadget maximum degree")
    return g


# --- induced linear forests ------------------------------------------------

def enumerate_induced_linear_forests(g: Graph, m: int) -> list[tuple[int, ...]]:
    """Distinct component-order multisets of induced m-vertex linear forests.

    Include/exclude search over vertices in ascending order.  A vertex may
    join only if it keeps every induced degree <= 2 and closes no cycle.
    Shapes are returned as descending tuples, sorted.
    """
    if m > g.n:
        raise DomainError("m exceeds the vertex count")
    adj = g.adj
    n = g.n
    shapes: set[tuple[int, ...]] = set()

    def reach(v: int, within: int) -> int:
        return g.reach(v, within)

    def go(v: int, chosen: int, size: int) -> None:
        if size == m:
            comps = g.components(chosen)
            shapes.add(tuple(sorted((c.bit_count() for c in comps), reverse=True)))
            return
        if v == n or n - v < m - size:
            return
        nb = adj[v] & chosen
        cnt = nb.bit_count()
        ok = cnt <= 2
        if ok:
            for u in iter_bits(nb):
                if (adj[u] & chosen).bit_count() >= 2:
                    ok = False
                    break
        if ok and cnt == 2:
            a, b = list(iter_bits(nb))
            if reach(a, chosen) >> b & 1:
                ok = False
        if ok:
            go(v + 1, chosen | 1 << v, size + 1)
        go(v + 1, chosen, size)

    go(0, 0, 0)
    return sorted(shapes, reverse=True)


def shape_name(shape: Iterable[int]) -> str:
    """(7, 1, 1) -> 'P7+2P1'."""
    shape = list(shape)
    parts = []
    for x in sorted(set(shape), reverse=True):
        c = shape.count(x)
        parts.append(f"{c if c > 1 else ''}P{x}")
    return "+".join(parts) if parts else "empty"
