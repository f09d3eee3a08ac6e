"""Exact structural parameters: alpha, kappa, girth, blocks, Hall matchings."""

from __future__ import annotations

import enum
from collections import deque
from dataclasses import dataclass, field
from typing import Union

from .errors import DomainError
from .graph import Graph, bits, iter_bits, lowest, mask_of


class Infinity(enum.Enum):
    """Girth of an acyclic graph."""

    INF = "inf"

    def __repr__(self):
        return "INF"

    def __str__(self):
        return "inf"


INF = Infinity.INF
Girth = Union[int, Infinity]


# --- independence number ---------------------------------------------------

def _max_clique(nbr: list[int], cand: int, lower: int = 0) -> tuple[int, int]:
    """Maximum clique of the graph with neighbor bitsets ``nbr`` inside ``cand``.

    Branch and bound with a greedy sequential coloring bound (MCQ style).
    Returns (size, clique bitset).  ``lower`` lets callers seed the bound.
    """
    best_size = lower
    best_set = 0
    deg = {v: (nbr[v] & cand).bit_count() for v in iter_bits(cand)}
    # Initial order: descending degree, ties by vertex id.
    initial = sorted(deg, key=lambda v: (-deg[v], v))

    def color_sort(p: int, order: list[int]) -> tuple[list[int], list[int]]:
        # Greedy coloring of the candidates; colors are independent sets of nbr.
        classes: list[int] = []
        for v in order:
            if not p >> v & 1:
                continue
            for i, cls in enumerate(classes):
                if not cls & nbr[v]:
                    classes[i] = cls | 1 << v
                    break
            else:
                classes.append(1 << v)
        verts, cols = [], []
        for c, cls in enumerate(classes, 1):
            for v in iter_bits(cls):
                verts.append(v)
                cols.append(c)
        return verts, cols

    def expand(size: int, clique: int, p: int, order: list[int]) -> None:
        nonlocal best_size, best_set
        verts, cols = color_sort(p, order)
        for idx in range(len(verts) - 1, -1, -1):
            if size + cols[idx] <= best_size:
                return
            v = verts[idx]
            newp = p & nbr[v]
            if newp:
                expand(size + 1, clique | 1 << v, newp, [u for u in order if newp >> u & 1])
            elif size + 1 > best_size:
                best_size, best_set = size + 1, clique | 1 << v
            p &= ~(1 << v)

    if cand:
        expand(0, 0, cand, initial)
    return best_size, best_set


def _reduce_low_degree(g: Graph, cand: int) -> tuple[int, int]:
    """Peel vertices of degree <= 1 in G[cand]; each lies in some maximum
    independent set.  Returns (forced independent vertices, remaining cand)."""
    forced = 0
    changed = True
    while changed:
        changed = False
        for v in iter_bits(cand):
            if not cand >> v & 1:
                continue
            if (g.adj[v] & cand).bit_count() <= 1:
                forced |= 1 << v
                cand &= ~(1 << v) & ~g.adj[v]
                changed = True
    return forced, cand


def maximum_independent_set(g: Graph, within: int | None = None) -> int:
    """A maximum independent set of ``G[within]`` as a bitset."""
    cand = g.full if within is None else within
    forced, cand = _reduce_low_degree(g, cand)
    comp = g.complement().adj
    best = forced
    for c in g.components(cand):
        _, s = _max_clique(list(comp), c)
        best |= s
    return best


def independence_number(g: Graph, within: int | None = None) -> int:
    return maximum_independent_set(g, within).bit_count()


# --- connectivity ----------------------------------------------------------

def local_connectivity(g: Graph, s: int, t: int, cap: int | None = None) -> int:
    """Maximum number of internally vertex-disjoint s-t paths (s, t non-adjacent).

    Unit-capacity max flow on the split graph: vertex v becomes v_in -> v_out
    with capacity 1 (s and t uncapacitated).  Stops early once ``cap`` paths
    are found.
    """
    if g.has_edge(s, t):
        raise DomainError("local connectivity is defined for non-adjacent pairs")
    n = g.n
    # Node ids: v_in = 2v, v_out = 2v + 1.  Residual capacities in a dict.
    res: dict[tuple[int, int], int] = {}
    out: list[list[int]] = [[] for _ in range(2 * n)]

    def arc(a: int, b: int, c: int) -> None:
        if (a, b) not in res:
            out[a].append(b)
            out[b].append(a)
            res[(a, b)] = 0
            res.setdefault((b, a), 0)
        res[(a, b)] += c

    big = n
    for v in range(n):
        arc(2 * v, 2 * v + 1, big if v in (s, t) else 1)
        for u in iter_bits(g.adj[v]):
            arc(2 * v + 1, 2 * u, 1)
    src, snk = 2 * s + 1, 2 * t
    flow = 0
    while cap is None or flow < cap:
        parent = {src: src}
        dq = deque([src])
        while dq and snk not in parent:
            a = dq.popleft()
            for b in out[a]:
                if b not in parent and res[(a, b)] > 0:
                    parent[b] = a
                    dq.append(b)
        if snk not in parent:
            break
        b = snk
        while b != src:
            a = parent[b]
            res[(a, b)] -= 1
            res[(b, a)] += 1
            b = a
        flow += 1
    return flow


def connectivity(g: Graph) -> int:
    """Vertex connectivity kappa(G) via Menger over non-adjacent pairs.

    Complete graphs give n-1; disconnected graphs give 0.  Uses Even's
    reduction: some vertex among the first kappa+1 lies outside a minimum
    separator, so only pairs with one end among those need checking.
    """
    n = g.n
    if n < 2:
        raise DomainError("connectivity needs at least 2 vertices")
    if not g.is_connected():
        return 0
    best = n - 1
    i = 0
    while i <= best and i < n:
        for j in range(n):
            if j == i or g.has_edge(i, j):
                continue
            best = min(best, local_connectivity(g, i, j, cap=best))
        i += 1
    return best


def is_k_connected(g: Graph, k: int) -> bool:
    if k <= 0:
        return True
    return g.n > k and connectivity(g) >= k


# --- girth -----------------------------------------------------------------

def girth(g: Graph) -> Girth:
    """Length of a shortest cycle (BFS from every vertex), or INF."""
    best = None
    for r in range(g.n):
        dist = {r: 0}
        parent = {r: -1}
        dq = deque([r])
        while dq:
            v = dq.popleft()
            if best is not None and 2 * dist[v] + 1 >= best:
                break
            for u in iter_bits(g.adj[v]):
                if u not in dist:
                    dist[u] = dist[v] + 1
                    parent[u] = v
                    dq.append(u)
                elif parent[v] != u:
                    cyc = dist[u] + dist[v] + 1
                    if best is None or cyc < best:
                        best = cyc
    return INF if best is None else best


# --- blocks ----------------------------------------------------------------

@dataclass(frozen=True)
class BlockCutTree:
    """Biconnected decomposition of a connected graph.

    ``blocks`` are vertex bitsets (bridges appear as 2-vertex blocks),
    ``cut_vertices`` a bitset, ``incidence`` the (cut vertex, block id) edges.
    """

    blocks: tuple[int, ...]
    cut_vertices: int
    incidence: tuple[tuple[int, int], ...] = field(default=())

    def block_vertices(self, i: int) -> list[int]:
        return bits(self.blocks[i])

    def cut_vertex_list(self) -> list[int]:
        return bits(self.cut_vertices)


def block_cut_tree(g: Graph) -> BlockCutTree:
    """Hopcroft-Tarjan lowpoint DFS (iterative), blocks from the edge stack."""
    if not g.is_connected():
        raise DomainError("block-cutpoint tree needs a connected graph")
    n = g.n
    if n == 1:
        return BlockCutTree((1,), 0, ())
    disc = [-1] * n
    low = [0] * n
    blocks: list[int] = []
    cuts = 0
    timer = 0
    estack: list[tuple[int, int]] = []
    root = 0
    disc[root] = low[root] = timer
    timer += 1
    root_children = 0
    stack = [(root, -1, iter(bits(g.adj[root])))]
    while stack:
        v, parent, it = stack[-1]
        advanced = False
        for u in it:
            if disc[u] == -1:
                disc[u] = low[u] = timer
                timer += 1
                estack.append((v, u))
                stack.append((u, v, iter(bits(g.adj[u]))))
                advanced = True
                break
            if u != parent and disc[u] < disc[v]:
                estack.append((v, u))
                low[v] = min(low[v], disc[u])
        if advanced:
            continue
        stack.pop()
        if parent == -1:
            continue
        low[parent] = min(low[parent], low[v])
        if low[v] >= disc[parent]:
            blk = 0
            while True:
                a, b = estack.pop()
                blk |= 1 << a | 1 << b
                if (a, b) == (parent, v):
                    break
            blocks.append(blk)
            if parent == root:
                root_children += 1
            else:
                cuts |= 1 << parent
    if root_children > 1:
        cuts |= 1 << root
    blocks.sort(key=lambda b: (lowest(b), b))
    incidence = tuple(
        (c, i) for i, b in enumerate(blocks) for c in iter_bits(b & cuts)
    )
    return BlockCutTree(tuple(blocks), cuts, incidence)


def cut_vertices(g: Graph) -> int:
    return block_cut_tree(g).cut_vertices


# --- Hall matchings --------------------------------------------------------

@dataclass(frozen=True)
class HallResult:
    """Either ``matching`` saturates S, or ``violator`` is S1 with |N(S1) & T| < |S1|."""

    matching: tuple[tuple[int, int], ...] | None
    violator: frozenset[int] | None

    @property
    def saturates(self) -> bool:
        return self.matching is not None


def hall_matching(g: Graph, s_set, t_set) -> HallResult:
    """Matching of the induced (S, T)-bigraph saturating S, or a Hall violator.

    Augmenting paths (Kuhn).  When some s stays unmatched, the S-vertices
    reachable from it by alternating paths form a violator: their neighbors
    in T are all matched back into that set, so |N(S1)| = |S1| - 1.
    """
    smask = s_set if isinstance(s_set, int) else mask_of(s_set)
    tmask = t_set if isinstance(t_set, int) else mask_of(t_set)
    if smask & tmask:
        raise DomainError("S and T must be disjoint")
    mate_t: dict[int, int] = {}
    mate_s: dict[int, int] = {}

    def augment(s: int, seen: set[int]) -> bool:
        for t in iter_bits(g.adj[s] & tmask):
            if t in seen:
                continue
            seen.add(t)
            if t not in mate_t or augment(mate_t[t], seen):
                mate_t[t] = s
                mate_s[s] = t
                return True
        return False

    for s in iter_bits(smask):
        if not augment(s, set()):
            # Alternating reachability from the free vertex s.
            reach_s = {s}
            frontier = [s]
            seen_t: set[int] = set()
            while frontier:
                a = frontier.pop()
                for t in iter_bits(g.adj[a] & tmask):
                    if t not in seen_t:
                        seen_t.add(t)
                        b = mate_t[t]
                        if b not in reach_s:
                            reach_s.add(b)
                            frontier.append(b)
            return HallResult(None, frozenset(reach_s))
    return HallResult(tuple(sorted(mate_s.items())), None)


# --- report ----------------------------------------------------------------

@dataclass(frozen=True)
class ParamReport:
    alpha: int
    kappa: int
    delta_max: int
    delta_min: int
    girth: Girth


def param_report(g: Graph) -> ParamReport:
    return ParamReport(
        alpha=independence_number(g),
        kappa=connectivity(g) if g.n >= 2 else 0,
        delta_max=g.max_degree(),
        delta_min=g.min_degree(),
        girth=girth(g),
    )
