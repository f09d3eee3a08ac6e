"""Exact longest paths, fibers, and Hamiltonicity.

All searches share one depth-first engine over bitsets.  Neighbors are tried
in ascending id order, so the first maximal path found is the
lexicographically least one and witnesses are reproducible.
"""

from __future__ import annotations

import sys
from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

from .errors import DomainError, IntegrityError, ResourceError
from .graph import Graph, bits, iter_bits, lowest, mask_of

DEFAULT_CAP = 10**6
DP_MAX_N = 24

sys.setrecursionlimit(max(sys.getrecursionlimit(), 10_000))


@dataclass(frozen=True, eq=False)
class Path:
    """A path in ``host``.  ``verts`` keeps the orientation it was built with;
    equality and hashing use the canonical (lexicographically smaller)
    orientation, so a path and its reverse compare equal."""

    verts: tuple[int, ...]
    host: Graph = field(repr=False)

    def __post_init__(self):
        object.__setattr__(self, "verts", tuple(self.verts))
        if not self.verts:
            raise IntegrityError("empty path")
        if len(set(self.verts)) != len(self.verts):
            raise IntegrityError(f"repeated vertex in path {self.verts}")
        for a, b in zip(self.verts, self.verts[1:]):
            if not self.host.has_edge(a, b):
                raise IntegrityError(f"{a}-{b} is not an edge of the host")

    @property
    def key(self) -> tuple[int, ...]:
        r = self.verts[::-1]
        return min(self.verts, r)

    def __eq__(self, other):
        if not isinstance(other, Path):
            return NotImplemented
        return self.key == other.key and self.host == other.host

    def __hash__(self):
        return hash(self.key)

    def __len__(self):
        return len(self.verts)

    def __iter__(self):
        return iter(self.verts)

    @property
    def order(self) -> int:
        return len(self.verts)

    @property
    def length(self) -> int:
        return len(self.verts) - 1

    @property
    def mask(self) -> int:
        return mask_of(self.verts)

    @property
    def ends(self) -> tuple[int, int]:
        return self.verts[0], self.verts[-1]

    def canonical(self) -> "Path":
        return Path(self.key, self.host)

    def reversed(self) -> "Path":
        return Path(self.verts[::-1], self.host)

    def oriented(self, start: int) -> "Path":
        if self.verts[0] == start:
            return self
        if self.verts[-1] == start:
            return self.reversed()
        raise DomainError(f"{start} is not an end of {self.verts}")


@dataclass(frozen=True)
class FiberQuery:
    """Endpoint constraints: none (fiber), ``start`` (x-fiber), both (xy-fiber)."""

    start: int | None = None
    end: int | None = None

    def __post_init__(self):
        if self.start is None and self.end is not None:
            # An end-only query is an x-fiber from the other side.
            object.__setattr__(self, "start", self.end)
            object.__setattr__(self, "end", None)
        if self.start is not None and self.start == self.end:
            raise DomainError("xy-fiber needs x != y")

    @property
    def kind(self) -> str:
        if self.start is None:
            return "fiber"
        return "x-fiber" if self.end is None else "xy-fiber"


NO_QUERY = FiberQuery()


# --- DFS engine ------------------------------------------------------------

def _reach(adj: Sequence[int], src: int, within: int) -> int:
    seen = frontier = 1 << src
    while frontier:
        nxt = 0
        f = frontier
        while f:
            low = f & -f
            nxt |= adj[low.bit_length() - 1]
            f ^= low
        frontier = nxt & within & ~seen
        seen |= frontier
    return seen


class _Engine:
    """Simple-path DFS restricted to ``allowed`` vertices.

    ``starts``: start vertices.  ``end``: required last vertex or None.
    Unconstrained enumeration reports each undirected path once, from its
    smaller end.
    """

    def __init__(self, adj: Sequence[int], allowed: int, starts: Iterable[int],
                 end: int | None = None, dedupe_reverse: bool = False):
        self.adj = adj
        self.allowed = allowed
        self.starts = [s for s in starts if allowed >> s & 1]
        self.end = end
        self.end_bit = 0 if end is None else 1 << end
        self.dedupe = dedupe_reverse

    # Upper bound on total order of any completion of the current path.
    def _bound(self, head: int, visited: int, order: int) -> int:
        if self.end is not None and head == self.end:
            return order
        r = _reach(self.adj, head, self.allowed & ~visited | 1 << head)
        if self.end is not None and not r & self.end_bit:
            return -1
        return order + r.bit_count() - 1

    def best(self, target: int | None = None) -> tuple[int, list[int]]:
        """Maximum order and the lexicographically first witness."""
        best = 0
        witness: list[int] = []
        adj = self.adj
        end = self.end
        path: list[int] = []

        def ok_end(v: int) -> bool:
            return end is None or v == end

        def go(head: int, visited: int) -> bool:
            nonlocal best, witness
            order = len(path)
            if ok_end(head) and order > best:
                best = order
                witness = path[:]
                if target is not None and best >= target:
                    return True
            if end is not None and head == end:
                return False
            if self._bound(head, visited, order) <= best:
                return False
            for u in iter_bits(adj[head] & self.allowed & ~visited):
                path.append(u)
                stop = go(u, visited | 1 << u)
                path.pop()
                if stop:
                    return True
            return False

        for s in self.starts:
            if end is not None and s == end:
                continue
            path.append(s)
            stop = go(s, 1 << s)
            path.pop()
            if stop:
                break
        return best, witness

    def enumerate(self, order: int, cap: int, want_paths: bool = True):
        """All paths with exactly ``order`` vertices (which must be maximal).

        Returns a list of vertex tuples when ``want_paths``; otherwise the set
        of distinct vertex bitsets.  Raises ResourceError past ``cap`` paths.
        """
        adj = self.adj
        end = self.end
        found_paths: list[tuple[int, ...]] = []
        found_sets: set[int] = set()
        count = 0
        path: list[int] = []

        def go(head: int, visited: int) -> None:
            nonlocal count
            n_here = len(path)
            if n_here == order:
                if (end is None or head == end) and (not self.dedupe or path[0] <= head):
                    count += 1
                    if count > cap:
                        raise ResourceError(f"more than {cap} longest paths")
                    if want_paths:
                        found_paths.append(tuple(path))
                    else:
                        found_sets.add(visited)
                return
            if end is not None and head == end:
                return
            if self._bound(head, visited, n_here) < order:
                return
            for u in iter_bits(adj[head] & self.allowed & ~visited):
                if self.dedupe and n_here + 1 == order and u < path[0]:
                    continue
                path.append(u)
                go(u, visited | 1 << u)
                path.pop()

        for s in self.starts:
            if end is not None and s == end:
                continue
            path.append(s)
            go(s, 1 << s)
            path.pop()
        return found_paths if want_paths else found_sets


# --- Held-Karp subset DP ---------------------------------------------------

def held_karp(g: Graph, allowed: int | None = None, start: int | None = None,
              end: int | None = None) -> tuple[int, list[int]]:
    """Longest path by subset DP over ``G[allowed]`` (at most 24 vertices).

    ``reach[S]`` is the bitset of vertices v such that some path with vertex
    set exactly S ends at v.  Layers of equal popcount are processed with
    numpy.  Returns (order, one witness path) in original vertex ids.
    """
    allowed = g.full if allowed is None else allowed
    keep = bits(allowed)
    k = len(keep)
    if k == 0:
        return 0, []
    if k > DP_MAX_N:
        raise ResourceError(f"subset DP limited to {DP_MAX_N} vertices, got {k}")
    idx = {v: i for i, v in enumerate(keep)}
    adj = [0] * k
    for i, v in enumerate(keep):
        for u in iter_bits(g.adj[v] & allowed):
            adj[i] |= 1 << idx[u]
    s_loc = None if start is None else idx.get(start)
    e_loc = None if end is None else idx.get(end)
    if (start is not None and s_loc is None) or (end is not None and e_loc is None):
        return 0, []

    size = 1 << k
    dp = np.zeros(size, dtype=np.uint32)
    if s_loc is None:
        for i in range(k):
            dp[1 << i] = 1 << i
    else:
        dp[1 << s_loc] = 1 << s_loc
    masks = np.arange(size, dtype=np.uint32)
    pc = np.zeros(size, dtype=np.uint8)
    for b in range(k):
        pc += ((masks >> b) & 1).astype(np.uint8)
    order_idx = np.argsort(pc, kind="stable").astype(np.uint32)
    bounds = np.searchsorted(pc[order_idx], np.arange(k + 2))
    adj_np = np.array(adj, dtype=np.uint32)
    bit_np = [np.uint32(1 << i) for i in range(k)]
    e_bit = None if e_loc is None else np.uint32(1 << e_loc)
    for layer in range(1, k):
        layer_masks = order_idx[bounds[layer]:bounds[layer + 1]]
        ends = dp[layer_masks]
        if e_bit is not None:
            # The fixed end may only be the last vertex: never extend from it.
            ends = ends & ~e_bit
        live = ends != 0
        layer_masks = layer_masks[live]
        ends = ends[live]
        if layer_masks.size == 0:
            continue
        for i in range(k):
            bi = bit_np[i]
            sel = ((layer_masks & bi) == 0) & ((ends & adj_np[i]) != 0)
            if sel.any():
                tgt = layer_masks[sel] | bi
                dp[tgt] |= bi

    good = dp if e_bit is None else dp & e_bit
    nz = np.flatnonzero(good)
    if nz.size == 0:
        return 0, []
    best_order = int(pc[nz].max())
    cand = nz[pc[nz] == best_order]
    mask = int(cand.min())
    last_bits = int(good[mask])
    v = lowest(last_bits)
    seq = [v]
    while mask != 1 << v:
        prev = mask ^ (1 << v)
        opts = int(dp[prev]) & adj[v]
        if e_bit is not None:
            opts &= ~int(e_bit)
        u = lowest(opts)
        seq.append(u)
        mask, v = prev, u
    seq.reverse()
    if s_loc is not None and seq[0] != s_loc:
        seq.reverse()
    return best_order, [keep[i] for i in seq]


# --- public API ------------------------------------------------------------

def _check_query(g: Graph, q: FiberQuery) -> None:
    for v in (q.start, q.end):
        if v is not None and not 0 <= v < g.n:
            raise DomainError(f"vertex {v} not in graph")


def _require_connected(g: Graph) -> None:
    if g.n == 0 or not g.is_connected():
        raise DomainError("graph must be connected")


def _engine(g: Graph, q: FiberQuery, allowed: int, dedupe: bool) -> _Engine:
    starts = bits(allowed) if q.start is None else [q.start]
    return _Engine(g.adj, allowed, starts, q.end, dedupe_reverse=dedupe and q.start is None)


def max_path_order(g: Graph, q: FiberQuery = NO_QUERY, allowed: int | None = None,
                   method: str = "auto") -> int:
    """Longest path order inside ``G[allowed]`` (any graph, possibly disconnected)."""
    allowed = g.full if allowed is None else allowed
    if q.start is not None and not allowed >> q.start & 1:
        return 0
    if q.end is not None and not allowed >> q.end & 1:
        return 0
    k = allowed.bit_count()
    if method == "auto":
        method = "dp" if 14 <= k <= 20 else "dfs"
    if method == "dp":
        return held_karp(g, allowed, q.start, q.end)[0]
    if method != "dfs":
        raise DomainError(f"unknown method {method!r}")
    if q.start is None:
        target = max((c.bit_count() for c in g.components(allowed)), default=0)
    else:
        comp = g.reach(q.start, allowed)
        if q.end is not None and not comp >> q.end & 1:
            return 0
        target = comp.bit_count()
    return _engine(g, q, allowed, False).best(target)[0]


def longest_path_order(g: Graph, q: FiberQuery = NO_QUERY, method: str = "auto") -> int:
    """Maximum number of vertices on a path obeying the endpoint constraints."""
    _require_connected(g)
    _check_query(g, q)
    return max_path_order(g, q, method=method)


def fiber(g: Graph, q: FiberQuery = NO_QUERY) -> Path:
    """Lexicographically first path of maximum order under ``q``.

    Oriented from ``q.start`` when a start is given; otherwise returned in
    canonical orientation.
    """
    _require_connected(g)
    _check_query(g, q)
    _, w = _engine(g, q, g.full, False).best(g.n)
    p = Path(tuple(w), g)
    return p if q.start is not None else p.canonical()


def enumerate_longest_paths(g: Graph, q: FiberQuery = NO_QUERY, cap: int = DEFAULT_CAP) -> list[Path]:
    """Every distinct path of maximum order under ``q``, sorted lexicographically.

    Unconstrained paths are in canonical orientation; constrained ones start
    at ``q.start``.
    """
    _require_connected(g)
    _check_query(g, q)
    order = max_path_order(g, q)
    eng = _engine(g, q, g.full, True)
    found = eng.enumerate(order, cap, want_paths=True)
    found.sort()
    return [Path(p, g) for p in found]


def longest_path_family(g: Graph, q: FiberQuery = NO_QUERY, allowed: int | None = None,
                        cap: int = DEFAULT_CAP) -> tuple[int, set[int]]:
    """(order, distinct vertex bitsets of all maximum-order paths) under ``q``."""
    allowed = g.full if allowed is None else allowed
    order = max_path_order(g, q, allowed)
    if order == 0:
        return 0, set()
    if order == allowed.bit_count() and q.start is None:
        # Spanning paths all share the same vertex set.
        return order, {allowed}
    eng = _engine(g, q, allowed, True)
    return order, eng.enumerate(order, cap, want_paths=False)


def fiber_intersection(g: Graph, q: FiberQuery = NO_QUERY, cap: int = DEFAULT_CAP) -> int:
    """Bitset of vertices lying on every maximum-order path under ``q``."""
    _, fam = longest_path_family(g, q, cap=cap)
    out = g.full
    for m in fam:
        out &= m
    return out


def path_avoiding(g: Graph, order: int, avoid: int, q: FiberQuery = NO_QUERY) -> Path | None:
    """A path of at least ``order`` vertices in ``G - avoid`` obeying ``q``, if any."""
    allowed = g.full & ~avoid
    if q.start is not None and not allowed >> q.start & 1:
        return None
    eng = _engine(g, q, allowed, False)
    best, w = eng.best(order)
    if best < order:
        return None
    return Path(tuple(w), g)


def hamiltonian(g: Graph, kind: str = "path") -> tuple[bool, Path | None]:
    """Exact Hamiltonian path/cycle test with a verified witness.

    A cycle witness is returned as the spanning path v0..v_{n-1} whose ends
    are adjacent.
    """
    n = g.n
    if kind == "path":
        if n == 0 or not g.is_connected():
            return False, None
        best, w = _Engine(g.adj, g.full, range(n)).best(n)
        if best < n:
            return False, None
        return True, Path(tuple(w), g)
    if kind == "cycle":
        if n < 3:
            raise DomainError("Hamiltonian cycle needs n >= 3")
        if not g.is_connected() or g.min_degree() < 2:
            return False, None
        # Fix vertex 0 as the start and try each neighbor as the closing end.
        for y in iter_bits(g.adj[0]):
            best, w = _Engine(g.adj, g.full, [0], y).best(n)
            if best == n:
                p = Path(tuple(w), g)
                if not g.has_edge(p.verts[0], p.verts[-1]):
                    raise IntegrityError("cycle witness does not close")
                return True, p
        return False, None
    raise DomainError(f"unknown kind {kind!r}")


def circumference(g: Graph) -> int:
    """Order of a longest cycle (0 for forests)."""
    best = 0
    for s in range(g.n):
        allowed = g.full & ~((1 << s) - 1)
        for y in iter_bits(g.adj[s] & allowed):
            # Cycle with least vertex s through edge s-y, traversed s ... y.
            if y < s:
                continue
            eng = _Engine(g.adj, allowed, [s], y)
            o, _ = eng.best(allowed.bit_count())
            if o >= 3:
                best = max(best, o)
    return best


def is_path_in(g: Graph, verts: Sequence[int]) -> bool:
    if not verts or len(set(verts)) != len(verts):
        return False
    if any(not 0 <= v < g.n for v in verts):
        return False
    return all(g.has_edge(a, b) for a, b in zip(verts, verts[1:]))
