"""Immutable simple graphs over bitset adjacency, graph6 codec, induced search.

Vertex sets are plain Python ints used as bitsets (bit ``v`` set means vertex
``v`` is present); ints are arbitrary precision, so graphs past 64 vertices
need no special handling.  Public functions that hand vertex sets back to
callers convert them to ``frozenset``.
"""

from __future__ import annotations

from typing import Iterable, Iterator, Sequence

from .errors import DomainError, ParseError

MAX_VERTICES = 512


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def bits(mask: int) -> list[int]:
    return list(iter_bits(mask))


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def lowest(mask: int) -> int:
    return (mask & -mask).bit_length() - 1


class Graph:
    """A simple undirected graph on vertices ``0..n-1``.

    ``adj[v]`` is the neighbor bitset of ``v``.  Instances are immutable and
    hashable; equality is labelled equality (same ``n``, same edges).
    """

    __slots__ = ("n", "adj", "label", "_hash")

    def __init__(self, n: int, adj: Sequence[int], label: str | None = None):
        if not 0 <= n <= MAX_VERTICES:
            raise DomainError(f"vertex count {n} outside 0..{MAX_VERTICES}")
        if len(adj) != n:
            raise DomainError("adjacency list length does not match n")
        adj = tuple(int(a) for a in adj)
        full = (1 << n) - 1
        for v, a in enumerate(adj):
            if a & ~full:
                raise DomainError(f"vertex {v} has a neighbor outside 0..{n - 1}")
            if a >> v & 1:
                raise DomainError(f"loop at vertex {v}")
            for u in iter_bits(a):
                if not adj[u] >> v & 1:
                    raise DomainError(f"asymmetric adjacency between {v} and {u}")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "adj", adj)
        object.__setattr__(self, "label", label)
        object.__setattr__(self, "_hash", hash((n, adj)))

    def __setattr__(self, name, value):
        raise AttributeError("Graph is immutable")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]], label: str | None = None) -> "Graph":
        adj = [0] * n
        for u, v in edges:
            if u == v:
                raise DomainError(f"loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise DomainError(f"edge ({u}, {v}) outside 0..{n - 1}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, adj, label)

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.adj == other.adj

    def __hash__(self):
        return self._hash

    def __repr__(self):
        name = f" {self.label!r}" if self.label else ""
        return f"<Graph{name} n={self.n} m={self.num_edges}>"

    @property
    def full(self) -> int:
        return (1 << self.n) - 1

    @property
    def num_edges(self) -> int:
        return sum(a.bit_count() for a in self.adj) // 2

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in iter_bits(self.adj[u] >> (u + 1) << (u + 1))]

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def neighbors(self, v: int) -> list[int]:
        return bits(self.adj[v])

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [a.bit_count() for a in self.adj]

    def max_degree(self) -> int:
        return max(self.degrees(), default=0)

    def min_degree(self) -> int:
        return min(self.degrees(), default=0)

    def with_label(self, label: str | None) -> "Graph":
        return Graph(self.n, self.adj, label)

    def induced(self, vertices: Iterable[int]) -> tuple["Graph", list[int]]:
        """Induced subgraph on ``vertices`` relabelled to ``0..k-1``.

        Returns the subgraph and the list mapping new ids to old ids.
        """
        keep = sorted(set(vertices))
        index = {v: i for i, v in enumerate(keep)}
        adj = []
        for v in keep:
            row = 0
            for u in iter_bits(self.adj[v]):
                i = index.get(u)
                if i is not None:
                    row |= 1 << i
            adj.append(row)
        return Graph(len(keep), adj), keep

    def delete(self, vertices: Iterable[int]) -> tuple["Graph", list[int]]:
        gone = set(vertices)
        return self.induced(v for v in range(self.n) if v not in gone)

    def complement(self) -> "Graph":
        full = self.full
        return Graph(self.n, [full & ~a & ~(1 << v) for v, a in enumerate(self.adj)])

    def reach(self, source: int, within: int | None = None) -> int:
        """Bitset of vertices reachable from ``source`` inside ``within``."""
        within = self.full if within is None else within
        seen = frontier = 1 << source
        adj = self.adj
        while frontier:
            nxt = 0
            for v in iter_bits(frontier):
                nxt |= adj[v]
            frontier = nxt & within & ~seen
            seen |= frontier
        return seen

    def components(self, within: int | None = None) -> list[int]:
        """Connected components of ``G[within]`` as bitsets, ordered by least vertex."""
        rest = self.full if within is None else within
        comps = []
        while rest:
            c = self.reach(lowest(rest), rest)
            comps.append(c)
            rest &= ~c
        return comps

    def is_connected(self, within: int | None = None) -> bool:
        within = self.full if within is None else within
        if not within:
            return True
        return self.reach(lowest(within), within) == within

    def is_clique(self, mask: int) -> bool:
        for v in iter_bits(mask):
            if (mask & ~(1 << v)) & ~self.adj[v]:
                return False
        return True

    def is_independent(self, mask: int) -> bool:
        return all(not (self.adj[v] & mask) for v in iter_bits(mask))


def disjoint_union(graphs: Iterable[Graph], label: str | None = None) -> Graph:
    adj: list[int] = []
    for g in graphs:
        off = len(adj)
        adj.extend(a << off for a in g.adj)
    return Graph(len(adj), adj, label)


# --- graph6 ----------------------------------------------------------------

_HEADER = ">>graph6<<"


def _encode_n(n: int) -> str:
    if n <= 62:
        return chr(63 + n)
    if n <= 258047:
        return "~" + "".join(chr(63 + (n >> s & 63)) for s in (12, 6, 0))
    raise DomainError(f"graph6 cannot encode n={n}")


def encode_graph6(g: Graph) -> str:
    """Encode ``g`` as a graph6 string (no header, no newline)."""
    out = [_encode_n(g.n)]
    acc = nbits = 0
    adj = g.adj
    for j in range(1, g.n):
        row = adj[j]
        for i in range(j):
            acc = acc << 1 | (row >> i & 1)
            nbits += 1
            if nbits == 6:
                out.append(chr(63 + acc))
                acc = nbits = 0
    if nbits:
        out.append(chr(63 + (acc << (6 - nbits))))
    return "".join(out)


def parse_graph6(text: str | bytes) -> Graph:
    """Decode one graph6 line.  Errors name the offending byte offset."""
    if isinstance(text, bytes):
        try:
            text = text.decode("ascii")
        except UnicodeDecodeError as exc:
            raise ParseError("non-ASCII byte", exc.start) from None
    s = text.strip()
    base = 0
    if s.startswith(_HEADER):
        base = len(_HEADER)
        s = s[base:]
    if not s:
        raise ParseError("empty graph6 string", base)
    if s[0] == ":" or s[0] == ";":
        raise ParseError("sparse6/digraph6 input is not graph6", base)
    vals = []
    for i, ch in enumerate(s):
        c = ord(ch)
        if not 63 <= c <= 126:
            raise ParseError(f"character {ch!r} outside graph6 range", base + i)
        vals.append(c - 63)

    if vals[0] != 63:
        n, pos = vals[0], 1
    else:
        if len(vals) < 4:
            raise ParseError("truncated extended size header", base + len(vals))
        if vals[1] == 63:
            raise ParseError("8-byte size header (n > 258047) not supported", base + 1)
        n = vals[1] << 12 | vals[2] << 6 | vals[3]
        pos = 4
        if n <= 62:
            raise ParseError(f"extended size header used for n={n}", base)
    if n > MAX_VERTICES:
        raise ParseError(f"n={n} exceeds the {MAX_VERTICES}-vertex limit", base)

    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    body = vals[pos:]
    if len(body) != need:
        off = base + pos + min(len(body), need)
        raise ParseError(f"expected {need} edge bytes for n={n}, found {len(body)}", off)

    adj = [0] * n
    k = 0
    i, j = 0, 1
    for b, v in enumerate(body):
        for shift in range(5, -1, -1):
            if k == nbits:
                if v & ((1 << (shift + 1)) - 1):
                    raise ParseError("nonzero padding bits", base + pos + b)
                break
            if v >> shift & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            k += 1
            i += 1
            if i == j:
                i, j = 0, j + 1
    return Graph(n, adj)


# --- induced subgraphs -----------------------------------------------------

def find_induced(g: Graph, h: Graph) -> dict[int, int] | None:
    """Return an induced embedding of ``h`` into ``g`` as ``{h_vertex: g_vertex}``.

    Backtracking over ``h``'s vertices in a connectivity-first order; the
    candidate set for each vertex is the intersection of neighbor and
    non-neighbor bitsets of the images already placed, filtered by degree.
    """
    if h.n > g.n:
        return None
    if h.n == 0:
        return {}

    # Place high-degree vertices first, preferring ones adjacent to placed ones.
    order: list[int] = []
    placed = 0
    hdeg = h.degrees()
    while len(order) < h.n:
        rest = [u for u in range(h.n) if not placed >> u & 1]
        u = max(rest, key=lambda u: ((h.adj[u] & placed).bit_count(), hdeg[u], -u))
        order.append(u)
        placed |= 1 << u

    gdeg = g.degrees()
    by_degree = [0] * (max(hdeg) + 1)
    for d in range(len(by_degree)):
        by_degree[d] = mask_of(v for v in range(g.n) if gdeg[v] >= d)

    full = g.full
    image = [0] * h.n
    gadj = g.adj

    def place(i: int, used: int) -> bool:
        if i == h.n:
            return True
        u = order[i]
        cand = by_degree[hdeg[u]] & ~used
        for w in order[:i]:
            if h.adj[u] >> w & 1:
                cand &= gadj[image[w]]
            else:
                cand &= full & ~gadj[image[w]]
            if not cand:
                return False
        for v in iter_bits(cand):
            image[u] = v
            if place(i + 1, used | 1 << v):
                return True
        return False

    if place(0, 0):
        return {u: image[u] for u in range(h.n)}
    return None


def is_h_free(g: Graph, h: Graph) -> bool:
    return find_induced(g, h) is None


def is_linear_forest(h: Graph) -> bool:
    """True iff ``h`` is acyclic with maximum degree at most 2."""
    if h.max_degree() > 2:
        return False
    return h.num_edges == h.n - len(h.components())


def component_orders(h: Graph) -> list[int]:
    return sorted((c.bit_count() for c in h.components()), reverse=True)
