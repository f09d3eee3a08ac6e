"""Small-graph corpora: canonical labelling, exhaustive generation of connected
graphs up to 8 vertices, and graph6 file ingestion."""

from __future__ import annotations

import io
import logging
import os
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator

from .errors import DomainError, ParseError
from .graph import Graph, encode_graph6, iter_bits, parse_graph6

log = logging.getLogger(__name__)

GEN_MAX_N = 8
# Connected graphs on n vertices, n = 1..9.
KNOWN_COUNTS = {1: 1, 2: 1, 3: 2, 4: 6, 5: 21, 6: 112, 7: 853, 8: 11117, 9: 261080}


# --- canonical form ----------------------------------------------------------

def _refine(adj: list[int], cells: list[int]) -> list[int]:
    """Coarsest equitable refinement of an ordered partition (cells as bitsets).

    Cells are split by neighbour counts into each splitter; the pieces keep
    ascending count order, so the result is isomorphism invariant.
    """
    cells = list(cells)
    changed = True
    while changed:
        changed = False
        for sp in list(cells):
            out = []
            for cell in cells:
                if cell & (cell - 1) == 0:
                    out.append(cell)
                    continue
                groups: dict[int, int] = {}
                for v in iter_bits(cell):
                    c = (adj[v] & sp).bit_count()
                    groups[c] = groups.get(c, 0) | 1 << v
                if len(groups) > 1:
                    changed = True
                    out.extend(groups[c] for c in sorted(groups))
                else:
                    out.append(cell)
            cells = out
            if changed:
                break
    return cells


def _cert(adj: list[int], order: list[int]) -> int:
    n = len(order)
    code = 0
    for j in range(1, n):
        row = adj[order[j]]
        for i in range(j):
            code = code << 1 | (row >> order[i] & 1)
    return code


def canonical_order(g: Graph) -> tuple[int, list[int]]:
    """(certificate, vertex order) maximizing the upper-triangle code.

    Search tree over individualize-and-refine.  Branching inside the first
    non-singleton cell skips vertices that are twins of an already tried one
    (their transposition is an automorphism fixing the partition).
    """
    n = g.n
    adj = g.adj
    if n == 0:
        return 0, []
    by_deg: dict[int, int] = {}
    for v in range(n):
        d = adj[v].bit_count()
        by_deg[d] = by_deg.get(d, 0) | 1 << v
    start = _refine(adj, [by_deg[d] for d in sorted(by_deg)])
    best_code = -1
    best_order: list[int] = []

    def twins(u: int, v: int) -> bool:
        mu = 1 << u | 1 << v
        return (adj[u] & ~mu) == (adj[v] & ~mu)

    def search(cells: list[int]) -> None:
        nonlocal best_code, best_order
        target = next((i for i, c in enumerate(cells) if c & (c - 1)), None)
        if target is None:
            order = [c.bit_length() - 1 for c in cells]
            code = _cert(adj, order)
            if code > best_code:
                best_code, best_order = code, order
            return
        tried: list[int] = []
        for v in iter_bits(cells[target]):
            if any(twins(v, u) for u in tried):
                continue
            tried.append(v)
            rest = cells[target] & ~(1 << v)
            nxt = cells[:target] + [1 << v, rest] + cells[target + 1:]
            search(_refine(adj, nxt))

    search(start)
    return best_code, best_order


def canonical_graph6(g: Graph) -> str:
    """graph6 of the canonical relabelling; equal for isomorphic graphs."""
    _, order = canonical_order(g)
    pos = {v: i for i, v in enumerate(order)}
    return encode_graph6(Graph.from_edges(g.n, [(pos[u], pos[v]) for u, v in g.edges()]))


def canonical_key(g: Graph) -> tuple[int, int]:
    return g.n, canonical_order(g)[0]


# --- generation ------------------------------------------------------------

def _extend(g: Graph) -> Iterator[Graph]:
    """Add a vertex joined to each nonempty subset of V(G)."""
    n = g.n
    for s in range(1, 1 << n):
        adj = list(g.adj)
        for v in iter_bits(s):
            adj[v] |= 1 << n
        adj.append(s)
        yield Graph(n + 1, adj)


def _extend_all(parents: Iterable[Graph]) -> list[Graph]:
    seen: dict[tuple[int, int], Graph] = {}
    for h in parents:
        for g in _extend(h):
            key = canonical_key(g)
            if key not in seen:
                seen[key] = g
    out = []
    # Canonical relabelling and a deterministic order (by certificate).
    for key in sorted(seen):
        out.append(parse_graph6(canonical_graph6(seen[key])))
    return out


@lru_cache(maxsize=None)
def _connected(n: int) -> tuple[Graph, ...]:
    if n == 1:
        return (Graph(1, [0]),)
    # Every connected graph has a non-cut vertex, so augmenting the connected
    # (n-1)-vertex graphs reaches every class.
    return tuple(_extend_all(_connected(n - 1)))


def generate_connected(n: int) -> list[Graph]:
    """One graph per isomorphism class of connected n-vertex graphs (n <= 8)."""
    if n < 1:
        raise DomainError("n must be >= 1")
    if n > GEN_MAX_N:
        raise DomainError(
            f"internal generator stops at n = {GEN_MAX_N}; ingest a graph6 corpus for n = {n} "
            "(scripts/build_corpus.py writes one)"
        )
    return list(_connected(n))


def extend_connected(graphs: Iterable[Graph]) -> list[Graph]:
    """Connected (n+1)-vertex classes from the full list of connected n-vertex classes."""
    return _extend_all(graphs)


def brute_force_count(n: int) -> int:
    """Connected isomorphism classes by trying every edge set and every
    permutation (numpy); only sensible for n <= 6."""
    import itertools

    import numpy as np

    if n > 6:
        raise DomainError("brute force count is limited to n <= 6")
    pairs = list(itertools.combinations(range(n), 2))
    m = len(pairs)
    perms = list(itertools.permutations(range(n)))
    # pair index under each permutation
    index = {p: i for i, p in enumerate(pairs)}
    perm_map = np.array([[index[tuple(sorted((p[a], p[b])))] for a, b in pairs] for p in perms], dtype=np.int64)
    codes = np.arange(1 << m, dtype=np.int64)
    bitmat = (codes[:, None] >> np.arange(m)[None, :]) & 1
    best = np.zeros(1 << m, dtype=np.int64)
    weights = 1 << np.arange(m, dtype=np.int64)
    for row in perm_map:
        img = (bitmat * weights[row][None, :]).sum(axis=1)
        best = np.maximum(best, img)
    reps = np.unique(best)
    count = 0
    for code in reps:
        edges = [pairs[i] for i in range(m) if int(code) >> i & 1]
        if Graph.from_edges(n, edges).is_connected():
            count += 1
    return count


# --- ingestion -------------------------------------------------------------

@dataclass(frozen=True)
class IngestError:
    line: int
    text: str
    message: str


def ingest(source, strict: bool = True, errors: list | None = None) -> Iterator[Graph]:
    """Graphs from a newline-separated graph6 file (path, file object or text).

    Blank lines are skipped.  In strict mode the first bad line raises a
    ParseError naming its line number; otherwise bad lines are recorded in
    ``errors`` (if given) and skipped.  Each graph's label is ``line:<n>``.
    """
    if isinstance(source, (str, os.PathLike)) and not (isinstance(source, str) and "\n" in source):
        fh = open(source, "r", encoding="ascii", errors="replace")
        close = True
    elif isinstance(source, str):
        fh = io.StringIO(source)
        close = True
    else:
        fh = source
        close = False
    try:
        for lineno, raw in enumerate(fh, 1):
            text = raw.strip()
            if not text:
                continue
            try:
                g = parse_graph6(text)
            except ParseError as exc:
                if strict:
                    raise ParseError(f"line {lineno}: {exc}", getattr(exc, "offset", None)) from None
                log.warning("skipping line %d: %s", lineno, exc)
                if errors is not None:
                    errors.append(IngestError(lineno, text, str(exc)))
                continue
            yield g.with_label(f"line:{lineno}")
    finally:
        if close:
            fh.close()


def corpus_from_spec(spec: str, strict: bool = True) -> Iterator[Graph]:
    """``gen:N`` (all connected graphs on 1..N vertices), ``gen:=N`` (exactly
    N vertices) or a graph6 file path."""
    if spec.startswith("gen:"):
        arg = spec[4:]
        if arg.startswith("="):
            sizes = [int(arg[1:])]
        else:
            sizes = range(1, int(arg) + 1)
        for n in sizes:
            yield from generate_connected(n)
    else:
        yield from ingest(spec, strict=strict)
