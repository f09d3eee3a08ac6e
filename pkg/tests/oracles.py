"""Slow, obviously-correct reference implementations used only by the tests.

Nothing here shares code with the package's search routines; graphs are
read through ``g.n`` and ``g.has_edge`` only.
"""

from __future__ import annotations

from itertools import combinations, permutations


def edges(g):
    return [(u, v) for u, v in combinations(range(g.n), 2) if g.has_edge(u, v)]


def all_paths(g, allowed=None):
    """Every simple path (as a vertex tuple, both orientations, single vertices included)."""
    allowed = set(range(g.n)) if allowed is None else set(allowed)
    out = []

    def go(path, seen):
        out.append(tuple(path))
        for u in range(g.n):
            if u in allowed and u not in seen and g.has_edge(path[-1], u):
                path.append(u)
                seen.add(u)
                go(path, seen)
                seen.discard(u)
                path.pop()

    for s in sorted(allowed):
        go([s], {s})
    return out


def longest_paths(g, start=None, end=None, allowed=None):
    """(order, set of canonical longest paths) under endpoint constraints."""
    ps = [p for p in all_paths(g, allowed)
          if (start is None or p[0] == start) and (end is None or p[-1] == end)]
    if not ps:
        return 0, set()
    best = max(len(p) for p in ps)
    if start is None:
        canon = {min(p, p[::-1]) for p in ps if len(p) == best}
    else:
        canon = {p for p in ps if len(p) == best}
    return best, canon


def longest_order(g, allowed=None):
    return max((len(p) for p in all_paths(g, allowed)), default=0)


def gallai_by_deletion(g):
    """v is Gallai iff deleting v shortens the longest path."""
    full = longest_order(g)
    return {v for v in range(g.n) if longest_order(g, set(range(g.n)) - {v}) < full}


def alpha(g):
    best = 0
    for mask in range(1 << g.n):
        vs = [v for v in range(g.n) if mask >> v & 1]
        if len(vs) > best and all(not g.has_edge(a, b) for a, b in combinations(vs, 2)):
            best = len(vs)
    return best


def connected(g, verts):
    verts = set(verts)
    if not verts:
        return True
    start = next(iter(verts))
    seen = {start}
    stack = [start]
    while stack:
        v = stack.pop()
        for u in verts:
            if u not in seen and g.has_edge(v, u):
                seen.add(u)
                stack.append(u)
    return seen == verts


def kappa(g):
    """Smallest separating set size; n-1 for complete graphs."""
    n = g.n
    for k in range(n - 1):
        for cut in combinations(range(n), k):
            rest = set(range(n)) - set(cut)
            if len(rest) >= 2 and not connected(g, rest):
                return k
    return n - 1


def min_hitting_set_size(sets):
    sets = [set(s) for s in sets]
    universe = sorted(set().union(*sets)) if sets else []
    for k in range(0, len(universe) + 1):
        for c in combinations(universe, k):
            cs = set(c)
            if all(s & cs for s in sets):
                return k
    raise AssertionError("unreachable")


def induced_copy(g, h):
    """Brute force over all ordered |V(H)|-tuples of V(G)."""
    for tup in permutations(range(g.n), h.n):
        if all(g.has_edge(tup[a], tup[b]) == h.has_edge(a, b) for a, b in combinations(range(h.n), 2)):
            return tup
    return None


def has_ham_cycle(g):
    n = g.n
    for perm in permutations(range(1, n)):
        cyc = (0,) + perm
        if all(g.has_edge(cyc[i], cyc[(i + 1) % n]) for i in range(n)):
            return True
    return False


def blocks_by_deletion(g):
    """Cut vertices: deletion disconnects the rest."""
    return {v for v in range(g.n) if not connected(g, set(range(g.n)) - {v})}
