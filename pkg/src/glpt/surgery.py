"""Executable path surgery: attachment analysis, rank, augmenting splices and
detours, and independent sets read off fibers.

Paths here are oriented: ``ctx.path[0]`` is x and ``ctx.path[-1]`` is y.
Positions (indices into the path) are used throughout; ``host_intervals`` in
a plan are inclusive position ranges on the host path.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Sequence

from .errors import DomainError, IntegrityError
from .graph import Graph, bits, iter_bits, lowest, mask_of
from .params import hall_matching
from .paths import Path

KINDS = ("interior-splice", "exterior-splice", "detour", "y-rebuild")


@dataclass(frozen=True)
class AttachmentContext:
    host: Graph
    path: tuple[int, ...]
    comp: int
    attach: tuple[int, ...]
    attach_pos: tuple[int, ...]
    segments: tuple[tuple[int, int], ...]

    @property
    def t(self) -> int:
        return self.comp.bit_count()

    @property
    def k(self) -> int:
        return len(self.attach)

    @property
    def x(self) -> int:
        return self.path[0]

    @property
    def y(self) -> int:
        return self.path[-1]

    @property
    def comp_vertices(self) -> list[int]:
        return bits(self.comp)

    def position(self, v: int) -> int:
        try:
            return self.path.index(v)
        except ValueError:
            raise DomainError(f"{v} is not on the path") from None

    def segment_index(self, pos: int) -> int:
        """Number of attachment points before ``pos``: 0 for the prefix
        P[x, s_1), i for the stretch after s_i."""
        return sum(1 for a in self.attach_pos if a < pos)

    def rank_at(self, pos: int) -> int:
        if pos in self.attach_pos:
            raise DomainError(f"{self.path[pos]} is an attachment point")
        before = [a for a in self.attach_pos if a < pos]
        return pos if not before else pos - before[-1] - 1

    def is_complete(self) -> bool:
        return self.host.is_clique(self.comp)


def attachment_context(g: Graph, path, h_seed: int) -> AttachmentContext:
    """Component of G - V(P) containing ``h_seed`` and its attachment data."""
    verts = tuple(path.verts if isinstance(path, Path) else path)
    pmask = mask_of(verts)
    if pmask >> h_seed & 1:
        raise DomainError(f"seed {h_seed} lies on the path")
    if not 0 <= h_seed < g.n:
        raise DomainError(f"seed {h_seed} not in graph")
    for a, b in zip(verts, verts[1:]):
        if not g.has_edge(a, b):
            raise DomainError(f"{verts} is not a path of the graph")
    comp = g.reach(h_seed, g.full & ~pmask)
    attach_pos = tuple(i for i, v in enumerate(verts) if g.adj[v] & comp)
    segs = []
    lo = 0
    for a in list(attach_pos) + [len(verts)]:
        if a > lo:
            segs.append((lo, a - 1))
        lo = a + 1
    return AttachmentContext(
        host=g,
        path=verts,
        comp=comp,
        attach=tuple(verts[i] for i in attach_pos),
        attach_pos=attach_pos,
        segments=tuple(segs),
    )


def components_off_path(g: Graph, path) -> list[int]:
    verts = path.verts if isinstance(path, Path) else path
    return g.components(g.full & ~mask_of(verts))


def rank(ctx: AttachmentContext, w: int) -> int:
    """Longest attachment-free subpath of P[x, w] ending at w, in edges."""
    return ctx.rank_at(ctx.position(w))


# --- plans -----------------------------------------------------------------

@dataclass(frozen=True)
class AugmentationPlan:
    """A path rewrite that yields a strictly longer path.

    splice:   replace host[lo..hi] (empty when hi == lo - 1) by ``patch1``.
    detour:   intervals (u1, w1), (u2, w2) with u1 < u2 < w1 < w2; patches are
              full u1-w1 and u2-w2 paths.  Result: x..u1, Q1, w1 back to u2,
              Q2, w2..y.
    y-rebuild: intervals (a, b), (c, last): result is host[last..c] reversed,
              then host[a..b], then ``patch1``.
    """

    kind: str
    host_path: tuple[int, ...]
    host_intervals: tuple[tuple[int, int], ...]
    patch1: tuple[int, ...]
    patch2: tuple[int, ...] = ()
    clause: str = ""

    def __post_init__(self):
        if self.kind not in KINDS:
            raise DomainError(f"unknown plan kind {self.kind!r}")


def apply_plan(path, plan: AugmentationPlan, host: Graph | None = None) -> Path:
    """Apply ``plan`` to ``path``; the result is validated against the host."""
    if isinstance(path, Path):
        verts, host = path.verts, host or path.host
    else:
        verts = tuple(path)
    if host is None:
        raise IntegrityError("apply_plan needs a host graph")
    if tuple(verts) != plan.host_path:
        raise IntegrityError("plan was built for a different host path")
    p = list(verts)
    last = len(p) - 1
    if plan.kind in ("interior-splice", "exterior-splice"):
        ((lo, hi),) = plan.host_intervals
        new = p[:lo] + list(plan.patch1) + p[hi + 1:]
    elif plan.kind == "detour":
        (u1, w1), (u2, w2) = plan.host_intervals
        if not u1 < u2 < w1 < w2:
            raise IntegrityError("detour anchors out of order")
        q1, q2 = plan.patch1, plan.patch2
        if (q1[0], q1[-1]) != (p[u1], p[w1]) or (q2[0], q2[-1]) != (p[u2], p[w2]):
            raise IntegrityError("detour patch ends do not match anchors")
        new = p[:u1] + list(q1) + p[u2:w1][::-1] + list(q2[1:]) + p[w2 + 1:]
    else:
        (a, b), (c, end) = plan.host_intervals
        if end != last:
            raise IntegrityError("y-rebuild must keep the far end")
        new = p[c:][::-1] + p[a:b + 1] + list(plan.patch1)
    try:
        out = Path(tuple(new), host)
    except IntegrityError as exc:
        raise IntegrityError(f"plan produces an invalid path: {exc}") from None
    if out.order <= len(p):
        raise IntegrityError("plan is not augmenting")
    x, y = p[0], p[-1]
    if plan.kind in ("interior-splice", "detour") and (out.verts[0], out.verts[-1]) != (x, y):
        raise IntegrityError("interior splice or detour moved an endpoint")
    if plan.kind == "exterior-splice" and x not in out.ends and y not in out.ends:
        raise IntegrityError("exterior splice lost both endpoints")
    if plan.kind == "y-rebuild" and out.verts[0] != y:
        raise IntegrityError("y-rebuild must start at y")
    return out


def _comp_path(g: Graph, comp: int, sources: int, targets: int) -> list[int]:
    """Shortest path inside ``comp`` from a source to a target (BFS, ascending ids)."""
    parent: dict[int, int] = {}
    dq = deque()
    for s in iter_bits(sources & comp):
        parent[s] = -1
        dq.append(s)
    while dq:
        v = dq.popleft()
        if targets >> v & 1:
            out = [v]
            while parent[out[-1]] != -1:
                out.append(parent[out[-1]])
            return out[::-1]
        for u in iter_bits(g.adj[v] & comp):
            if u not in parent:
                parent[u] = v
                dq.append(u)
    raise DomainError("no path inside the component")


def _spanning(comp: int, first: int | None = None, last: int | None = None) -> list[int]:
    """Hamiltonian path of a complete component: ascending ids between the fixed ends."""
    mid = [v for v in iter_bits(comp) if v != first and v != last]
    return ([first] if first is not None else []) + mid + ([last] if last is not None else [])


def _pair_matching(g: Graph, ctx: AttachmentContext, a: int, b: int) -> tuple[int, int] | None:
    """Distinct z, z' in H with a~z and b~z', via Hall matching."""
    res = hall_matching(g, (1 << a) | (1 << b), ctx.comp)
    if not res.saturates:
        return None
    m = dict(res.matching)
    return m[a], m[b]


def find_augmentation(g: Graph, ctx: AttachmentContext, keep_ends: str = "") -> AugmentationPlan | None:
    """First applicable augmenting rewrite, or None.

    ``keep_ends`` ("", "x", "y" or "xy") skips plans whose result loses the
    named endpoints of P; "xy" admits only interior splices and detours.

    Clauses are tried in a fixed order: consecutive attachment pair; an
    attachment point at an end (complete H); a short stretch of P - S
    (complete H); adjacent successors or predecessors of two attachment
    points; a low-rank cross edge after s_1 (complete H); a low-rank cross
    edge from the prefix P[x, s_1) (complete H, yields a longer path ending at y).
    """
    if keep_ends not in ("", "x", "y", "xy"):
        raise DomainError("keep_ends must be '', 'x', 'y' or 'xy'")
    need = {ctx.path[0] if c == "x" else ctx.path[-1] for c in keep_ends}
    for plan in _candidates(g, ctx):
        if need and not need <= set(apply_plan(ctx.path, plan, g).ends):
            continue
        return plan
    return None


def _candidates(g: Graph, ctx: AttachmentContext):
    p = ctx.path
    last = len(p) - 1
    pos = ctx.attach_pos
    comp = ctx.comp
    t = ctx.t
    k = len(pos)
    adj = g.adj
    if k == 0 or comp == 0:
        return

    def hpath(a: int, b: int) -> list[int]:
        return _comp_path(g, comp, adj[a], adj[b])

    # Consecutive attachment points: insert an H-path between them.
    for i in range(k - 1):
        if pos[i + 1] == pos[i] + 1:
            q = hpath(p[pos[i]], p[pos[i + 1]])
            yield AugmentationPlan("interior-splice", p, ((pos[i] + 1, pos[i]),), tuple(q),
                                    clause="consecutive-attachments")

    complete = g.is_clique(comp)

    if complete:
        if pos[0] == 0:
            z = lowest(adj[p[0]] & comp)
            yield AugmentationPlan("exterior-splice", p, ((0, -1),), tuple(_spanning(comp, last=z)),
                                    clause="attachment-at-x")
        if pos[-1] == last:
            z = lowest(adj[p[last]] & comp)
            yield AugmentationPlan("exterior-splice", p, ((last + 1, last),),
                                    tuple(_spanning(comp, first=z)), clause="attachment-at-y")

        # A stretch of P - S shorter than H is replaced by a spanning H-path.
        for lo, hi in ctx.segments:
            if hi - lo + 1 >= t:
                continue
            if lo == 0:
                z = lowest(adj[p[hi + 1]] & comp)
                yield AugmentationPlan("exterior-splice", p, ((lo, hi),), tuple(_spanning(comp, last=z)),
                                        clause="short-prefix")
            elif hi == last:
                z = lowest(adj[p[lo - 1]] & comp)
                yield AugmentationPlan("exterior-splice", p, ((lo, hi),), tuple(_spanning(comp, first=z)),
                                        clause="short-suffix")
            elif (zz := _pair_matching(g, ctx, p[lo - 1], p[hi + 1])) is not None:
                z, z2 = zz
                yield AugmentationPlan("interior-splice", p, ((lo, hi),),
                                        tuple(_spanning(comp, first=z, last=z2)), clause="short-stretch")

    # Successors (or predecessors) of two attachment points are adjacent.
    for i in range(k):
        for j in range(i + 1, k):
            a, b = pos[i], pos[j]
            if b == a + 1:
                continue
            if b < last and g.has_edge(p[a + 1], p[b + 1]):
                q1 = [p[a]] + hpath(p[a], p[b]) + [p[b]]
                yield AugmentationPlan("detour", p, ((a, b), (a + 1, b + 1)), tuple(q1),
                                        (p[a + 1], p[b + 1]), clause="adjacent-successors")
            if a > 0 and g.has_edge(p[a - 1], p[b - 1]):
                q2 = [p[a]] + hpath(p[a], p[b]) + [p[b]]
                yield AugmentationPlan("detour", p, ((a - 1, b - 1), (a, b)), (p[a - 1], p[b - 1]),
                                        tuple(q2), clause="adjacent-predecessors")

    if not complete:
        return

    non_attach = [i for i in range(last + 1) if i not in pos]
    seg = {i: ctx.segment_index(i) for i in non_attach}
    rk = {i: ctx.rank_at(i) for i in non_attach}

    # Low-rank cross edge between stretches after s_1: detour through H.
    if t >= 2:
        for wi in non_attach:
            if seg[wi] == 0:
                continue
            for wj in non_attach:
                if wj <= wi or seg[wj] == seg[wi] or rk[wi] + rk[wj] >= t:
                    continue
                if not g.has_edge(p[wi], p[wj]):
                    continue
                si, sj = pos[seg[wi] - 1], pos[seg[wj] - 1]
                zz = _pair_matching(g, ctx, p[si], p[sj])
                if zz is None:
                    continue
                z, z2 = zz
                q1 = [p[si]] + _spanning(comp, first=z, last=z2) + [p[sj]]
                yield AugmentationPlan("detour", p, ((si, sj), (wi, wj)), tuple(q1), (p[wi], p[wj]),
                                        clause="low-rank-cross-edge")

    # Low-rank cross edge from the prefix: rebuild a longer path ending at y.
    for wi in non_attach:
        if seg[wi] != 0:
            continue
        for wj in non_attach:
            if seg[wj] == 0 or rk[wi] + rk[wj] >= t or not g.has_edge(p[wi], p[wj]):
                continue
            sj = pos[seg[wj] - 1]
            z = lowest(adj[p[sj]] & comp)
            yield AugmentationPlan("y-rebuild", p, ((wi, sj), (wj, last)), tuple(_spanning(comp, first=z)),
                                    clause="prefix-cross-edge")
    return None


# --- independent sets from fibers ------------------------------------------

FIBER_KINDS = ("xy-fiber", "x-fiber", "fiber")


def extract_independent_set(g: Graph, ctx: AttachmentContext, kind: str) -> frozenset[int]:
    """Independent set A on P with no edge to H, built from the successors of
    the attachment points (plus x for a fiber).

    Sizes: >= k-1 (xy-fiber), >= k (x-fiber), >= k+1 (fiber).  The caller
    certifies the fiber property; the cheap necessary conditions are
    re-checked here and a DomainError signals a failed certification.
    """
    if kind not in FIBER_KINDS:
        raise DomainError(f"kind must be one of {FIBER_KINDS}")
    p = ctx.path
    last = len(p) - 1
    pos = ctx.attach_pos
    k = len(pos)
    for i in range(k - 1):
        if pos[i + 1] == pos[i] + 1:
            raise DomainError("consecutive attachment points: not a fiber")
    if kind in ("x-fiber", "fiber") and k and pos[-1] == last:
        raise DomainError("H attaches at y: not an x-fiber")
    if kind == "fiber" and k and pos[0] == 0:
        raise DomainError("H attaches at x: not a fiber")

    used = pos[:-1] if kind == "xy-fiber" else pos
    a_pos = [i + 1 for i in used]
    if kind == "fiber":
        a_pos = [0] + a_pos
    a_mask = mask_of(p[i] for i in a_pos)
    need = {"xy-fiber": k - 1, "x-fiber": k, "fiber": k + 1}[kind]
    if a_mask.bit_count() < need:
        raise DomainError("independent set smaller than the bound")
    if not g.is_independent(a_mask):
        raise DomainError("successor set is not independent: not a fiber of this kind")
    if any(g.adj[v] & ctx.comp for v in iter_bits(a_mask)):
        raise DomainError("successor set touches H")
    excluded = {"xy-fiber": {p[0], p[-1]}, "x-fiber": {p[0]}, "fiber": set()}[kind]
    if excluded & set(iter_bits(a_mask)):
        raise DomainError("independent set contains an excluded endpoint")
    return frozenset(iter_bits(a_mask))


# --- structure checks under k-connectivity with small alpha ----------------

@dataclass(frozen=True)
class HammerCheck:
    complete: bool
    attach_count_ok: bool
    segment_count_ok: bool
    segment_sizes_ok: bool
    low_rank_cliques: bool
    cross_edges_ok: bool

    @property
    def ok(self) -> bool:
        return all((self.complete, self.attach_count_ok, self.segment_count_ok,
                    self.segment_sizes_ok, self.low_rank_cliques, self.cross_edges_ok))


def hammer_check(g: Graph, ctx: AttachmentContext, k: int) -> HammerCheck:
    """Evaluate the structure forced on a component H off a longest path in a
    k-connected graph with alpha <= k+2: H complete with exactly k attachment
    points, k+1 stretches of P - S each with at least |H| vertices, the
    sub-|H|-rank part of each stretch a clique, and no edge between
    stretches whose ranks sum below |H|."""
    t = ctx.t
    p = ctx.path
    segs = ctx.segments
    low_cliques = True
    for lo, hi in segs:
        low = mask_of(p[i] for i in range(lo, hi + 1) if ctx.rank_at(i) < t)
        if not g.is_clique(low):
            low_cliques = False
    cross_ok = True
    non_attach = [i for i in range(len(p)) if i not in ctx.attach_pos]
    for a in non_attach:
        for b in non_attach:
            if b <= a or ctx.segment_index(a) == ctx.segment_index(b):
                continue
            if ctx.rank_at(a) + ctx.rank_at(b) < t and g.has_edge(p[a], p[b]):
                cross_ok = False
    return HammerCheck(
        complete=g.is_clique(ctx.comp),
        attach_count_ok=ctx.k == k,
        segment_count_ok=len(segs) == k + 1,
        segment_sizes_ok=all(hi - lo + 1 >= t for lo, hi in segs),
        low_rank_cliques=low_cliques,
        cross_edges_ok=cross_ok,
    )
