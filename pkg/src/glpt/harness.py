"""Theorem scanners, the counterexample search and report emission.

A theorem is a pair of predicates over a connected graph: the hypothesis uses
cheap parameters (alpha, kappa, degrees, forbidden induced subgraphs) and the
conclusion usually needs the longest-path family.  Scans evaluate the
conclusion only where the hypothesis holds and keep going past violations.
"""

from __future__ import annotations

import hashlib
import json
import logging
import multiprocessing as mp
import os
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from typing import Callable, Iterable, Iterator

from .constructions import linear_forest
from .corpus import corpus_from_spec
from .errors import DomainError, GlptError, ResourceError
from .graph import Graph, bits, encode_graph6, is_h_free, iter_bits, parse_graph6
from .params import INF, block_cut_tree, connectivity, girth, independence_number
from .paths import DEFAULT_CAP, FiberQuery, hamiltonian, longest_path_family, path_avoiding
from .transversal import _special_from_family, min_hitting_set

log = logging.getLogger(__name__)

P3P1 = linear_forest([3, 1])
P2P1P1 = linear_forest([2, 1, 1])


def n0(k: int) -> int:
    """Order threshold used for the Chvatal-Erdos type statement."""
    return k * (k + 2) * (2 * k + 3) + 1


class Facts:
    """Lazily computed parameters of one connected graph."""

    def __init__(self, g: Graph, cap: int = DEFAULT_CAP):
        self.g = g
        self.cap = cap

    @cached_property
    def alpha(self) -> int:
        return independence_number(self.g)

    @cached_property
    def kappa(self) -> int:
        return connectivity(self.g) if self.g.n >= 2 else 0

    @cached_property
    def delta(self) -> int:
        return self.g.max_degree()

    @cached_property
    def girth(self):
        return girth(self.g)

    @cached_property
    def family(self) -> tuple[int, set[int]]:
        return longest_path_family(self.g, cap=self.cap)

    @property
    def family_computed(self) -> bool:
        return "family" in self.__dict__

    @cached_property
    def gallai(self) -> int:
        out = self.g.full
        for m in self.family[1]:
            out &= m
        return out

    @cached_property
    def lpt(self) -> tuple[int, int]:
        w = min_hitting_set(self.family[1])
        return w.bit_count(), w

    def degree_at_least(self, d: int) -> int:
        return sum(1 << v for v in range(self.g.n) if self.g.degree(v) >= d)

    def alpha_without(self, removed: int) -> int:
        return independence_number(self.g, self.g.full & ~removed)

    def avoiding_witness(self, v: int, q: FiberQuery = FiberQuery(), order: int | None = None) -> list[int] | None:
        if order is None:
            order = self.family[0]
        p = path_avoiding(self.g, order, 1 << v, q)
        return list(p.verts) if p is not None else None


Verdict = tuple[bool, dict | None]


@dataclass(frozen=True)
class Theorem:
    tag: str
    statement: str
    hypothesis: Callable[[Facts, dict], bool]
    conclusion: Callable[[Facts, dict], Verdict]


def _all_gallai(f: Facts, required: int) -> Verdict:
    missing = required & ~f.gallai
    if not missing:
        return True, None
    v = (missing & -missing).bit_length() - 1
    return False, {"vertex": v, "degree": f.g.degree(v), "avoiding_path": f.avoiding_witness(v)}


def _is_free(h: Graph) -> Callable[[Facts, dict], bool]:
    return lambda f, p: is_h_free(f.g, h)


def _ce_levels(f: Facts, p: dict) -> list[int]:
    ks = [p["k"]] if p.get("k") else range(1, f.kappa + 1)
    thresh = p.get("n0")
    return [k for k in ks if f.kappa >= k and f.alpha <= k + 2 and f.g.n >= (thresh if thresh is not None else n0(k))]


def _one_sided_roots(f: Facts) -> list[int]:
    if f.g.n < 3 or f.kappa < 2:
        return []
    return [x for x in range(f.g.n) if f.alpha_without(1 << x) <= 3]


def _one_sided(f: Facts, p: dict) -> Verdict:
    top = f.degree_at_least(f.delta)
    for x in _one_sided_roots(f):
        q = FiberQuery(start=x)
        order, fam = longest_path_family(f.g, q, cap=f.cap)
        inter = f.g.full
        for m in fam:
            inter &= m
        missing = top & ~inter
        if missing:
            v = (missing & -missing).bit_length() - 1
            return False, {"x": x, "vertex": v, "avoiding_path": f.avoiding_witness(v, q, order)}
    return True, None


def _two_sided_pairs(f: Facts) -> list[tuple[int, int]]:
    if f.g.n < 3 or f.kappa < 2:
        return []
    return [(x, y) for x, y in combinations(range(f.g.n), 2) if f.alpha_without(1 << x | 1 << y) <= 2]


def _two_cliques(g: Graph, within: int) -> bool:
    comps = g.components(within)
    return len(comps) == 2 and all(g.is_clique(c) for c in comps)


def _two_sided(f: Facts, p: dict) -> Verdict:
    top = f.degree_at_least(f.delta)
    for x, y in _two_sided_pairs(f):
        if _two_cliques(f.g, f.g.full & ~(1 << x | 1 << y)):
            continue
        q = FiberQuery(start=x, end=y)
        order, fam = longest_path_family(f.g, q, cap=f.cap)
        inter = f.g.full
        for m in fam:
            inter &= m
        missing = top & ~inter
        if missing:
            v = (missing & -missing).bit_length() - 1
            return False, {"x": x, "y": y, "vertex": v, "avoiding_path": f.avoiding_witness(v, q, order)}
    return True, None


def _special_block(f: Facts, p: dict) -> Verdict:
    sb = _special_from_family(f.g, f.family[1])
    if sb:
        return True, None
    return False, {"blocks": [bits(b) for b in block_cut_tree(f.g).blocks]}


def _no_gallai_cut(f: Facts, p: dict) -> bool:
    return f.g.n >= 2 and not (block_cut_tree(f.g).cut_vertices & f.gallai)


def _hamreg(f: Facts, p: dict) -> Verdict:
    ok, _ = hamiltonian(f.g, "path")
    return (True, None) if ok else (False, {"longest_path_order": f.family[0]})


THEOREMS: dict[str, Theorem] = {
    t.tag: t
    for t in [
        Theorem("p3p1", "(P3+P1)-free: every vertex of degree >= Delta-1 is Gallai",
                _is_free(P3P1), lambda f, p: _all_gallai(f, f.degree_at_least(f.delta - 1))),
        Theorem("p2p1p1", "(P2+2P1)-free: every maximum-degree vertex is Gallai",
                _is_free(P2P1P1), lambda f, p: _all_gallai(f, f.degree_at_least(f.delta))),
        Theorem("zero-sided-k1", "1-connected, alpha <= 3: every vertex of degree >= Delta-1 is Gallai",
                lambda f, p: f.g.n >= 2 and f.kappa >= 1 and f.alpha <= 3,
                lambda f, p: _all_gallai(f, f.degree_at_least(f.delta - 1))),
        Theorem("zero-sided-k2", "2-connected, alpha <= 4: every maximum-degree vertex is Gallai",
                lambda f, p: f.g.n >= 3 and f.kappa >= 2 and f.alpha <= 4,
                lambda f, p: _all_gallai(f, f.degree_at_least(f.delta))),
        Theorem("one-sided", "2-connected, alpha(G-x) <= 3: every x-fiber holds every maximum-degree vertex",
                lambda f, p: bool(_one_sided_roots(f)), _one_sided),
        Theorem("two-sided", "2-connected, alpha(G-x-y) <= 2: every xy-fiber holds every maximum-degree "
                "vertex, or G-x-y is two disjoint cliques",
                lambda f, p: bool(_two_sided_pairs(f)), _two_sided),
        Theorem("special-block", "no Gallai cut vertex: some block is special",
                _no_gallai_cut, _special_block),
        Theorem("fixer-5p1", "alpha <= 4: a Gallai vertex exists",
                lambda f, p: f.alpha <= 4,
                lambda f, p: (True, None) if f.gallai else (False, {"family_size": len(f.family[1])})),
        Theorem("chvatal-erdos", "k-connected, alpha <= k+2, n >= k(k+2)(2k+3)+1: maximum-degree vertices are Gallai",
                lambda f, p: bool(_ce_levels(f, p)),
                lambda f, p: _all_gallai(f, f.degree_at_least(f.delta))),
        Theorem("hamreg-corollary", "k-connected regular, alpha <= k+2, n >= n0: a Hamiltonian path exists",
                lambda f, p: f.g.min_degree() == f.delta and bool(_ce_levels(f, p)), _hamreg),
    ]
}


# --- scanning --------------------------------------------------------------

@dataclass
class Violation:
    index: int
    g6: str
    witness: dict | None


@dataclass
class ScanReport:
    theorem: str
    source: str
    records: list[dict] = field(default_factory=list)
    violations: list[Violation] = field(default_factory=list)
    skipped: int = 0

    @property
    def scanned(self) -> int:
        return len(self.records)

    @property
    def hits(self) -> int:
        return sum(1 for r in self.records if self.theorem in r["verdicts"])

    @property
    def errors(self) -> int:
        return sum(1 for r in self.records if r["errors"])

    def summary(self) -> dict:
        return {
            "theorem": self.theorem,
            "source": self.source,
            "graphs": self.scanned,
            "skipped": self.skipped,
            "hypothesis_hits": self.hits,
            "violations": len(self.violations),
            "errors": self.errors,
        }


def _record(g: Graph, f: Facts, verdicts: dict, errors: list[str], lean: bool = False) -> dict:
    lpt = gallai = None
    if not errors and (f.family_computed or not lean):
        try:
            gallai = bits(f.gallai)
            lpt = f.lpt[0]
        except ResourceError as exc:
            errors.append(f"resource: {exc}")
    return {
        "g6": encode_graph6(g),
        "n": g.n,
        "alpha": f.alpha,
        "kappa": f.kappa,
        "delta": f.delta,
        "girth": "inf" if f.girth is INF else f.girth,
        "lpt": lpt,
        "gallai": gallai,
        "verdicts": verdicts,
        "errors": errors,
    }


def evaluate(g: Graph, tag: str, params: dict | None = None, cap: int = DEFAULT_CAP,
             lean: bool = False) -> tuple[dict | None, dict | None]:
    """(record, violation witness) for one graph; record is None if disconnected.

    ``verdicts`` holds the tag only when the hypothesis held.  With ``lean``
    the longest-path family (and so lpt, gallai) is computed only when the
    conclusion needed it; otherwise those fields are null.
    """
    if g.n == 0 or not g.is_connected():
        return None, None
    th = THEOREMS[tag]
    params = params or {}
    f = Facts(g, cap)
    verdicts: dict[str, bool] = {}
    errors: list[str] = []
    witness = None
    try:
        if th.hypothesis(f, params):
            ok, witness = th.conclusion(f, params)
            verdicts[tag] = ok
    except ResourceError as exc:
        errors.append(f"resource: {exc}")
    except GlptError as exc:
        errors.append(f"{type(exc).__name__}: {exc}")
    rec = _record(g, f, verdicts, errors, lean)
    return rec, witness


def _work(item: tuple[str, str, dict, int, bool]):
    g6, tag, params, cap, lean = item
    return evaluate(parse_graph6(g6), tag, params, cap, lean)


def resolve_jobs(jobs: int | None) -> int:
    env = os.environ.get("GLPT_JOBS")
    if env:
        return max(1, int(env))
    return max(1, jobs or 1)


def _as_graphs(corpus) -> Iterator[Graph]:
    if isinstance(corpus, str):
        yield from corpus_from_spec(corpus)
    else:
        yield from corpus


def _parallel_map(fn, items: Iterable, jobs: int, chunk: int = 16) -> Iterator:
    if jobs <= 1:
        for it in items:
            yield fn(it)
        return
    with mp.get_context("fork").Pool(jobs) as pool:
        # imap keeps input order; idle workers pull the next chunk.
        yield from pool.imap(fn, items, chunksize=chunk)


def scan(theorem: str, corpus, params: dict | None = None, jobs: int | None = 1,
         cap: int = DEFAULT_CAP, source: str | None = None, lean: bool = False) -> ScanReport:
    """Evaluate ``theorem`` over every connected graph of ``corpus``.

    ``corpus`` is an iterable of graphs or a corpus spec (``gen:N`` or a
    graph6 file).  Disconnected graphs are skipped and counted.
    """
    if theorem not in THEOREMS:
        raise DomainError(f"unknown theorem {theorem!r}; choose from {sorted(THEOREMS)}")
    params = dict(params or {})
    if source is None:
        source = corpus if isinstance(corpus, str) else "<graphs>"
    report = ScanReport(theorem, source)
    items = ((encode_graph6(g), theorem, params, cap, lean) for g in _as_graphs(corpus))
    for rec, witness in _parallel_map(_work, items, resolve_jobs(jobs)):
        if rec is None:
            report.skipped += 1
            continue
        report.records.append(rec)
        if rec["verdicts"].get(theorem) is False:
            report.violations.append(Violation(len(report.records) - 1, rec["g6"], witness))
            log.error("violation of %s on %s: %s", theorem, rec["g6"], witness)
    return report


# --- conjecture search -----------------------------------------------------

@dataclass(frozen=True)
class SearchHit:
    g6: str
    n: int
    alpha: int
    order: int
    family_size: int
    digest: str


def family_digest(family: Iterable[int]) -> str:
    """sha256 over the sorted vertex lists of a longest-path family."""
    h = hashlib.sha256()
    for verts in sorted(bits(m) for m in family):
        h.update((",".join(map(str, verts)) + ";").encode())
    return h.hexdigest()


def _search_one(item: tuple[str, int, int]):
    g6, alpha_max, cap = item
    g = parse_graph6(g6)
    if g.n == 0 or not g.is_connected():
        return None
    a = independence_number(g)
    if a > alpha_max:
        return None
    order, fam = longest_path_family(g, cap=cap)
    inter = g.full
    for m in fam:
        inter &= m
    if inter:
        return None
    return SearchHit(g6, g.n, a, order, len(fam), family_digest(fam))


def search_counterexample(alpha_max: int, corpus, jobs: int | None = 1, cap: int = DEFAULT_CAP) -> SearchHit | None:
    """First connected graph with alpha <= alpha_max and no Gallai vertex."""
    items = ((encode_graph6(g), alpha_max, cap) for g in _as_graphs(corpus))
    for hit in _parallel_map(_search_one, items, resolve_jobs(jobs), chunk=64):
        if hit is not None:
            return hit
    return None


# --- emission --------------------------------------------------------------

def emit_report(report: ScanReport, fmt: str = "jsonl") -> bytes:
    if fmt == "jsonl":
        return "".join(json.dumps(r) + "\n" for r in report.records).encode()
    if fmt == "summary":
        s = report.summary()
        width = max(len(k) for k in s)
        lines = [f"{k.ljust(width)}  {v}" for k, v in s.items()]
        for v in report.violations:
            lines.append(f"violation #{v.index} {v.g6} {json.dumps(v.witness)}")
        return ("\n".join(lines) + "\n").encode()
    raise DomainError(f"unknown format {fmt!r}")
