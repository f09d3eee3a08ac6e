"""Gallai vertices, minimum longest-path transversals, special blocks."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DomainError
from .graph import Graph, bits, iter_bits
from .params import block_cut_tree
from .paths import DEFAULT_CAP, longest_path_family


@dataclass(frozen=True)
class TransversalReport:
    gallai: frozenset[int]
    lpt: int
    witness: frozenset[int]
    special_blocks: tuple[int, ...]
    order: int = 0
    family_size: int = 0


def _family(g: Graph, cap: int) -> tuple[int, set[int]]:
    if g.n == 0 or not g.is_connected():
        raise DomainError("graph must be connected")
    return longest_path_family(g, cap=cap)


def _intersection(g: Graph, fam: set[int]) -> int:
    out = g.full
    for m in fam:
        out &= m
    return out


def gallai_vertices(g: Graph, cap: int = DEFAULT_CAP) -> frozenset[int]:
    """Vertices lying on every longest path."""
    _, fam = _family(g, cap)
    return frozenset(iter_bits(_intersection(g, fam)))


# --- minimum hitting set ---------------------------------------------------

def _greedy_hitting_set(sets: list[int]) -> int:
    chosen = 0
    left = list(sets)
    while left:
        freq: dict[int, int] = {}
        for s in left:
            for v in iter_bits(s):
                freq[v] = freq.get(v, 0) + 1
        v = min(freq, key=lambda u: (-freq[u], u))
        chosen |= 1 << v
        left = [s for s in left if not s >> v & 1]
    return chosen


def _disjoint_lower_bound(sets: list[int]) -> int:
    """Number of pairwise disjoint sets found greedily (smallest first)."""
    used = 0
    count = 0
    for s in sorted(sets, key=lambda s: s.bit_count()):
        if not s & used:
            used |= s
            count += 1
    return count


def _hittable(sets: list[int], k: int) -> bool:
    """Can ``k`` elements hit every set?  Branches on the elements of the
    smallest unhit set, most frequent first."""
    if not sets:
        return True
    if k == 0 or _disjoint_lower_bound(sets) > k:
        return False
    pivot = min(sets, key=lambda s: (s.bit_count(), s))
    freq = {v: sum(1 for s in sets if s >> v & 1) for v in iter_bits(pivot)}
    for v in sorted(freq, key=lambda u: (-freq[u], u)):
        if _hittable([s for s in sets if not s >> v & 1], k - 1):
            return True
    return False


def _lex_least(sets: list[int], k: int, universe: list[int]) -> int | None:
    """Lexicographically least k-subset of ``universe`` hitting all sets."""

    def go(start: int, chosen: int, left: list[int], room: int) -> int | None:
        if not left:
            return chosen
        if room == 0 or _disjoint_lower_bound(left) > room:
            return None
        # Every remaining pick is >= universe[start]; a set whose largest
        # element lies below that can never be hit.
        limit = min(s.bit_length() - 1 for s in left)
        for i in range(start, len(universe)):
            v = universe[i]
            if v > limit:
                break
            res = go(i + 1, chosen | 1 << v, [s for s in left if not s >> v & 1], room - 1)
            if res is not None:
                return res
        return None

    return go(0, 0, sets, k)


def min_hitting_set(sets: list[int] | set[int]) -> int:
    """Lexicographically least minimum hitting set of a family of bitsets."""
    family = sorted(set(sets))
    if not family:
        return 0
    if any(s == 0 for s in family):
        raise DomainError("cannot hit an empty set")
    common = -1
    for s in family:
        common &= s
    if common:
        return common & -common
    universe_mask = 0
    for s in family:
        universe_mask |= s
    universe = bits(universe_mask)
    upper = _greedy_hitting_set(family).bit_count()
    k = 2
    while k < upper and not _hittable(family, k):
        k += 1
    res = _lex_least(family, k, universe)
    assert res is not None
    return res


def lpt_exact(g: Graph, cap: int = DEFAULT_CAP) -> tuple[int, frozenset[int]]:
    """Minimum Gallai-set size and the lexicographically least optimal set."""
    _, fam = _family(g, cap)
    w = min_hitting_set(fam)
    return w.bit_count(), frozenset(iter_bits(w))


def _special_from_family(g: Graph, fam: set[int]) -> tuple[int, ...]:
    bct = block_cut_tree(g)
    out = []
    for i, b in enumerate(bct.blocks):
        if b.bit_count() < 2:
            continue
        # A path meets a block in >= 2 vertices iff it uses one of its edges:
        # leaving a block through a cut vertex means never returning.
        if all((m & b).bit_count() >= 2 for m in fam):
            out.append(i)
    return tuple(out)


def special_blocks(g: Graph, cap: int = DEFAULT_CAP) -> tuple[int, ...]:
    """Ids (into ``block_cut_tree(g).blocks``) of blocks every longest path enters by an edge."""
    _, fam = _family(g, cap)
    return _special_from_family(g, fam)


def transversal_report(g: Graph, cap: int = DEFAULT_CAP) -> TransversalReport:
    order, fam = _family(g, cap)
    gallai = _intersection(g, fam)
    w = min_hitting_set(fam)
    return TransversalReport(
        gallai=frozenset(iter_bits(gallai)),
        lpt=w.bit_count(),
        witness=frozenset(iter_bits(w)),
        special_blocks=_special_from_family(g, fam),
        order=order,
        family_size=len(fam),
    )
