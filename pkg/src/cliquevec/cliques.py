"""Clique enumeration and the clique-derived invariants: the clique vector,
maximal cliques, the maximum pairwise intersection of maximal cliques, and
exact dominating-clique numbers via branch-and-bound set cover.
"""

from __future__ import annotations

from itertools import combinations
from math import comb

from .graphs import Graph, is_chordal

__all__ = [
    "clique_vector",
    "cliques_of_size",
    "maximal_cliques",
    "kappa_tilde",
    "dominating_number",
]


def _monotone_degrees(g: Graph, order) -> list[int]:
    pos = {v: p for p, v in enumerate(order)}
    return [sum(1 for u in g.adj[v] if pos[u] > pos[v]) for v in range(g.n)]


def _count_cliques_general(g: Graph) -> list[int]:
    """Clique counts by size via ordered extension (works for any graph)."""
    masks = g._masks
    counts = [0] * (g.n + 1)

    def walk(size: int, cand: int):
        t = cand
        while t:
            b = t & -t
            t ^= b
            counts[size + 1] += 1
            walk(size + 1, t & masks[b.bit_length() - 1])

    walk(0, (1 << g.n) - 1)
    return counts


def clique_vector(g: Graph) -> tuple[int, ...]:
    """The clique vector ``(c_1, ..., c_d)``: ``c_i`` counts i-cliques.

    Chordal graphs are counted through a PEO (each clique is its earliest
    vertex plus a subset of that vertex's monotone neighborhood), other
    graphs by explicit enumeration; the two paths agree on chordal inputs.
    """
    if g.n == 0:
        raise ValueError("clique vector undefined for the empty graph")
    chordal, peo = is_chordal(g)
    if chordal:
        degs = _monotone_degrees(g, peo.order)
        d = 1 + max(degs)
        return tuple(
            sum(comb(ns, i - 1) for ns in degs) for i in range(1, d + 1)
        )
    counts = _count_cliques_general(g)
    d = max(i for i, c in enumerate(counts) if c)
    return tuple(counts[1 : d + 1])


def cliques_of_size(g: Graph, size: int) -> list[frozenset[int]]:
    """All cliques with exactly ``size`` vertices, in lexicographic order."""
    if size < 1:
        raise ValueError("size must be positive")
    masks = g._masks
    out: list[frozenset[int]] = []

    def walk(base: tuple[int, ...], cand: int):
        if len(base) == size:
            out.append(frozenset(base))
            return
        t = cand
        while t:
            b = t & -t
            t ^= b
            walk(base + (b.bit_length() - 1,), t & masks[b.bit_length() - 1])

    walk((), (1 << g.n) - 1)
    return out


def _bron_kerbosch(masks, n: int) -> list[int]:
    """Maximal cliques as bitmasks (Bron-Kerbosch with pivoting)."""
    out: list[int] = []

    def expand(r: int, p: int, x: int):
        if not p and not x:
            out.append(r)
            return
        px = p | x
        pivot = -1
        best = -1
        t = px
        while t:
            b = t & -t
            t ^= b
            v = b.bit_length() - 1
            score = (p & masks[v]).bit_count()
            if score > best:
                best, pivot = score, v
        cand = p & ~masks[pivot]
        while cand:
            b = cand & -cand
            cand ^= b
            v = b.bit_length() - 1
            expand(r | b, p & masks[v], x & masks[v])
            p ^= b
            x |= b

    if n:
        expand(0, (1 << n) - 1, 0)
    return out


def _mask_to_set(mask: int) -> frozenset[int]:
    out = set()
    while mask:
        b = mask & -mask
        mask ^= b
        out.add(b.bit_length() - 1)
    return frozenset(out)


def maximal_cliques(g: Graph) -> list[frozenset[int]]:
    """Inclusion-maximal cliques, sorted for determinism.

    Chordal graphs take the PEO route (the maximal members of
    ``{v} | N_sigma(v)``, at most n candidates); general graphs use
    Bron-Kerbosch with pivoting.
    """
    if g.n == 0:
        return []
    chordal, peo = is_chordal(g)
    if chordal:
        pos = peo.inverse
        cand_masks = set()
        for v in range(g.n):
            m = 1 << v
            for u in g.adj[v]:
                if pos[u] > pos[v]:
                    m |= 1 << u
            cand_masks.add(m)
        cands = sorted(cand_masks, key=lambda m: -m.bit_count())
        kept: list[int] = []
        for m in cands:
            if not any(m & ~k == 0 for k in kept):
                kept.append(m)
        cliques = [_mask_to_set(m) for m in kept]
    else:
        cliques = [_mask_to_set(m) for m in _bron_kerbosch(g._masks, g.n)]
    return sorted(cliques, key=sorted)


def kappa_tilde(g: Graph) -> int:
    """Maximum cardinality of the intersection of two distinct maximal
    cliques; 0 when there are fewer than two maximal cliques."""
    cliques = maximal_cliques(g)
    if len(cliques) < 2:
        return 0
    return max(len(a & b) for a, b in combinations(cliques, 2))


def _min_cover(universe_size: int, cover_masks: list[int]) -> tuple[int, list[int]]:
    """Exact minimum set cover by branch and bound.

    ``cover_masks[j]`` is the bitmask of universe elements candidate j
    covers; every universe element is assumed coverable.  Returns the
    optimum size and one list of chosen candidate indices.
    """
    full = (1 << universe_size) - 1
    elem_cands: list[list[int]] = [[] for _ in range(universe_size)]
    for j, m in enumerate(cover_masks):
        t = m
        while t:
            b = t & -t
            t ^= b
            elem_cands[b.bit_length() - 1].append(j)

    # Greedy upper bound.
    covered = 0
    greedy: list[int] = []
    while covered != full:
        j = max(range(len(cover_masks)), key=lambda j: (cover_masks[j] & ~covered).bit_count())
        greedy.append(j)
        covered |= cover_masks[j]
    best_size = len(greedy)
    best = list(greedy)

    def lower_bound(uncovered: int) -> int:
        # Greedy antichain of pairwise-incompatible elements: elements whose
        # candidate sets are disjoint need distinct cliques.
        chosen_union: set[int] = set()
        count = 0
        t = uncovered
        elems = []
        while t:
            b = t & -t
            t ^= b
            elems.append(b.bit_length() - 1)
        elems.sort(key=lambda e: len(elem_cands[e]))
        for e in elems:
            cands = elem_cands[e]
            if not any(j in chosen_union for j in cands):
                count += 1
                chosen_union.update(cands)
        return count

    def search(uncovered: int, chosen: list[int]):
        nonlocal best_size, best
        if not uncovered:
            if len(chosen) < best_size:
                best_size = len(chosen)
                best = list(chosen)
            return
        if len(chosen) + lower_bound(uncovered) >= best_size:
            return
        t = uncovered
        pick = -1
        fewest = None
        while t:
            b = t & -t
            t ^= b
            e = b.bit_length() - 1
            k = len(elem_cands[e])
            if fewest is None or k < fewest:
                fewest, pick = k, e
        cands = sorted(
            elem_cands[pick],
            key=lambda j: -(cover_masks[j] & uncovered).bit_count(),
        )
        for j in cands:
            chosen.append(j)
            search(uncovered & ~cover_masks[j], chosen)
            chosen.pop()

    search(full, [])
    return best_size, best


def dominating_number(
    g: Graph, i: int, strict: bool = False
) -> tuple[int, list[frozenset[int]]]:
    """Minimum number of i-cliques needed so that every maximal clique of
    order >= i contains one of them, with a witness family attaining it.

    Containment is non-strict by default (an i-clique dominates itself);
    ``strict=True`` computes the proper-containment variant for comparison
    and raises ``ValueError`` when no strict dominating family exists.
    """
    cliques = maximal_cliques(g)
    if not cliques:
        raise ValueError("graph has no cliques")
    d = max(len(c) for c in cliques)
    if not 1 <= i <= d:
        raise ValueError(f"i={i} out of range 1..{d}")
    universe = [c for c in cliques if len(c) >= i]
    if not universe:
        raise ValueError(f"no maximal clique of order >= {i}")
    candidates = cliques_of_size(g, i)
    cover_masks = []
    kept: list[frozenset[int]] = []
    for cand in candidates:
        m = 0
        for idx, target in enumerate(universe):
            if cand <= target and (not strict or cand != target):
                m |= 1 << idx
        if m:
            cover_masks.append(m)
            kept.append(cand)
    covered = 0
    for m in cover_masks:
        covered |= m
    if covered != (1 << len(universe)) - 1:
        raise ValueError("some maximal clique cannot be dominated (strict mode)")
    size, chosen = _min_cover(len(universe), cover_masks)
    return size, [kept[j] for j in chosen]
