"""Combinatorial shifting: rewrite a chordal graph into a threshold graph
with the same clique vector.

Fix a maximum clique ``(x_1, ..., x_d)`` and a PEO anchoring it at the end
(:func:`cliquevec.peo.special_peo`).  Edges inside the clique stay put; an
edge from an outside vertex u to its i-th monotone neighbor is rewired to
``u x_i``.  The image graph is threshold and clique-vector-equal to the
input, which is verified on every call rather than assumed.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .cliques import clique_vector, cliques_of_size, maximal_cliques
from .graphs import Graph, is_chordal
from .peo import Peo, monotone_neighbors, special_peo
from .threshold import recognize_threshold

__all__ = [
    "ShiftResult",
    "ShiftVerificationError",
    "alpha_shift",
    "clique_bijection_check",
    "BijectionReport",
]


class ShiftVerificationError(RuntimeError):
    """The shifted graph failed one of its guaranteed properties."""


@dataclass(frozen=True)
class ShiftResult:
    shifted_graph: Graph
    word: str
    edge_map: dict
    peo: Peo
    k_clique: tuple[int, ...]


def _default_max_clique(g: Graph) -> tuple[int, ...]:
    cliques = maximal_cliques(g)
    d = max(len(c) for c in cliques)
    best = min((tuple(sorted(c)) for c in cliques if len(c) == d))
    return tuple(sorted(best, reverse=True))


def alpha_shift(g: Graph, k_clique=None) -> ShiftResult:
    """Shift a chordal non-complete graph onto a threshold graph.

    ``k_clique`` must be a maximum clique, given either as an ordered
    sequence ``(x_1, ..., x_d)`` or as a set (ordered by decreasing vertex
    id); by default the lexicographically smallest maximum clique is used.
    The result is verified before returning: the image must be threshold
    and must have the input's clique vector.
    """
    if g.n < 2:
        raise ValueError("need at least two vertices")
    chordal, _ = is_chordal(g)
    if not chordal:
        raise ValueError("input graph is not chordal")
    if g.is_complete():
        raise ValueError("input graph is complete")

    if k_clique is None:
        k_order = _default_max_clique(g)
    elif isinstance(k_clique, (set, frozenset)):
        k_order = tuple(sorted(k_clique, reverse=True))
    else:
        k_order = tuple(k_clique)
    d = max(len(c) for c in maximal_cliques(g))
    if len(k_order) != d:
        raise ValueError(f"anchor clique has size {len(k_order)}, clique number is {d}")

    peo = special_peo(g, k_order)
    n = g.n
    kset = frozenset(k_order)
    # x[i] is the vertex at position n - i + 1 (1-based), i.e. k_order[i-1].
    x = [None] + [peo.order[n - i] for i in range(1, d + 1)]

    edge_map: dict = {}
    for u, v in combinations(sorted(kset), 2):
        if g.has_edge(u, v):
            edge_map[frozenset((u, v))] = frozenset((u, v))
    for u in range(n):
        if u in kset:
            continue
        for i, ui in enumerate(monotone_neighbors(g, peo, u), start=1):
            edge_map[frozenset((u, ui))] = frozenset((u, x[i]))

    if len(edge_map) != g.m:
        raise ShiftVerificationError("edge map is not total")
    images = set(edge_map.values())
    if len(images) != g.m:
        raise ShiftVerificationError("edge map is not injective")

    shifted = Graph(n, (tuple(sorted(e)) for e in images))
    word = recognize_threshold(shifted)
    if word is None:
        raise ShiftVerificationError("image graph is not threshold")
    if clique_vector(shifted) != clique_vector(g):
        raise ShiftVerificationError("clique vector not preserved")
    return ShiftResult(
        shifted_graph=shifted,
        word=word,
        edge_map=edge_map,
        peo=peo,
        k_clique=k_order,
    )


@dataclass(frozen=True)
class BijectionReport:
    ok: bool
    counts: dict
    failure: dict | None

    def to_dict(self) -> dict:
        return {"ok": self.ok, "counts": self.counts, "failure": self.failure}


def clique_bijection_check(g: Graph, result: ShiftResult) -> BijectionReport:
    """Extend the edge map to cliques of every size and verify bijectivity.

    A clique not inside the anchor maps to its earliest vertex u plus the
    anchor vertices indexed by where the remaining members sit in u's
    monotone neighborhood.  Any collision, non-clique image or count
    mismatch is reported as a finding (no exception).
    """
    peo = result.peo
    t = result.shifted_graph
    kset = frozenset(result.k_clique)
    d = len(result.k_clique)
    n = g.n
    x = [None] + [peo.order[n - i] for i in range(1, d + 1)]

    counts: dict = {}
    for size in range(1, d + 1):
        source = cliques_of_size(g, size)
        target = set(cliques_of_size(t, size))
        seen: set[frozenset[int]] = set()
        for c in source:
            if c <= kset:
                image = c
            else:
                ordered = sorted(c, key=peo.position)
                u = ordered[0]
                mono = monotone_neighbors(g, peo, u)
                index = {v: i for i, v in enumerate(mono, start=1)}
                try:
                    image = frozenset({u} | {x[index[v]] for v in ordered[1:]})
                except KeyError:
                    return BijectionReport(
                        False, counts, {"size": size, "clique": sorted(c), "reason": "not in monotone neighborhood"}
                    )
            if image in seen:
                return BijectionReport(
                    False, counts, {"size": size, "clique": sorted(c), "reason": "collision"}
                )
            if image not in target:
                return BijectionReport(
                    False, counts, {"size": size, "clique": sorted(c), "reason": "image not a clique"}
                )
            seen.add(image)
        if len(seen) != len(target):
            return BijectionReport(
                False, counts, {"size": size, "reason": "missed cliques"}
            )
        counts[size] = len(source)
    return BijectionReport(True, counts, None)
