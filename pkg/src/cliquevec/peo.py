"""Perfect elimination orderings, including the clique-anchored ordering
that drives the combinatorial shift.

Positions are 0-based throughout: ``order[0]`` is eliminated first and
``order[-1]`` last.  The anchored ordering places a chosen maximal clique
``(x_1, ..., x_k)`` on the last ``k`` positions with ``x_1`` last, and fills
the remaining positions by repeatedly extracting the batch of simplicial
vertices of one maximal clique of the residual graph.

The finer structural conditions (b)-(d) checked by
:func:`verify_special_peo` do not hold on every chordal instance; see the
module test-suite for a 6-vertex counterexample where no anchored ordering
can satisfy them all.  For this reason construction and verification are
separate: :func:`special_peo` guarantees the PEO property and the position
condition (a); the rest is reported as data.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Sequence

__all__ = [
    "Peo",
    "is_valid_peo",
    "special_peo",
    "monotone_neighbors",
    "s_of_clique",
    "verify_special_peo",
    "ConditionResult",
    "SpecialPeoReport",
]


@dataclass(frozen=True)
class Peo:
    """An elimination ordering: ``order[p]`` is the vertex at position p."""

    order: tuple[int, ...]
    inverse: tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        n = len(self.order)
        if sorted(self.order) != list(range(n)):
            raise ValueError("order must be a permutation of 0..n-1")
        inv = [0] * n
        for p, v in enumerate(self.order):
            inv[v] = p
        object.__setattr__(self, "inverse", tuple(inv))

    def position(self, v: int) -> int:
        return self.inverse[v]

    def __len__(self) -> int:
        return len(self.order)


def is_valid_peo(g, order: Sequence[int]) -> bool:
    """True iff every vertex is simplicial among the vertices after it."""
    n = g.n
    if sorted(order) != list(range(n)):
        return False
    pos = {v: p for p, v in enumerate(order)}
    for p, v in enumerate(order):
        later = [u for u in g.adj[v] if pos[u] > p]
        for a, b in combinations(later, 2):
            if not g.has_edge(a, b):
                return False
    return True


def _normalize_clique_order(g, k_clique) -> tuple[int, ...]:
    if isinstance(k_clique, (set, frozenset)):
        return tuple(sorted(k_clique, reverse=True))
    return tuple(k_clique)


def _check_maximal_clique(g, members: Sequence[int]) -> None:
    mset = set(members)
    if len(mset) != len(members):
        raise ValueError("clique has repeated vertices")
    for u, v in combinations(members, 2):
        if not g.has_edge(u, v):
            raise ValueError(f"{sorted(mset)} is not a clique: {u} !~ {v}")
    common = (1 << g.n) - 1
    for v in members:
        common &= g.mask(v)
    for v in members:
        common &= ~(1 << v)
    if common:
        extra = (common & -common).bit_length() - 1
        raise ValueError(f"{sorted(mset)} is not maximal: vertex {extra} extends it")


def special_peo(g, k_clique) -> Peo:
    """PEO anchoring the maximal clique ``k_clique`` at the end.

    ``k_clique`` may be an ordered sequence ``(x_1, ..., x_k)`` or a set (in
    which case the default order is decreasing vertex id).  The returned
    ordering puts ``x_i`` at position ``n - i`` (0-based), and before that
    eliminates batches of simplicial vertices, one maximal clique of the
    residual graph at a time, smallest vertex id first.

    Raises ``ValueError`` if ``g`` is not chordal or complete, or if
    ``k_clique`` is not a maximal clique.
    """
    from .graphs import _is_simplicial_masked, is_chordal  # local: avoids cycle

    k_order = _normalize_clique_order(g, k_clique)
    chordal, _ = is_chordal(g)
    if not chordal:
        raise ValueError("graph is not chordal")
    if g.is_complete():
        raise ValueError("anchored PEO is only defined for non-complete graphs")
    _check_maximal_clique(g, k_order)

    n = g.n
    masks = g._masks
    k_mask = 0
    for v in k_order:
        k_mask |= 1 << v
    active = (1 << n) - 1
    order: list[int] = []
    while active != k_mask:
        simplicial = [
            v
            for v in range(n)
            if (active >> v) & 1
            and not (k_mask >> v) & 1
            and _is_simplicial_masked(masks, v, active)
        ]
        if not simplicial:
            raise RuntimeError("no simplicial vertex outside the anchor clique")
        u = simplicial[0]
        clique_mask = (masks[u] & active) | (1 << u)
        batch = [
            v
            for v in simplicial
            if (clique_mask >> v) & 1
        ]
        order.extend(batch)
        for v in batch:
            active &= ~(1 << v)
    order.extend(reversed(k_order))

    peo = Peo(tuple(order))
    # Construction invariants; a failure here is a bug, not a data finding.
    if not is_valid_peo(g, peo.order):
        raise RuntimeError("constructed order is not a PEO")
    for i, x in enumerate(k_order, start=1):
        if peo.order[n - i] != x:
            raise RuntimeError("anchor clique not at its pinned positions")
    return peo


def monotone_neighbors(g, peo: Peo, v: int) -> tuple[int, ...]:
    """Neighbors of ``v`` placed after it, in increasing position order."""
    p = peo.position(v)
    return tuple(
        sorted((u for u in g.adj[v] if peo.position(u) > p), key=peo.position)
    )


def s_of_clique(g, peo: Peo, clique: Iterable[int]) -> frozenset[int]:
    """Members of a maximal clique whose monotone neighborhood leaves it."""
    members = tuple(clique)
    _check_maximal_clique(g, members)
    cset = set(members)
    return frozenset(
        v for v in members if any(u not in cset for u in monotone_neighbors(g, peo, v))
    )


@dataclass(frozen=True)
class ConditionResult:
    ok: bool
    witness: object = None

    def to_dict(self) -> dict:
        return {"ok": self.ok, "witness": self.witness}


@dataclass(frozen=True)
class SpecialPeoReport:
    peo_property: ConditionResult
    cond_a: ConditionResult
    cond_b: ConditionResult
    cond_c: ConditionResult
    cond_d: ConditionResult

    @property
    def all_ok(self) -> bool:
        return all(
            c.ok
            for c in (self.peo_property, self.cond_a, self.cond_b, self.cond_c, self.cond_d)
        )

    def to_dict(self) -> dict:
        return {
            "peo_property": self.peo_property.to_dict(),
            "a": self.cond_a.to_dict(),
            "b": self.cond_b.to_dict(),
            "c": self.cond_c.to_dict(),
            "d": self.cond_d.to_dict(),
            "all_ok": self.all_ok,
        }


def verify_special_peo(g, k_clique, peo: Peo) -> SpecialPeoReport:
    """Check the PEO property plus the four anchored-ordering conditions.

    (a) the anchor clique occupies the last positions, ``x_i`` at ``n - i``;
    (b) within each maximal clique C, all of ``C - s(C)`` precedes ``s(C)``;
    (c) for ``|s(C)| < i <= |C|`` exactly one vertex of ``C - s(C)`` has
        monotone degree ``i - 1``;
    (d) for intersecting maximal cliques C, C', one of the two one-sided
        precedence conditions holds.

    Failures are data, not errors: the report carries the first
    counterexample found per condition.
    """
    from .cliques import maximal_cliques  # local: avoids cycle

    n = g.n
    k_order = _normalize_clique_order(g, k_clique)

    peo_ok = is_valid_peo(g, peo.order)
    peo_res = ConditionResult(peo_ok, None if peo_ok else "not a PEO")

    a_ok, a_wit = True, None
    for i, x in enumerate(k_order, start=1):
        if n - i < 0 or peo.order[n - i] != x:
            a_ok, a_wit = False, {"x_index": i, "vertex": x}
            break
    a_res = ConditionResult(a_ok, a_wit)

    cliques = maximal_cliques(g)
    s_sets = {}
    for c in cliques:
        cset = set(c)
        s_sets[c] = frozenset(
            v
            for v in c
            if any(u not in cset for u in monotone_neighbors(g, peo, v))
        )

    b_ok, b_wit = True, None
    for c in cliques:
        s = s_sets[c]
        if not s or len(s) == len(c):
            continue
        max_out = max(peo.position(v) for v in c - s)
        min_in = min(peo.position(v) for v in s)
        if max_out > min_in:
            b_ok, b_wit = False, {
                "clique": sorted(c),
                "s": sorted(s),
                "late_non_s_vertex": peo.order[max_out],
                "early_s_vertex": peo.order[min_in],
            }
            break
    b_res = ConditionResult(b_ok, b_wit)

    c_ok, c_wit = True, None
    for c in cliques:
        s = s_sets[c]
        degrees = [len(monotone_neighbors(g, peo, v)) for v in c - s]
        for i in range(len(s) + 1, len(c) + 1):
            hits = degrees.count(i - 1)
            if hits != 1:
                c_ok, c_wit = False, {
                    "clique": sorted(c),
                    "i": i,
                    "vertices_with_degree": hits,
                }
                break
        if not c_ok:
            break
    c_res = ConditionResult(c_ok, c_wit)

    d_ok, d_wit = True, None
    for c1, c2 in combinations(cliques, 2):
        inter = c1 & c2
        if not inter:
            continue
        min_in = min(peo.position(v) for v in inter)
        side1 = c1 - c2
        side2 = c2 - c1
        first = not side1 or max(peo.position(v) for v in side1) < min_in
        second = not side2 or max(peo.position(v) for v in side2) < min_in
        if not (first or second):
            d_ok, d_wit = False, {
                "clique_1": sorted(c1),
                "clique_2": sorted(c2),
                "intersection": sorted(inter),
            }
            break
    d_res = ConditionResult(d_ok, d_wit)

    return SpecialPeoReport(peo_res, a_res, b_res, c_res, d_res)
