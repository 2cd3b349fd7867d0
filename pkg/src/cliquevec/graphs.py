"""Core graph type and the structural primitives everything else consumes.

Vertices are always the integers ``0..n-1``.  A :class:`Graph` is immutable
once constructed and keeps, next to the public frozenset adjacency, a
per-vertex integer bitmask.  The bitmasks are what make the subset-heavy
computations (connectivity, cut-component sums, clique search) fast enough
to brute-force at desk scale, which is the design point of this library:
every quantity is exact and small instances are enumerated rather than
approximated.
"""

from __future__ import annotations

import random
from itertools import combinations
from typing import Iterable, Iterator, Sequence

from .peo import Peo

__all__ = [
    "Graph",
    "GraphFormatError",
    "components",
    "induced_subgraph",
    "is_chordal",
    "vertex_connectivity",
    "cut_component_sum",
    "simplicial_vertices",
    "random_chordal",
    "chordal_with_connectivities",
    "parse_graph",
    "format_graph",
]


class GraphFormatError(ValueError):
    """Malformed graph (or complex) text input."""


class Graph:
    """Simple undirected graph on the vertex set ``{0, ..., n-1}``.

    No self-loops; adjacency is kept symmetric by construction.  Instances
    are immutable (and hashable), so all operations in this package are pure
    functions that are safe to call concurrently.
    """

    __slots__ = ("n", "adj", "_masks")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise ValueError("vertex count must be nonnegative")
        adj: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            adj[u].add(v)
            adj[v].add(u)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "adj", tuple(frozenset(s) for s in adj))
        object.__setattr__(
            self, "_masks", tuple(sum(1 << u for u in s) for s in adj)
        )

    def __setattr__(self, name, value):
        raise AttributeError("Graph instances are immutable")

    # -- basic accessors -------------------------------------------------

    def neighbors(self, v: int) -> frozenset[int]:
        return self.adj[v]

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def mask(self, v: int) -> int:
        return self._masks[v]

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def edges(self) -> list[tuple[int, int]]:
        """Edge list as sorted ``(u, v)`` pairs with ``u < v``."""
        return [(u, v) for u in range(self.n) for v in sorted(self.adj[u]) if u < v]

    @property
    def m(self) -> int:
        return sum(len(s) for s in self.adj) // 2

    def is_complete(self) -> bool:
        return self.m == self.n * (self.n - 1) // 2

    def __eq__(self, other) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        return hash((self.n, self.adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"

    # -- small constructors ----------------------------------------------

    @classmethod
    def path(cls, n: int) -> "Graph":
        return cls(n, [(i, i + 1) for i in range(n - 1)])

    @classmethod
    def cycle(cls, n: int) -> "Graph":
        if n < 3:
            raise ValueError("cycle needs at least 3 vertices")
        return cls(n, [(i, (i + 1) % n) for i in range(n)])

    @classmethod
    def complete(cls, n: int) -> "Graph":
        return cls(n, combinations(range(n), 2))


def masked_component_count(masks: Sequence[int], avail: int) -> int:
    """Number of connected components of the subgraph induced on the
    vertices whose bits are set in ``avail``.  Returns 0 for ``avail == 0``."""
    count = 0
    while avail:
        count += 1
        start = avail & -avail
        comp = start
        frontier = start
        while frontier:
            nxt = 0
            t = frontier
            while t:
                b = t & -t
                t ^= b
                nxt |= masks[b.bit_length() - 1]
            frontier = nxt & avail & ~comp
            comp |= frontier
        avail &= ~comp
    return count


def components(g: Graph) -> tuple[int, tuple[int, ...]]:
    """Connected components of ``g``.

    Returns ``(count, labels)`` where ``labels[v]`` is the component id of
    ``v``.  Ids are assigned in increasing order of the smallest vertex of
    each component, so the labeling is canonical.  ``n == 0`` gives
    ``(0, ())``.
    """
    labels = [-1] * g.n
    masks = g._masks
    count = 0
    for s in range(g.n):
        if labels[s] >= 0:
            continue
        comp = 1 << s
        frontier = comp
        while frontier:
            nxt = 0
            t = frontier
            while t:
                b = t & -t
                t ^= b
                nxt |= masks[b.bit_length() - 1]
            frontier = nxt & ~comp
            comp |= frontier
        t = comp
        while t:
            b = t & -t
            t ^= b
            labels[b.bit_length() - 1] = count
        count += 1
    return count, tuple(labels)


def induced_subgraph(g: Graph, keep: Iterable[int]) -> tuple[Graph, tuple[int, ...]]:
    """Subgraph induced on ``keep``, relabeled to ``0..|keep|-1``.

    Returns ``(subgraph, old_ids)`` where ``old_ids[new] = old``; the
    relabeling is order-preserving on vertex ids.
    """
    old_ids = sorted(set(keep))
    if old_ids and not (0 <= old_ids[0] and old_ids[-1] < g.n):
        raise ValueError(f"vertex ids {old_ids} out of range for n={g.n}")
    index = {old: new for new, old in enumerate(old_ids)}
    edges = [
        (index[u], index[v])
        for u in old_ids
        for v in g.adj[u]
        if u < v and v in index
    ]
    return Graph(len(old_ids), edges), tuple(old_ids)


def is_chordal(g: Graph) -> tuple[bool, Peo | None]:
    """Chordality test with a perfect elimination ordering as witness.

    Runs maximum cardinality search and verifies the resulting order; the
    graph is chordal iff the verification passes, in which case the order is
    returned as a :class:`Peo` (position 0 is eliminated first).  Ties in the
    search are broken toward smaller vertex ids, so the witness is
    deterministic.
    """
    n = g.n
    if n == 0:
        return True, Peo(())
    weight = [0] * n
    visited = [False] * n
    visit: list[int] = []
    for _ in range(n):
        v = max(
            (u for u in range(n) if not visited[u]),
            key=lambda u: (weight[u], -u),
        )
        visited[v] = True
        visit.append(v)
        for u in g.adj[v]:
            if not visited[u]:
                weight[u] += 1
    order = visit[::-1]
    pos = [0] * n
    for p, v in enumerate(order):
        pos[v] = p
    # Standard PEO check: the earliest later-neighbor must dominate the rest.
    for p, v in enumerate(order):
        later = [u for u in g.adj[v] if pos[u] > p]
        if not later:
            continue
        first = min(later, key=lambda u: pos[u])
        rest = set(later)
        rest.discard(first)
        if not rest <= g.adj[first]:
            return False, None
    return True, Peo(tuple(order))


def vertex_connectivity(g: Graph) -> int:
    """Exact vertex connectivity by brute force over vertex subsets.

    Complete graphs use the ``n - 1`` convention; disconnected graphs give 0.
    Intended for desk-scale instances (n <= ~20), where exactness matters
    more than asymptotics.
    """
    n = g.n
    if n == 0:
        raise ValueError("connectivity undefined for the empty graph")
    if n == 1:
        return 0
    masks = g._masks
    full = (1 << n) - 1
    if masked_component_count(masks, full) > 1:
        return 0
    if g.is_complete():
        return n - 1
    for k in range(1, n - 1):
        for cut in combinations(range(n), k):
            avail = full
            for v in cut:
                avail ^= 1 << v
            if masked_component_count(masks, avail) > 1:
                return k
    # Unreachable: a non-complete graph has a vertex-cut of size <= n-2.
    return n - 1


def _cut_sum_chunk(masks: Sequence[int], n: int, k: int, firsts: Sequence[int]) -> int:
    full = (1 << n) - 1
    total = 0
    for f in firsts:
        base = full ^ (1 << f)
        if k == 1:
            c = masked_component_count(masks, base)
            if c > 1:
                total += c - 1
            continue
        for rest in combinations(range(f + 1, n), k - 1):
            avail = base
            for v in rest:
                avail ^= 1 << v
            c = masked_component_count(masks, avail)
            if c > 1:
                total += c - 1
    return total


def _cut_sum_worker(args: tuple) -> int:
    n, edges, k, firsts = args
    g = Graph(n, edges)
    return _cut_sum_chunk(g._masks, n, k, firsts)


def cut_component_sum(g: Graph, k: int, jobs: int = 1) -> int:
    """Sum over all k-subsets ``Y`` of ``max(W(G - Y) - 1, 0)``.

    ``W`` is the number of connected components after deleting ``Y``; subsets
    that do not disconnect contribute 0, as does deleting every vertex.  The
    sum is exact (Python integers); with ``jobs > 1`` the enumeration is
    partitioned by the smallest element of ``Y`` and reduced in a fixed
    order, which is bit-identical to the sequential run.
    """
    n = g.n
    if not 0 <= k <= n:
        raise ValueError(f"k={k} out of range 0..{n}")
    if k == 0:
        c = masked_component_count(g._masks, (1 << n) - 1)
        return c - 1 if c > 1 else 0
    firsts = list(range(n - k + 1))
    if jobs <= 1 or len(firsts) < 2:
        return _cut_sum_chunk(g._masks, n, k, firsts)
    from concurrent.futures import ProcessPoolExecutor

    jobs = min(jobs, len(firsts))
    chunks = [firsts[i::jobs] for i in range(jobs)]
    edges = g.edges()
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        parts = list(pool.map(_cut_sum_worker, [(n, edges, k, c) for c in chunks]))
    return sum(parts)


def _is_simplicial_masked(masks: Sequence[int], v: int, active: int) -> bool:
    nb = masks[v] & active
    t = nb
    while t:
        b = t & -t
        t ^= b
        if nb & ~masks[b.bit_length() - 1] & ~b:
            return False
    return True


def simplicial_vertices(g: Graph) -> frozenset[int]:
    """Vertices whose neighborhood induces a clique."""
    active = (1 << g.n) - 1
    return frozenset(
        v for v in range(g.n) if _is_simplicial_masked(g._masks, v, active)
    )


def _cliques_up_to(masks: list[int], nverts: int, cap: int) -> list[tuple[int, ...]]:
    """All cliques (including the empty one) of size <= cap, as sorted tuples."""
    out: list[tuple[int, ...]] = [()]

    def extend(base: tuple[int, ...], cand: int):
        if len(base) == cap:
            return
        t = cand
        while t:
            b = t & -t
            t ^= b
            v = b.bit_length() - 1
            clique = base + (v,)
            out.append(clique)
            # only extend with larger ids to enumerate each clique once
            extend(clique, t & masks[v])

    extend((), (1 << nverts) - 1)
    return out


def random_chordal(n: int, attach_width: int, seed: int) -> Graph:
    """Random chordal graph: each new vertex attaches to a uniformly chosen
    clique (size <= attach_width, possibly empty) of the current graph.

    The reverse insertion order is a PEO by construction, so the result is
    always chordal.  Deterministic for a fixed ``(n, attach_width, seed)``.
    """
    if n < 1:
        raise ValueError("n must be positive")
    if not 1 <= attach_width <= n:
        raise ValueError("attach_width must be in 1..n")
    rng = random.Random(seed)
    masks = [0] * n
    edges: list[tuple[int, int]] = []
    for v in range(1, n):
        cliques = _cliques_up_to(masks, v, attach_width)
        chosen = cliques[rng.randrange(len(cliques))]
        for u in chosen:
            edges.append((u, v))
            masks[u] |= 1 << v
            masks[v] |= 1 << u
    return Graph(n, edges)


def chordal_with_connectivities(kappa: int, ktilde: int) -> Graph:
    """Chordal graph with vertex connectivity ``kappa`` and maximum
    maximal-clique intersection ``ktilde`` (requires ``kappa <= ktilde``).

    Layout: a clique on vertices ``0..2*ktilde-1`` plus three extra vertices
    ``a = 2*ktilde`` adjacent to the first ``kappa`` clique vertices,
    ``b = a+1`` adjacent to the first ``ktilde``, and ``c = a+2`` adjacent to
    the last ``ktilde``.  On this family the dominating-number bounds of the
    b-vector are tight, which makes it the standard stress fixture for the
    verification harness.
    """
    if not 1 <= kappa <= ktilde:
        raise ValueError("need 1 <= kappa <= ktilde")
    t = ktilde
    a, b, c = 2 * t, 2 * t + 1, 2 * t + 2
    edges = list(combinations(range(2 * t), 2))
    edges += [(x, a) for x in range(kappa)]
    edges += [(x, b) for x in range(t)]
    edges += [(x, c) for x in range(t, 2 * t)]
    return Graph(2 * t + 3, edges)


# -- shared text format -------------------------------------------------
#
# UTF-8 lines; '#' starts a comment; first data line "n m"; then m lines
# "u v" with 0 <= u < v < n.  Duplicate edges and self-loops are rejected.


def _data_lines(text: str) -> Iterator[str]:
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            yield line


def parse_graph(text: str) -> Graph:
    lines = list(_data_lines(text))
    if not lines:
        raise GraphFormatError("no data lines")
    head = lines[0].split()
    if len(head) != 2:
        raise GraphFormatError(f"header must be 'n m', got {lines[0]!r}")
    try:
        n, m = int(head[0]), int(head[1])
    except ValueError as exc:
        raise GraphFormatError(f"bad header {lines[0]!r}") from exc
    if n < 0 or m < 0:
        raise GraphFormatError("n and m must be nonnegative")
    if len(lines) - 1 != m:
        raise GraphFormatError(f"expected {m} edge lines, got {len(lines) - 1}")
    seen: set[tuple[int, int]] = set()
    edges = []
    for line in lines[1:]:
        parts = line.split()
        if len(parts) != 2:
            raise GraphFormatError(f"bad edge line {line!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError as exc:
            raise GraphFormatError(f"bad edge line {line!r}") from exc
        if not 0 <= u < v < n:
            raise GraphFormatError(f"edge ({u}, {v}) violates 0 <= u < v < n={n}")
        if (u, v) in seen:
            raise GraphFormatError(f"duplicate edge ({u}, {v})")
        seen.add((u, v))
        edges.append((u, v))
    return Graph(n, edges)


def format_graph(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines += [f"{u} {v}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"
