from itertools import permutations

import pytest

from cliquevec import (
    Graph,
    GraphFormatError,
    SimplicialComplex,
    clique_complex,
    clique_vector,
    format_complex,
    graph_from_word,
    is_matroid,
    is_pure,
    is_shifted,
    maximal_cliques,
    minimal_nonfaces,
    parse_complex,
    recognize_threshold,
    restrict,
    skeleton,
)
from cliquevec.complexes import CapExceeded, is_shifted_under_some_order


def facets(cx):
    return {frozenset(f) for f in cx.facets}


def test_complex_construction_maximalizes():
    cx = SimplicialComplex(4, [{0, 1}, {1}, {0, 1, 2}, {3}])
    assert facets(cx) == {frozenset({0, 1, 2}), frozenset({3})}
    assert cx.dim == 2
    with pytest.raises(ValueError):
        SimplicialComplex(2, [{0, 5}])


def test_clique_complex_examples(bp12):
    assert facets(clique_complex(Graph.complete(3))) == {frozenset({0, 1, 2})}
    assert facets(clique_complex(Graph.path(3))) == {
        frozenset({0, 1}),
        frozenset({1, 2}),
    }
    assert facets(clique_complex(bp12)) == set(maximal_cliques(bp12))


def test_f_vector_matches_clique_vector(bp12):
    assert clique_complex(bp12).f_vector() == (1, 7, 11, 6, 1)


def test_skeleton_examples(bp12):
    one = skeleton(clique_complex(Graph.complete(4)), 1)
    assert facets(one) == {frozenset(e) for e in Graph.complete(4).edges()}
    cx = clique_complex(bp12)
    assert skeleton(cx, cx.dim) == cx
    sk = skeleton(cx, 1)
    assert facets(sk) == {frozenset(e) for e in bp12.edges()}


def test_one_skeleton_reproduces_graph(corpus_small):
    for g in corpus_small[:25]:
        if g.m == 0:
            continue
        sk = skeleton(clique_complex(g), 1)
        edges = {tuple(sorted(f)) for f in sk.facets if len(f) == 2}
        assert edges == set(g.edges())


def test_restrict_examples(bp12):
    cx = clique_complex(Graph.path(3))
    assert restrict(cx, set()).facets == ()
    assert facets(restrict(cx, {0, 2})) == {frozenset({0}), frozenset({2})}
    r = restrict(clique_complex(bp12), {0, 1, 5, 6})
    assert facets(r) == {frozenset({0, 1, 5}), frozenset({6})}


def test_minimal_nonfaces_examples():
    assert minimal_nonfaces(clique_complex(Graph.path(3))) == [frozenset({0, 2})]
    assert minimal_nonfaces(clique_complex(Graph.complete(5))) == []
    c4 = clique_complex(Graph.cycle(4))
    assert minimal_nonfaces(c4) == [frozenset({0, 2}), frozenset({1, 3})]


def test_minimal_nonfaces_are_nonedges_for_flag_complexes(corpus_small):
    for g in corpus_small[:20]:
        nonedges = {
            frozenset({u, v})
            for u in range(g.n)
            for v in range(u + 1, g.n)
            if not g.has_edge(u, v)
        }
        assert set(minimal_nonfaces(clique_complex(g))) == nonedges


def test_minimal_nonfaces_cap():
    with pytest.raises(CapExceeded):
        minimal_nonfaces(clique_complex(Graph(20, [])), vertex_cap=16)


def test_is_shifted_examples():
    simplex = SimplicialComplex(4, [range(4)])
    for order in permutations(range(4)):
        assert is_shifted(simplex, order)
    p4 = clique_complex(Graph.path(4))
    assert not is_shifted_under_some_order(p4)


def test_is_shifted_needs_permutation():
    with pytest.raises(ValueError):
        is_shifted(SimplicialComplex(3, [{0, 1}]), (0, 1))


def test_pure_matroid_examples():
    sd = clique_complex(graph_from_word("SDDSS"))
    assert is_pure(sd) and is_matroid(sd)
    mixed = clique_complex(graph_from_word("SDSDS"))
    assert not is_pure(mixed) and not is_matroid(mixed)
    kn = clique_complex(Graph.complete(5))
    assert is_pure(kn) and is_matroid(kn)
    # pure but not matroid: 2K2 (restricting to three vertices goes impure)
    two = clique_complex(Graph(4, [(0, 1), (2, 3)]))
    assert is_pure(two) and not is_matroid(two)
    p4 = clique_complex(Graph.path(4))
    assert is_pure(p4) and not is_matroid(p4)


def test_sds_family_words_are_matroids():
    for a in range(0, 4):
        for b in range(0, 4):
            w = "S" + "D" * a + "S" * b
            assert is_matroid(clique_complex(graph_from_word(w))), w


def test_matroid_chordal_instances_are_threshold(corpus_small):
    for g in corpus_small[:60]:
        cx = clique_complex(g)
        if is_matroid(cx):
            assert recognize_threshold(g) is not None


def test_non_chordal_matroid_exists():
    # C4 = K_{2,2} has a matroid clique complex but is not threshold;
    # chordality is essential in the implication above.
    c4 = clique_complex(Graph.cycle(4))
    assert is_matroid(c4)
    assert recognize_threshold(Graph.cycle(4)) is None


def test_skeleton_commutes_with_restriction(bp12):
    cx = clique_complex(bp12)
    w = {0, 1, 2, 5, 6}
    assert restrict(skeleton(cx, 1), w) == skeleton(restrict(cx, w), 1)


def test_complex_text_roundtrip(bp12):
    cx = clique_complex(bp12)
    assert parse_complex(format_complex(cx)) == cx
    with pytest.raises(GraphFormatError):
        parse_complex("")
    with pytest.raises(GraphFormatError):
        parse_complex("3\n0 x\n")
    with pytest.raises(GraphFormatError):
        parse_complex("2\n0 5\n")


def test_pure_chordal_has_constant_b_tail(corpus_small):
    from cliquevec import b_from_c, kappa_tilde

    instances = [g for g in corpus_small if is_pure(clique_complex(g))]
    instances += [
        graph_from_word("SDDSS"),
        graph_from_word("SDDDSS"),
        Graph(4, [(0, 1), (2, 3)]),  # 2K2
        Graph(6, [(0, 1), (0, 2), (1, 2), (3, 4), (3, 5), (4, 5)]),  # 2K3
    ]
    for g in instances:
        if g.is_complete():
            continue
        b = b_from_c(clique_vector(g))
        kt = kappa_tilde(g)
        tail = b[kt:]
        assert len(set(tail)) <= 1, (g.edges(), b, kt)
