import pytest

from cliquevec import (
    BettiTable,
    Graph,
    SimplicialComplex,
    b_from_c,
    betti_from_bvector,
    betti_from_hvector,
    clique_complex,
    clique_vector,
    full_betti_hochster,
    h_from_f,
    homological_profile,
    linear_strand_hochster,
    reduced_homology_ranks,
    vertex_connectivity,
)
from cliquevec.complexes import CapExceeded


def table_of(g, **kw):
    return full_betti_hochster(clique_complex(g), **kw)


def test_linear_strand_examples(bp12):
    assert linear_strand_hochster(Graph.path(3)) == (1, 0)
    assert linear_strand_hochster(Graph.complete(5)) == (0, 0, 0, 0)
    strand = linear_strand_hochster(bp12)
    assert strand[4] == 1  # beta_{5,6}
    assert strand[5] == 0


def test_reduced_homology_examples(bp12):
    two_points = SimplicialComplex(2, [{0}, {1}])
    assert reduced_homology_ranks(two_points) == (0, 1)
    hollow = SimplicialComplex(3, [{0, 1}, {1, 2}, {0, 2}])
    assert reduced_homology_ranks(hollow) == (0, 0, 1)
    assert reduced_homology_ranks(SimplicialComplex(0)) == (1,)
    # chordal clique complexes are contractible on each component
    dims = reduced_homology_ranks(clique_complex(bp12))
    assert all(d == 0 for d in dims)
    # boundary of the tetrahedron is a 2-sphere
    sphere = SimplicialComplex(4, [{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}])
    assert reduced_homology_ranks(sphere) == (0, 0, 0, 1)


def test_reduced_homology_cap():
    with pytest.raises(CapExceeded):
        reduced_homology_ranks(clique_complex(Graph.complete(10)), face_cap=100)


def test_hochster_table_examples(bp12):
    assert table_of(Graph.path(3)).entries == {(0, 0): 1, (1, 2): 1}
    assert table_of(Graph.complete(5)).entries == {(0, 0): 1}
    assert table_of(bp12).entries == {
        (0, 0): 1,
        (1, 2): 10,
        (2, 3): 21,
        (3, 4): 18,
        (4, 5): 7,
        (5, 6): 1,
    }


def test_hochster_non_chordal_fixture():
    # the 4-cycle: 2 missing diagonals on the strand, and the cycle class
    # itself at (2, 4), which breaks 2-linearity
    assert table_of(Graph.cycle(4)).entries == {(0, 0): 1, (1, 2): 2, (2, 4): 1}


def test_hochster_vertex_cap():
    with pytest.raises(CapExceeded):
        table_of(Graph.complete(11))
    table_of(Graph.complete(11), vertex_cap=11)


def test_hochster_parallel_matches_sequential(bp12):
    seq = table_of(bp12)
    par = table_of(bp12, jobs=2)
    assert seq.entries == par.entries


def test_strand_matches_full_table(corpus300):
    for g in corpus300[:40]:
        table = table_of(g)
        strand = linear_strand_hochster(g)
        assert tuple(table.entry(i, i + 1) for i in range(1, g.n)) == strand


def test_betti_from_hvector_examples(bp12):
    out = betti_from_hvector((1, 1, 0), 3, 2)
    assert out == (1, 1, 0, 0)
    # zero ideal: h of a full simplex
    assert betti_from_hvector((1, 0, 0, 0), 3, 3) == (1, 0, 0, 0)
    c = clique_vector(bp12)
    h = h_from_f((1, *c), 4)
    assert betti_from_hvector(h, 7, 4) == table_of(bp12).totals()


def test_betti_from_bvector_examples(bp12):
    assert betti_from_bvector((1, 2), 3, 2) == (1, 1, 0, 0)
    assert betti_from_bvector((1, 1, 1, 1), 4, 4) == (1, 0, 0, 0, 0)
    out = betti_from_bvector((1, 2, 3, 1), 7, 4)
    assert out == table_of(bp12).totals()
    assert out[5] == 1  # b_2 - 1 at homological index n - 2


def test_betti_formula_input_validation():
    with pytest.raises(ValueError):
        betti_from_hvector((1, 0), 1, 2)
    with pytest.raises(ValueError):
        betti_from_bvector((1, 2), 3, 3)


def test_route_agreement(corpus300):
    for g in corpus300[:60]:
        c = clique_vector(g)
        d = len(c)
        table = table_of(g)
        totals = table.totals()
        assert totals == betti_from_hvector(h_from_f((1, *c), d), g.n, d)
        assert totals == betti_from_bvector(b_from_c(c), g.n, d)


def test_homological_profile_examples(bp12):
    p = homological_profile(table_of(Graph.path(3)))
    assert (p.pd, p.depth, p.is_two_linear, p.kappa_from_betti) == (1, 2, True, 1)
    p = homological_profile(table_of(bp12))
    assert (p.pd, p.depth, p.is_two_linear, p.kappa_from_betti) == (5, 2, True, 1)
    assert not homological_profile(table_of(Graph.cycle(4))).is_two_linear
    # accepts a complex directly
    assert homological_profile(clique_complex(Graph.path(3))).pd == 1


def test_depth_equals_connectivity_plus_one(corpus300):
    for g in corpus300[:60]:
        p = homological_profile(table_of(g))
        assert p.is_two_linear
        assert p.depth == vertex_connectivity(g) + 1
        if not g.is_complete():
            assert p.kappa_from_betti == vertex_connectivity(g)


def test_cycles_violate_two_linearity():
    for k in range(4, 9):
        p = homological_profile(table_of(Graph.cycle(k)))
        assert not p.is_two_linear
        assert p.depth <= vertex_connectivity(Graph.cycle(k)) + 1


def test_betti_table_json():
    t = BettiTable(3, {(0, 0): 1, (1, 2): 4})
    assert t.to_json_dict() == {"n": 3, "entries": [[0, 0, "1"], [1, 2, "4"]]}
    assert t.strand() == (4, 0)
    assert t.total(1) == 4


def test_ghost_vertices_contribute_to_hochster():
    # one edge plus a ghost vertex that carries no face at all
    cx = SimplicialComplex(3, [{0, 1}])
    table = full_betti_hochster(cx)
    # I = (x2) is principal of degree 1: single Betti number at (1, 1)
    assert table.entries == {(0, 0): 1, (1, 1): 1}
