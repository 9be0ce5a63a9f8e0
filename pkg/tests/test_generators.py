import math

import pytest

from frugal.exact import exact_frugal_chromatic
from frugal.generators import (
    gen_Gm,
    gen_named,
    gen_random_maximal_outerplanar,
    gen_random_multigraph,
    gen_Tm,
    gm_counting_lower_bound,
)
from frugal.graphs import faces, metrics
from frugal.outerplanar import find_reducible_vertex


class TestGm:
    @pytest.mark.parametrize("m", [2, 3, 4, 6, 8])
    def test_structure(self, m):
        inst = gen_Gm(m)
        g = inst.graph
        assert g.n == 3 * m + 2
        assert g.degree("x") == g.degree("y") == g.degree("z") == 2 * m
        assert g.max_degree == 2 * m

    def test_m4_counts(self):
        g = gen_Gm(4).graph
        assert g.n == 14 and g.max_degree == 8

    def test_m2_counts(self):
        g = gen_Gm(2).graph
        assert g.n == 8 and g.max_degree == 4

    def test_degenerate_rejected(self):
        with pytest.raises(ValueError):
            gen_Gm(1)

    @pytest.mark.parametrize("m", [2, 3, 4, 6])
    def test_embedding_is_plane(self, m):
        inst = gen_Gm(m)
        structure = faces(inst.graph, inst.rotation)  # would raise if not plane
        assert sum(len(w) for w in structure.walks) == 2 * inst.graph.m

    def test_counting_lower_bound_matches_formula(self):
        # floor((D-1)/k) + 3 for even k
        assert gm_counting_lower_bound(2, 2) == 4
        assert gm_counting_lower_bound(4, 2) == 6

    def test_lower_bound_certified_against_oracle(self):
        g = gen_Gm(2).graph
        assert exact_frugal_chromatic(g, 2).optimum >= gm_counting_lower_bound(2, 2)


class TestTm:
    def test_t1_is_triangle(self):
        g = gen_Tm(1).graph
        assert g.n == 3 and g.m == 3 and g.max_degree == 2

    def test_t4(self):
        g = gen_Tm(4).graph
        assert g.m == 12 and g.max_degree == 8

    def test_t2_regular(self):
        g = gen_Tm(2).graph
        assert all(g.degree(v) == 4 for v in g.vertices)


class TestNamed:
    def test_petersen(self):
        stats = metrics(gen_named("petersen").graph)
        assert stats.max_degree == 3 and stats.girth == 5

    def test_cycle(self):
        g = gen_named("cycle(5)").graph
        assert g.n == 5 and g.m == 5

    def test_star(self):
        g = gen_named("star(6)").graph
        assert g.n == 7 and g.max_degree == 6

    def test_icosahedron(self):
        stats = metrics(gen_named("icosahedron").graph)
        g = gen_named("icosahedron").graph
        assert g.n == 12 and g.m == 30
        assert all(g.degree(v) == 5 for v in g.vertices)
        assert stats.girth == 3

    def test_unknown_rejected(self):
        with pytest.raises(ValueError):
            gen_named("moebius")


class TestMaximalOuterplanar:
    def test_triangle(self):
        g = gen_random_maximal_outerplanar(3, 0).graph
        assert g.n == 3 and g.m == 3

    def test_edge_count(self):
        for n, seed in ((10, 7), (25, 1), (60, 5)):
            g = gen_random_maximal_outerplanar(n, seed).graph
            assert g.m == 2 * n - 3

    def test_reducible_vertex_exists(self):
        g = gen_random_maximal_outerplanar(10, 7).graph
        find_reducible_vertex(g)  # must not raise

    def test_determinism(self):
        a = gen_random_maximal_outerplanar(12, 3).graph
        b = gen_random_maximal_outerplanar(12, 3).graph
        assert a.edges == b.edges

    def test_outer_cycle_recorded(self):
        inst = gen_random_maximal_outerplanar(8, 2)
        assert len(inst.params["outer_cycle"]) == 8

    def test_plane_embedding(self):
        inst = gen_random_maximal_outerplanar(15, 9)
        faces(inst.graph, inst.rotation)


class TestRandomMultigraph:
    def test_caps_honoured(self):
        for seed in range(100):
            inst = gen_random_multigraph(8, 5, 2, seed)
            g = inst.graph
            assert g.max_degree <= 5
            for _, u, v in g.edges:
                assert len(g.edges_between(u, v)) <= 2
            assert all(u != v for _, u, v in g.edges)

    def test_single_vertex_edgeless(self):
        assert gen_random_multigraph(1, 5, 2, 0).graph.m == 0

    def test_determinism(self):
        a = gen_random_multigraph(15, 6, 3, 11).graph
        b = gen_random_multigraph(15, 6, 3, 11).graph
        assert a.edges == b.edges
