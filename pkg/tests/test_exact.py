import math
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from frugal.errors import BudgetExhaustedError
from frugal.exact import (
    exact_frugal_chromatic,
    exact_frugal_chromatic_index,
    exact_lambda,
    exact_list_frugal_decision,
    exact_rainbow_face_chromatic,
)
from frugal.generators import gen_named, gen_Tm
from frugal.graphs import build_multigraph, faces
from frugal.validate import (
    validate_face_rainbow,
    validate_frugal_edge,
    validate_frugal_vertex,
    validate_Lpq,
    validate_lists,
)
from helpers import random_multigraph, random_simple_graph


class TestVertexOracle:
    def test_c5_k1(self):
        result = exact_frugal_chromatic(gen_named("cycle(5)").graph, 1)
        assert result.optimum == 5

    def test_petersen_k1(self):
        result = exact_frugal_chromatic(gen_named("petersen").graph, 1)
        assert result.optimum == 10

    def test_star_k3(self):
        result = exact_frugal_chromatic(gen_named("star(6)").graph, 3)
        assert result.optimum == 3  # ceil(6/3) + 1

    def test_empty_graph(self):
        g = build_multigraph([], [])
        assert exact_frugal_chromatic(g, 1).optimum == 0

    def test_witness_validates(self):
        g = gen_named("petersen").graph
        result = exact_frugal_chromatic(g, 2)
        assert validate_frugal_vertex(g, 2, result.witness) is None

    def test_infeasible_when_capped(self):
        result = exact_frugal_chromatic(gen_named("cycle(5)").graph, 1, max_colours=4)
        assert result.infeasible and result.optimum is None

    def test_budget_exhaustion_flagged(self):
        g = gen_named("petersen").graph
        result = exact_frugal_chromatic(g, 2, node_budget=3)
        assert result.budget_exhausted and result.optimum is None

    @settings(max_examples=25, deadline=None)
    @given(st.integers(0, 10**6))
    def test_nonincreasing_in_k(self, seed):
        g = random_simple_graph(random.Random(seed), max_n=7)
        values = [exact_frugal_chromatic(g, k).optimum for k in (1, 2, 3)]
        assert values[0] >= values[1] >= values[2]

    @settings(max_examples=25, deadline=None)
    @given(st.integers(0, 10**6))
    def test_large_k_is_chromatic_number(self, seed):
        g = random_simple_graph(random.Random(seed), max_n=7)
        k = max(1, g.max_degree)
        assert (
            exact_frugal_chromatic(g, k).optimum
            == exact_frugal_chromatic(g, k + 2).optimum
        )

    def test_known_chromatic_numbers(self):
        assert exact_frugal_chromatic(gen_named("cycle(5)").graph, 2).optimum == 3
        assert exact_frugal_chromatic(gen_named("k4").graph, 3).optimum == 4
        assert exact_frugal_chromatic(gen_named("petersen").graph, 3).optimum == 3

    @settings(max_examples=15, deadline=None)
    @given(st.integers(0, 10**6), st.integers(1, 3))
    def test_optimality_by_exhaustion(self, seed, k):
        """No colouring with optimum-1 colours exists (independent recheck)."""
        g = random_simple_graph(random.Random(seed), max_n=6)
        if g.n == 0:
            return
        result = exact_frugal_chromatic(g, k)
        t = result.optimum
        assert validate_frugal_vertex(g, k, result.witness) is None
        assert len(set(result.witness.values())) <= t
        if t <= 1:
            return

        def brute(i, colouring):
            if i == g.n:
                return validate_frugal_vertex(g, k, colouring) is None
            v = g.vertices[i]
            for c in range(1, t):
                colouring[v] = c
                if brute(i + 1, colouring):
                    return True
            del colouring[v]
            return False

        assert not brute(0, {})


class TestEdgeOracle:
    def test_tm_family(self):
        for m in (1, 2, 3, 4):
            g = gen_Tm(m).graph
            for k in (1, 3):
                ell = (k - 1) // 2
                assert (
                    exact_frugal_chromatic_index(g, k).optimum
                    == math.ceil(3 * m / (3 * ell + 1))
                )

    def test_t4_k3(self):
        assert exact_frugal_chromatic_index(gen_Tm(4).graph, 3).optimum == 3

    def test_c5_k2_monochrome(self):
        assert exact_frugal_chromatic_index(gen_named("cycle(5)").graph, 2).optimum == 1

    def test_t2_k1(self):
        assert exact_frugal_chromatic_index(gen_Tm(2).graph, 1).optimum == 6

    def test_witness_validates(self):
        g = gen_Tm(3).graph
        result = exact_frugal_chromatic_index(g, 3)
        assert validate_frugal_edge(g, 3, result.witness) is None

    def test_no_edges(self):
        g = build_multigraph(["a"], [])
        assert exact_frugal_chromatic_index(g, 1).optimum == 0

    @settings(max_examples=20, deadline=None)
    @given(st.integers(0, 10**6), st.integers(1, 3))
    def test_bounded_by_even_theorem(self, seed, k):
        """Even k: the optimum is exactly ceil(D / k) on every multigraph."""
        g = random_multigraph(random.Random(seed), max_n=5)
        if g.m == 0:
            return
        result = exact_frugal_chromatic_index(g, 2 * k)
        assert result.optimum == math.ceil(g.max_degree / (2 * k))

    @settings(max_examples=20, deadline=None)
    @given(st.integers(0, 10**6))
    def test_odd_k_within_bounds(self, seed):
        g = random_multigraph(random.Random(seed), max_n=5)
        if g.m == 0:
            return
        for k in (1, 3):
            optimum = exact_frugal_chromatic_index(g, k).optimum
            assert math.ceil(g.max_degree / k) <= optimum
            assert optimum <= math.ceil(3 * g.max_degree / (3 * k - 1))


class TestLambdaOracle:
    def test_k2(self):
        g = build_multigraph(["u", "v"], [("e", "u", "v")])
        assert exact_lambda(g, 2, 1).optimum == 3

    def test_c5_11_equals_square_chromatic(self):
        g = gen_named("cycle(5)").graph
        assert exact_lambda(g, 1, 1).optimum == 5

    def test_p3_21(self):
        assert exact_lambda(gen_named("path(3)").graph, 2, 1).optimum == 4

    def test_witness_validates(self):
        g = gen_named("star(4)").graph
        result = exact_lambda(g, 2, 1)
        assert validate_Lpq(g, 2, 1, result.witness) is None

    @settings(max_examples=20, deadline=None)
    @given(st.integers(0, 10**6))
    def test_lambda11_is_square_chromatic(self, seed):
        g = random_simple_graph(random.Random(seed), max_n=6)
        if g.n == 0:
            return
        assert (
            exact_lambda(g, 1, 1).optimum == exact_frugal_chromatic(g, 1).optimum
        )


class TestRainbowOracle:
    def test_triangle(self):
        g = gen_named("cycle(3)").graph
        assert exact_rainbow_face_chromatic(g, [tuple(g.vertices)]).optimum == 3

    def test_c4_single_face(self):
        g = gen_named("cycle(4)").graph
        assert exact_rainbow_face_chromatic(g, [tuple(g.vertices)]).optimum == 4

    def test_plane_k4(self):
        inst = gen_named("k4")
        structure = faces(inst.graph, inst.rotation)
        sets = [tuple(dict.fromkeys(t for t, _ in w)) for w in structure.walks]
        result = exact_rainbow_face_chromatic(inst.graph, sets)
        assert result.optimum == 4
        assert validate_face_rainbow(inst.graph, sets, result.witness) is None


class TestListDecision:
    def test_k2_distinct_lists(self):
        g = build_multigraph(["u", "v"], [("e", "u", "v")])
        witness = exact_list_frugal_decision(g, 1, {"u": {1, 2}, "v": {1, 2}})
        assert witness is not None and witness["u"] != witness["v"]

    def test_k2_infeasible(self):
        g = build_multigraph(["u", "v"], [("e", "u", "v")])
        assert exact_list_frugal_decision(g, 1, {"u": {1}, "v": {1}}) is None

    def test_star_k2(self):
        g = gen_named("star(4)").graph
        lists = {v: {1, 2, 3} for v in g.vertices}
        witness = exact_list_frugal_decision(g, 2, lists)
        assert witness is not None
        assert validate_frugal_vertex(g, 2, witness) is None
        assert validate_lists(witness, lists) is None

    def test_budget_raises(self):
        g = gen_named("petersen").graph
        lists = {v: {1, 2, 3} for v in g.vertices}
        with pytest.raises(BudgetExhaustedError):
            exact_list_frugal_decision(g, 1, lists, node_budget=2)
