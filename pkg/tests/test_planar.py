import random
from collections import Counter

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from frugal.errors import ExtensionFailedError, NoLightVertexError
from frugal.exact import exact_lambda
from frugal.generators import gen_Gm, gen_named
from frugal.graphs import build_multigraph
from frugal.planar import (
    bound_value,
    colour_planar_frugal,
    extend_colour_at_vertex,
    find_light_vertex,
    greedy_L_k1,
    label_to_frugal,
    planar_required_list_size,
)
from frugal.validate import (
    validate_frugal_vertex,
    validate_Lpq,
    validate_lists,
)
from helpers import random_simple_graph


class TestLightVertex:
    def test_k4(self):
        w = find_light_vertex(gen_named("k4").graph)
        assert w.case == 2 and len(w.neighbours) == 3

    def test_star_leaf(self):
        w = find_light_vertex(gen_named("star(9)").graph)
        assert w.case == 1 and w.vertex != "c"

    def test_icosahedron_case_four(self):
        g = gen_named("icosahedron").graph
        w = find_light_vertex(g)
        assert w.case == 4
        assert w.check(g)

    def test_witness_degrees_sorted(self):
        g = gen_Gm(3).graph
        w = find_light_vertex(g)
        degs = [g.degree(v) for v in w.neighbours]
        assert degs == sorted(degs)

    def test_dense_bipartite_has_none(self):
        # K_{12,12} has minimum degree 12 and every vertex has 12 nbrs, so no
        # case applies; the failure certifies non-planarity.
        left = [f"a{i}" for i in range(12)]
        right = [f"b{i}" for i in range(12)]
        es = [
            (f"e{i}_{j}", left[i], right[j])
            for i in range(12)
            for j in range(12)
        ]
        g = build_multigraph(left + right, es)
        with pytest.raises(NoLightVertexError):
            find_light_vertex(g)


class TestExtend:
    def test_simple_extension(self):
        g = gen_named("path(3)").graph  # v1 adjacent to v0, v2
        partial = {"v0": 1, "v2": 2}
        assert extend_colour_at_vertex(g, partial, "v1", 2, {1, 2, 3}) == 3

    def test_frugality_blocks_colour(self):
        # u's two other neighbours both have colour 5 and k = 2
        g = build_multigraph(
            ["v", "u", "w1", "w2"],
            [("a", "v", "u"), ("b", "u", "w1"), ("c", "u", "w2")],
        )
        partial = {"u": 1, "w1": 5, "w2": 5}
        assert extend_colour_at_vertex(g, partial, "v", 2, {5, 6}) == 6

    def test_extension_failure(self):
        g = gen_named("path(2)").graph
        with pytest.raises(ExtensionFailedError):
            extend_colour_at_vertex(g, {"v1": 1}, "v0", 1, {1})

    @settings(max_examples=50, deadline=None)
    @given(st.integers(0, 10**6), st.integers(1, 3))
    def test_matches_bruteforce_forbidden_set(self, seed, k):
        """Starting from a valid partial colouring, the extension rule must
        agree exactly with whole-colouring re-validation over every colour."""
        from frugal.exact import exact_frugal_chromatic

        rng = random.Random(seed)
        g = random_simple_graph(rng, max_n=8)
        if g.n < 2:
            return
        full = exact_frugal_chromatic(g, k).witness
        v = g.vertices[rng.randrange(g.n)]
        partial = {u: c for u, c in full.items() if u != v}
        lst = frozenset(range(1, 8))

        forbidden = set()
        for colour in lst:
            trial = dict(partial)
            trial[v] = colour
            if validate_frugal_vertex(g, k, trial) is not None:
                forbidden.add(colour)
        try:
            got = extend_colour_at_vertex(g, partial, v, k, lst)
        except ExtensionFailedError:
            got = None
        allowed = sorted(set(lst) - forbidden)
        assert got == (allowed[0] if allowed else None)

    def test_forbidden_count_bound(self):
        # |forbidden| <= m + sum(floor((d(v_i)-1)/k)) for coloured nbrs
        for seed in range(40):
            rng = random.Random(seed)
            g = random_simple_graph(rng, max_n=8)
            if g.n < 2:
                continue
            v = g.vertices[0]
            partial = {u: rng.randint(1, 3) for u in g.vertices if u != v}
            nbrs = g.neighbours(v)
            k = 2
            forbidden = set(partial[u] for u in nbrs)
            for u in nbrs:
                around = Counter(
                    partial[w] for w in g.neighbours(u) if w != v
                )
                forbidden |= {c for c, n in around.items() if n >= k}
            bound = len(nbrs) + sum(
                (g.degree(u) - 1) // k for u in nbrs
            )
            assert len(forbidden) <= bound


class TestColourPlanar:
    def test_k4_small_lists_accepted(self):
        g = gen_named("k4").graph
        lists = {v: frozenset(range(1, 10)) for v in g.vertices}
        c = colour_planar_frugal(g, 2, lists)
        assert validate_frugal_vertex(g, 2, c) is None
        assert validate_lists(c, lists) is None

    def test_single_vertex(self):
        g = build_multigraph(["v"], [])
        assert colour_planar_frugal(g, 3, {"v": {7}}) == {"v": 7}

    def test_g4_full_lists(self):
        g = gen_Gm(4).graph
        size = planar_required_list_size(g.max_degree, 2)
        assert size == 27
        lists = {v: frozenset(range(1, size + 1)) for v in g.vertices}
        c = colour_planar_frugal(g, 2, lists)
        assert validate_frugal_vertex(g, 2, c) is None
        assert validate_lists(c, lists) is None

    def test_required_size_formula(self):
        assert planar_required_list_size(12, 1) == 49
        assert planar_required_list_size(8, 2) == 27  # C = 12 floor applies
        assert planar_required_list_size(20, 3) == 25

    @pytest.mark.parametrize("m", [2, 3, 5])
    @pytest.mark.parametrize("k", [1, 2, 3])
    def test_gm_family(self, m, k):
        g = gen_Gm(m).graph
        size = planar_required_list_size(g.max_degree, k)
        lists = {v: frozenset(range(1, size + 1)) for v in g.vertices}
        c = colour_planar_frugal(g, k, lists)
        assert validate_frugal_vertex(g, k, c) is None
        assert validate_lists(c, lists) is None
        assert len(set(c.values())) <= size

    def test_distinct_lists(self):
        g = gen_named("k4").graph
        size = planar_required_list_size(g.max_degree, 2)
        lists = {
            v: frozenset(range(10 * i + 1, 10 * i + size + 1))
            for i, v in enumerate(g.vertices)
        }
        c = colour_planar_frugal(g, 2, lists)
        assert validate_frugal_vertex(g, 2, c) is None
        assert validate_lists(c, lists) is None


class TestLabelConversion:
    def test_example_pair(self):
        assert label_to_frugal({"u": 1, "v": 4}, 3) == {"u": 0, "v": 1}

    def test_k1_is_shifted_identity(self):
        lab = {"a": 3, "b": 7}
        assert label_to_frugal(lab, 1) == {"a": 2, "b": 6}

    def test_c5_optimal_labelling_converts(self):
        g = gen_named("cycle(5)").graph
        result = exact_lambda(g, 2, 1)
        c = label_to_frugal(result.witness, 2)
        assert validate_frugal_vertex(g, 2, c) is None

    @settings(max_examples=30, deadline=None)
    @given(st.integers(0, 10**6), st.integers(1, 4))
    def test_colour_count_bound(self, seed, k):
        g = random_simple_graph(random.Random(seed), max_n=7)
        if g.n == 0:
            return
        lab = greedy_L_k1(g, k)
        span = max(lab.values())
        c = label_to_frugal(lab, k)
        assert validate_frugal_vertex(g, k, c) is None
        assert len(set(c.values())) <= -(-span // k)


class TestGreedyLabelling:
    def test_k2_k3(self):
        g = build_multigraph(["u", "v"], [("e", "u", "v")])
        assert greedy_L_k1(g, 3) == {"u": 1, "v": 4}

    def test_isolated_all_one(self):
        g = build_multigraph(["a", "b", "c"], [])
        assert greedy_L_k1(g, 2) == {"a": 1, "b": 1, "c": 1}

    def test_c5_k1_five_labels(self):
        g = gen_named("cycle(5)").graph
        lab = greedy_L_k1(g, 1)
        assert validate_Lpq(g, 1, 1, lab) is None
        assert len(set(lab.values())) == 5

    @settings(max_examples=30, deadline=None)
    @given(st.integers(0, 10**6), st.integers(1, 4))
    def test_always_valid(self, seed, k):
        g = random_simple_graph(random.Random(seed), max_n=7)
        if g.n == 0:
            return
        lab = greedy_L_k1(g, k)
        assert validate_Lpq(g, k, 1, lab) is None


class TestBounds:
    def test_conjectured_even(self):
        assert bound_value("conjecture-2", 10, 2).value == 7

    def test_conjectured_odd(self):
        assert bound_value("conjecture-2", 10, 3).value == 6

    def test_girth7(self):
        spec = bound_value("corollary-10-g7", 200, 5, girth=7)
        assert spec.value == 42 and spec.applicable

    def test_girth7_inapplicable_below_degree(self):
        spec = bound_value("corollary-10-g7", 100, 5, girth=7)
        assert spec.value == 22 and not spec.applicable

    def test_applicability_flags(self):
        assert not bound_value("conjecture-2", 6, 2).applicable
        assert bound_value("conjecture-2", 8, 2).applicable
        assert not bound_value("theorem-4", 10, 1).applicable
        assert bound_value("theorem-4", 12, 1).applicable
        assert bound_value("corollary-8", 5, 1).applicable
        assert not bound_value("corollary-10-g6", 10, 1, girth=5).applicable
        assert bound_value("corollary-10-g5", 10, 1, girth=5).applicable

    def test_general_planar_formula(self):
        assert bound_value("theorem-4", 12, 1).value == 49
        assert bound_value("corollary-8", 12, 2).value == 58

    def test_unknown_family(self):
        with pytest.raises(ValueError):
            bound_value("folklore", 5, 1)
