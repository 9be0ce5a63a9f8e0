import json
from pathlib import Path

import pytest

from frugal.errors import LoopEdgeError, ParseError
from frugal.generators import gen_Gm, gen_named
from frugal.graphio import (
    graph_to_data,
    parse_dimacs,
    parse_graph_data,
    parse_graph_file,
    write_graph_file,
)
from frugal.graphs import faces

DATA = Path(__file__).parent / "data"


class TestRoundTrip:
    def test_triangle(self, tmp_path):
        inst = gen_named("cycle(3)")
        path = tmp_path / "t.json"
        write_graph_file(path, inst.graph, rotation=inst.rotation)
        gf = parse_graph_file(path)
        assert gf.graph.vertices == inst.graph.vertices
        assert gf.graph.edges == inst.graph.edges
        assert gf.rotation.order == {
            v: tuple(inst.rotation.order[v]) for v in inst.graph.vertices
        }

    def test_gm_round_trip_identical(self, tmp_path):
        inst = gen_Gm(4)
        p1 = tmp_path / "a.json"
        p2 = tmp_path / "b.json"
        write_graph_file(p1, inst.graph, rotation=inst.rotation)
        gf = parse_graph_file(p1)
        write_graph_file(p2, gf.graph, rotation=gf.rotation)
        assert p1.read_bytes() == p2.read_bytes()

    def test_lists_and_colouring(self, tmp_path):
        g = gen_named("path(3)").graph
        lists = {v: frozenset({1, 2, 3}) for v in g.vertices}
        colouring = {"v0": 1, "v1": 2, "v2": 1}
        path = tmp_path / "c.json"
        write_graph_file(
            path, g, lists=lists, lists_kind="vertex",
            colouring=colouring, colouring_kind="vertex",
        )
        gf = parse_graph_file(path)
        assert gf.lists == lists
        assert gf.colouring == colouring
        assert gf.colouring_kind == "vertex"


class TestParseErrors:
    def test_loop_edge_delegates(self):
        data = {
            "format": "frugal-graph/1",
            "vertices": ["a"],
            "edges": [{"id": "e", "u": "a", "v": "a"}],
        }
        with pytest.raises(LoopEdgeError):
            parse_graph_data(data)

    def test_bad_format_marker(self):
        with pytest.raises(ParseError):
            parse_graph_data({"format": "nope", "vertices": [], "edges": []})

    def test_bad_json_reports_line(self, tmp_path):
        path = tmp_path / "bad.json"
        path.write_text('{"format": "frugal-graph/1",\n  broken')
        with pytest.raises(ParseError) as err:
            parse_graph_file(path)
        assert "line" in str(err.value)

    def test_unknown_list_item(self):
        data = {
            "format": "frugal-graph/1",
            "vertices": ["a"],
            "edges": [],
            "lists": {"kind": "vertex", "map": {"zz": [1]}},
        }
        with pytest.raises(ParseError):
            parse_graph_data(data)

    def test_missing_file(self):
        with pytest.raises(ParseError):
            parse_graph_file("/nonexistent/nowhere.json")


class TestCuratedFiles:
    def test_grid_parses_and_is_plane(self):
        gf = parse_graph_file(DATA / "grid_5x4.json")
        assert gf.graph.n == 20
        structure = faces(gf.graph, gf.rotation)
        assert structure.max_face_size >= 4

    def test_wheel(self):
        gf = parse_graph_file(DATA / "wheel_13.json")
        assert gf.graph.max_degree == 13
        faces(gf.graph, gf.rotation)

    def test_stacked_triangulation(self):
        gf = parse_graph_file(DATA / "stacked_triangulation.json")
        assert gf.graph.n == 20 and gf.graph.max_degree == 12


class TestDimacs:
    def test_triangle(self):
        g = parse_dimacs(DATA / "triangle.col")
        assert g.n == 3 and g.m == 3

    def test_malformed(self, tmp_path):
        path = tmp_path / "bad.col"
        path.write_text("e 1 2\n")
        with pytest.raises(ParseError):
            parse_dimacs(path)
