"""Self-describing JSON graph files plus a read-only DIMACS import shim.

The format carries what plain DIMACS cannot: multi-edges with stable ids,
per-vertex rotations, colour lists, and colourings.  Files round-trip
losslessly, and writing is deterministic (sorted keys) so identical inputs
give byte-identical files.

Schema (format "frugal-graph/1"):

    {
      "format": "frugal-graph/1",
      "vertices": ["a", "b"],
      "edges": [{"id": "e0", "u": "a", "v": "b"}],
      "rotation": {"a": ["e0"], "b": ["e0"]},          # optional
      "lists": {"kind": "vertex"|"edge", "map": {...}}, # optional
      "colouring": {"kind": "vertex"|"edge", "map": {...}}  # optional
    }
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .errors import ParseError
from .graphs import MultiGraph, RotationSystem, build_multigraph

FORMAT = "frugal-graph/1"


@dataclass
class GraphFile:
    graph: MultiGraph
    rotation: RotationSystem | None = None
    lists: dict | None = None
    lists_kind: str | None = None
    colouring: dict | None = None
    colouring_kind: str | None = None


def _fail(msg):
    raise ParseError(msg)


def parse_graph_data(data) -> GraphFile:
    if not isinstance(data, dict):
        _fail("top level must be an object")
    if data.get("format") != FORMAT:
        _fail(f"field 'format' must be {FORMAT!r}, got {data.get('format')!r}")
    vertices = data.get("vertices")
    if not isinstance(vertices, list) or not all(
        isinstance(v, str) for v in vertices
    ):
        _fail("field 'vertices' must be a list of strings")
    raw_edges = data.get("edges")
    if not isinstance(raw_edges, list):
        _fail("field 'edges' must be a list")
    triples = []
    for i, e in enumerate(raw_edges):
        if not isinstance(e, dict) or not {"id", "u", "v"} <= set(e):
            _fail(f"edges[{i}] must be an object with id, u, v")
        triples.append((e["id"], e["u"], e["v"]))
    graph = build_multigraph(vertices, triples)  # semantic errors raise GraphError

    rotation = None
    if "rotation" in data:
        rot = data["rotation"]
        if not isinstance(rot, dict):
            _fail("field 'rotation' must be an object")
        rotation = RotationSystem({v: tuple(ids) for v, ids in rot.items()})
        rotation.validate(graph)

    out = GraphFile(graph=graph, rotation=rotation)
    for field_name in ("lists", "colouring"):
        if field_name not in data:
            continue
        block = data[field_name]
        if (
            not isinstance(block, dict)
            or block.get("kind") not in ("vertex", "edge")
            or not isinstance(block.get("map"), dict)
        ):
            _fail(f"field {field_name!r} must be {{kind: vertex|edge, map: ...}}")
        domain = (
            set(graph.vertices)
            if block["kind"] == "vertex"
            else {t[0] for t in graph.edges}
        )
        unknown = set(block["map"]) - domain
        if unknown:
            _fail(f"{field_name} mentions unknown items {sorted(unknown)[:3]!r}")
        if field_name == "lists":
            out.lists = {
                item: frozenset(values) for item, values in block["map"].items()
            }
            out.lists_kind = block["kind"]
        else:
            out.colouring = dict(block["map"])
            out.colouring_kind = block["kind"]
    return out


def parse_graph_file(path) -> GraphFile:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            data = json.load(fh)
    except OSError as exc:
        _fail(f"cannot read {path}: {exc}")
    except json.JSONDecodeError as exc:
        _fail(f"{path}: line {exc.lineno}, column {exc.colno}: {exc.msg}")
    return parse_graph_data(data)


def graph_to_data(
    g: MultiGraph,
    rotation: RotationSystem | None = None,
    lists=None,
    lists_kind: str = "vertex",
    colouring=None,
    colouring_kind: str = "vertex",
) -> dict:
    data = {
        "format": FORMAT,
        "vertices": list(g.vertices),
        "edges": [{"id": eid, "u": u, "v": v} for eid, u, v in g.edges],
    }
    if rotation is not None:
        data["rotation"] = {v: list(rotation.order[v]) for v in g.vertices}
    if lists is not None:
        data["lists"] = {
            "kind": lists_kind,
            "map": {item: sorted(values) for item, values in lists.items()},
        }
    if colouring is not None:
        data["colouring"] = {"kind": colouring_kind, "map": dict(colouring)}
    return data


def write_graph_file(path, g, **kwargs):
    data = graph_to_data(g, **kwargs)
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(data, fh, indent=1, sort_keys=True)
        fh.write("\n")


def parse_dimacs(path) -> MultiGraph:
    """Read a simple graph in DIMACS edge format (read-only convenience)."""
    vertices = None
    edges = []
    try:
        with open(path, "r", encoding="utf-8") as fh:
            for lineno, line in enumerate(fh, start=1):
                line = line.strip()
                if not line or line.startswith("c"):
                    continue
                parts = line.split()
                if parts[0] == "p":
                    if len(parts) != 4 or parts[1] not in ("edge", "col"):
                        _fail(f"line {lineno}: bad problem line")
                    vertices = [str(i) for i in range(1, int(parts[2]) + 1)]
                elif parts[0] == "e":
                    if vertices is None:
                        _fail(f"line {lineno}: edge before problem line")
                    if len(parts) != 3:
                        _fail(f"line {lineno}: bad edge line")
                    edges.append((f"e{len(edges)}", parts[1], parts[2]))
                else:
                    _fail(f"line {lineno}: unknown record {parts[0]!r}")
    except OSError as exc:
        _fail(f"cannot read {path}: {exc}")
    if vertices is None:
        _fail("missing problem line")
    return build_multigraph(vertices, edges)
