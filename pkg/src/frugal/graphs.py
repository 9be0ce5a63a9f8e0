"""Loopless multigraphs, rotation systems, and derived structural views.

``MultiGraph`` is the carrier for everything else in the package.  Vertex and
edge identifiers are opaque hashable tokens; all deterministic tie-breaking is
done through the *declared order* of vertices and edges, never by comparing
the tokens themselves, so identifiers of mixed types are fine.

Values are immutable after construction and every function here is pure, so
concurrent use from independent tasks is safe.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass

from .errors import (
    DanglingEndpointError,
    DuplicateIdError,
    InvalidRotationError,
    LoopEdgeError,
    MissingEdgeError,
    NonPlanarEmbeddingError,
)


class MultiGraph:
    """A finite loopless multigraph with ordered, validated structure."""

    __slots__ = (
        "_vertices",
        "_edges",
        "_vindex",
        "_eindex",
        "_incident",
        "_neighbours",
    )

    def __init__(self, vertices, edges):
        vs = tuple(vertices)
        es = tuple((eid, u, v) for eid, u, v in edges)

        vindex = {}
        for v in vs:
            if v in vindex:
                raise DuplicateIdError(f"duplicate vertex id {v!r}")
            vindex[v] = len(vindex)

        eindex = {}
        incident = {v: [] for v in vs}
        nbr_sets = {v: set() for v in vs}
        for eid, u, v in es:
            if eid in eindex:
                raise DuplicateIdError(f"duplicate edge id {eid!r}")
            if u == v:
                raise LoopEdgeError(f"edge {eid!r} is a loop at {u!r}")
            if u not in vindex or v not in vindex:
                raise DanglingEndpointError(
                    f"edge {eid!r} references unknown endpoint"
                )
            eindex[eid] = len(eindex)
            incident[u].append(eid)
            incident[v].append(eid)
            nbr_sets[u].add(v)
            nbr_sets[v].add(u)

        self._vertices = vs
        self._edges = es
        self._vindex = vindex
        self._eindex = eindex
        self._incident = {v: tuple(ids) for v, ids in incident.items()}
        # distinct neighbours, in declared vertex order
        self._neighbours = {
            v: tuple(sorted(s, key=vindex.__getitem__)) for v, s in nbr_sets.items()
        }

    # -- basic accessors ---------------------------------------------------

    @property
    def vertices(self):
        return self._vertices

    @property
    def edges(self):
        return self._edges

    @property
    def n(self):
        return len(self._vertices)

    @property
    def m(self):
        return len(self._edges)

    def has_vertex(self, v):
        return v in self._vindex

    def vertex_index(self, v):
        return self._vindex[v]

    def edge_index(self, eid):
        if eid not in self._eindex:
            raise MissingEdgeError(f"no edge with id {eid!r}")
        return self._eindex[eid]

    def endpoints(self, eid):
        _, u, v = self._edges[self.edge_index(eid)]
        return u, v

    def other_end(self, eid, v):
        u, w = self.endpoints(eid)
        if v == u:
            return w
        if v == w:
            return u
        raise MissingEdgeError(f"vertex {v!r} is not an endpoint of {eid!r}")

    def incident_edges(self, v):
        return self._incident[v]

    def degree(self, v):
        return len(self._incident[v])

    def degrees(self):
        return {v: len(self._incident[v]) for v in self._vertices}

    @property
    def max_degree(self):
        return max((len(ids) for ids in self._incident.values()), default=0)

    def neighbours(self, v):
        return self._neighbours[v]

    def edges_between(self, u, v):
        return tuple(e for e in self._incident[u] if self.other_end(e, u) == v)

    def has_edge(self, u, v):
        return v in self._neighbours.get(u, ())

    # -- derived graphs ----------------------------------------------------

    def simplify(self):
        """Drop parallel edges, keeping the first edge id of each pair."""
        seen = set()
        kept = []
        for eid, u, v in self._edges:
            key = frozenset((u, v))
            if key not in seen:
                seen.add(key)
                kept.append((eid, u, v))
        return MultiGraph(self._vertices, kept)

    def remove_vertex(self, v):
        if v not in self._vindex:
            raise DanglingEndpointError(f"no vertex {v!r}")
        keep = tuple(x for x in self._vertices if x != v)
        edges = [(eid, a, b) for eid, a, b in self._edges if a != v and b != v]
        return MultiGraph(keep, edges)

    def remove_edges(self, eids):
        drop = set(eids)
        for e in drop:
            self.edge_index(e)
        return MultiGraph(
            self._vertices, [t for t in self._edges if t[0] not in drop]
        )

    def spanning_subgraph(self, eids):
        """Subgraph on all vertices with exactly the given edge ids."""
        keep = set(eids)
        for e in keep:
            self.edge_index(e)
        return MultiGraph(self._vertices, [t for t in self._edges if t[0] in keep])

    def with_edge(self, eid, u, v):
        return MultiGraph(self._vertices, list(self._edges) + [(eid, u, v)])

    # -- traversal ---------------------------------------------------------

    def components(self):
        """Connected components as tuples of vertices, in vertex order."""
        seen = set()
        out = []
        for root in self._vertices:
            if root in seen:
                continue
            comp = []
            queue = deque([root])
            seen.add(root)
            while queue:
                x = queue.popleft()
                comp.append(x)
                for y in self._neighbours[x]:
                    if y not in seen:
                        seen.add(y)
                        queue.append(y)
            out.append(tuple(comp))
        return out

    def is_connected(self):
        return len(self.components()) <= 1

    def distances_from(self, source, limit=None):
        """BFS distances from ``source``; vertices beyond ``limit`` omitted."""
        dist = {source: 0}
        queue = deque([source])
        while queue:
            x = queue.popleft()
            if limit is not None and dist[x] >= limit:
                continue
            for y in self._neighbours[x]:
                if y not in dist:
                    dist[y] = dist[x] + 1
                    queue.append(y)
        return dist

    def __repr__(self):
        return f"MultiGraph(n={self.n}, m={self.m})"


def build_multigraph(vertices, edges):
    """Validate and build a :class:`MultiGraph` from ids and edge triples."""
    return MultiGraph(vertices, edges)


@dataclass(frozen=True)
class RotationSystem:
    """Cyclic order of incident edge ids around each vertex of a plane graph."""

    order: dict

    def validate(self, g: MultiGraph):
        for v in g.vertices:
            if v not in self.order:
                raise InvalidRotationError(f"no rotation at vertex {v!r}")
            ring = self.order[v]
            if len(ring) != len(set(ring)) or set(ring) != set(g.incident_edges(v)):
                raise InvalidRotationError(
                    f"rotation at {v!r} is not a permutation of its incident edges"
                )
        extra = set(self.order) - set(g.vertices)
        if extra:
            raise InvalidRotationError(f"rotation lists unknown vertices {extra!r}")


@dataclass(frozen=True)
class FaceStructure:
    """Face walks of an embedded graph; each walk is a tuple of (tail, edge) darts."""

    walks: tuple
    max_face_size: int


def faces(g: MultiGraph, rot: RotationSystem) -> FaceStructure:
    """Trace all face walks of the embedding given by ``rot``.

    Every dart (edge, direction) lies on exactly one walk.  For each connected
    component with edges the Euler count V - E + F = 2 is checked; failure
    means the rotation system does not describe a plane (genus-0) embedding.
    """
    rot.validate(g)
    pos = {
        v: {e: i for i, e in enumerate(rot.order[v])} for v in g.vertices
    }

    walks = []
    seen = set()
    for eid, u, v in g.edges:
        for tail in (u, v):
            if (tail, eid) in seen:
                continue
            walk = []
            dart = (tail, eid)
            while dart not in seen:
                seen.add(dart)
                walk.append(dart)
                t, e = dart
                head = g.other_end(e, t)
                ring = rot.order[head]
                e2 = ring[(pos[head][e] + 1) % len(ring)]
                dart = (head, e2)
            if dart != (tail, eid):
                raise InvalidRotationError("face traversal did not close")
            walks.append(tuple(walk))

    # Euler check per component (components without edges are trivially fine).
    comps = g.components()
    comp_of = {}
    for i, comp in enumerate(comps):
        for v in comp:
            comp_of[v] = i
    counts = {}
    for i, comp in enumerate(comps):
        ecount = sum(1 for eid, a, b in g.edges if comp_of[a] == i)
        counts[i] = [len(comp), ecount, 0]
    for walk in walks:
        counts[comp_of[walk[0][0]]][2] += 1
    for i, (nv, ne, nf) in counts.items():
        if ne == 0:
            continue
        if nv - ne + nf != 2:
            raise NonPlanarEmbeddingError(
                f"component {i}: V-E+F = {nv}-{ne}+{nf} != 2"
            )

    return FaceStructure(
        walks=tuple(walks),
        max_face_size=max((len(w) for w in walks), default=0),
    )


def square(g: MultiGraph) -> MultiGraph:
    """Simple graph on the same vertices joining all pairs at distance <= 2."""
    pairs = []
    seen = set()
    for u in g.vertices:
        du = g.distances_from(u, limit=2)
        iu = g.vertex_index(u)
        for w, d in du.items():
            if w == u or d > 2:
                continue
            if g.vertex_index(w) > iu:
                key = (u, w)
                if key not in seen:
                    seen.add(key)
                    pairs.append(key)
    return MultiGraph(g.vertices, [(i, u, w) for i, (u, w) in enumerate(pairs)])


def line_graph(g: MultiGraph) -> MultiGraph:
    """Simple graph on the edge ids of ``g``; adjacency = sharing an endpoint."""
    pairs = []
    seen = set()
    for v in g.vertices:
        inc = g.incident_edges(v)
        for i, e in enumerate(inc):
            for f in inc[i + 1 :]:
                key = frozenset((e, f))
                if key not in seen:
                    seen.add(key)
                    pairs.append((e, f))
    eids = tuple(t[0] for t in g.edges)
    return MultiGraph(eids, [(i, e, f) for i, (e, f) in enumerate(pairs)])


@dataclass(frozen=True)
class GraphMetrics:
    max_degree: int
    degrees: dict
    girth: float
    component_count: int


def metrics(g: MultiGraph) -> GraphMetrics:
    """Max degree, degree map, girth and component count.

    Girth of a forest is ``math.inf``; a pair of parallel edges is a cycle of
    length two.
    """
    girth = math.inf
    if any(len(g.edges_between(u, v)) >= 2 for _, u, v in g.edges):
        girth = 2
    else:
        simple = g.simplify()
        best = math.inf
        for root in simple.vertices:
            dist = {root: 0}
            parent_edge = {root: None}
            queue = deque([root])
            while queue:
                x = queue.popleft()
                if dist[x] * 2 >= best - 1:
                    continue
                for e in simple.incident_edges(x):
                    y = simple.other_end(e, x)
                    if y not in dist:
                        dist[y] = dist[x] + 1
                        parent_edge[y] = e
                        queue.append(y)
                    elif e != parent_edge[x]:
                        best = min(best, dist[x] + dist[y] + 1)
        girth = best

    return GraphMetrics(
        max_degree=g.max_degree,
        degrees=g.degrees(),
        girth=girth,
        component_count=len(g.components()),
    )


class _MergedVertex:
    """Fresh vertex token produced by an edge contraction."""

    __slots__ = ("parts",)

    def __init__(self, parts):
        self.parts = tuple(parts)

    def __hash__(self):
        return hash(("merged", self.parts))

    def __eq__(self, other):
        return isinstance(other, _MergedVertex) and self.parts == other.parts

    def __repr__(self):
        return "+".join(map(repr, self.parts))


def contract_edge_simplify(g: MultiGraph, eid):
    """Contract the edge ``eid`` and simplify around the merged vertex.

    The endpoints are replaced by one fresh vertex sitting at the earlier
    endpoint's position; loops created by the contraction are dropped and
    parallel edges at the merged vertex are collapsed to the first id.
    Returns ``(graph, merge_record)`` where the record maps both old
    endpoints to the fresh vertex.
    """
    u, v = g.endpoints(eid)
    if g.vertex_index(u) > g.vertex_index(v):
        u, v = v, u
    merged = _MergedVertex((u, v))
    while merged in g._vindex:  # repeated contractions of merged tokens
        merged = _MergedVertex(merged.parts + ("+",))

    def rename(x):
        return merged if x in (u, v) else x

    vertices = [rename(x) for x in g.vertices if x != v]
    edges = []
    seen_at_merged = set()
    for e, a, b in g.edges:
        a2, b2 = rename(a), rename(b)
        if a2 == b2:
            continue  # contracted edge(s) and loops created by the merge
        if merged in (a2, b2):
            other = b2 if a2 == merged else a2
            if other in seen_at_merged:
                continue  # keep the graph simple at the merged vertex
            seen_at_merged.add(other)
        edges.append((e, a2, b2))
    return MultiGraph(vertices, edges), {u: merged, v: merged}
