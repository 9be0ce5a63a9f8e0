"""Total, independent checkers for colourings and labellings.

Validators never raise on bad colourings: a violation is returned as a value
carrying a witness that can be re-checked against the input.  ``None`` means
the assignment is valid.  Non-total assignments are caller errors and raise
``ValueError``.

Scan order is deterministic: adjacency violations are reported in edge order
first, then per-vertex violations in vertex order with colours ascending, so
repeated runs produce identical diagnostics.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field

from .graphs import MultiGraph


@dataclass(frozen=True)
class Violation:
    kind: str  # adjacency | frugality | separation | face-rainbow | list-membership
    vertices: tuple = ()
    edges: tuple = ()
    colours: tuple = ()
    message: str = ""

    def __str__(self):
        return f"{self.kind}: {self.message}"


def _require_total(domain, assignment, what):
    missing = [x for x in domain if x not in assignment]
    if missing:
        raise ValueError(f"{what} is not total: missing {missing[:3]!r}...")


def validate_frugal_vertex(g: MultiGraph, k: int, colouring) -> Violation | None:
    """Check a proper vertex colouring where no colour meets any vertex's
    neighbourhood more than k times (neighbours counted as distinct vertices)."""
    if k < 1:
        raise ValueError("k must be >= 1")
    _require_total(g.vertices, colouring, "vertex colouring")
    for eid, u, v in g.edges:
        if colouring[u] == colouring[v]:
            return Violation(
                kind="adjacency",
                vertices=(u, v),
                edges=(eid,),
                colours=(colouring[u],),
                message=f"adjacent vertices {u!r},{v!r} share colour {colouring[u]}",
            )
    for v in g.vertices:
        counts = Counter(colouring[w] for w in g.neighbours(v))
        for colour in sorted(counts):
            if counts[colour] > k:
                offenders = tuple(
                    w for w in g.neighbours(v) if colouring[w] == colour
                )
                return Violation(
                    kind="frugality",
                    vertices=(v,) + offenders,
                    colours=(colour,),
                    message=(
                        f"colour {colour} appears {counts[colour]} > {k} times "
                        f"in the neighbourhood of {v!r}"
                    ),
                )
    return None


def validate_frugal_edge(g: MultiGraph, k: int, edge_colouring) -> Violation | None:
    """Check a (possibly improper) edge colouring where no colour has more
    than k incidences at any vertex (parallel edges count separately)."""
    if k < 1:
        raise ValueError("k must be >= 1")
    _require_total((t[0] for t in g.edges), edge_colouring, "edge colouring")
    for v in g.vertices:
        counts = Counter(edge_colouring[e] for e in g.incident_edges(v))
        for colour in sorted(counts):
            if counts[colour] > k:
                offenders = tuple(
                    e for e in g.incident_edges(v) if edge_colouring[e] == colour
                )
                return Violation(
                    kind="frugality",
                    vertices=(v,),
                    edges=offenders,
                    colours=(colour,),
                    message=(
                        f"colour {colour} is on {counts[colour]} > {k} edges "
                        f"at vertex {v!r}"
                    ),
                )
    return None


def validate_Lpq(g: MultiGraph, p: int, q: int, labelling) -> Violation | None:
    """Check distance-1 separation >= p and distance-2 separation >= q."""
    if p < 0 or q < 0:
        raise ValueError("p and q must be >= 0")
    _require_total(g.vertices, labelling, "labelling")
    for eid, u, v in g.edges:
        if abs(labelling[u] - labelling[v]) < p:
            return Violation(
                kind="separation",
                vertices=(u, v),
                edges=(eid,),
                colours=(labelling[u], labelling[v]),
                message=(
                    f"adjacent {u!r},{v!r} have labels {labelling[u]},{labelling[v]} "
                    f"closer than {p}"
                ),
            )
    for u in g.vertices:
        iu = g.vertex_index(u)
        dist = g.distances_from(u, limit=2)
        for w in g.vertices:
            if g.vertex_index(w) <= iu:
                continue
            if dist.get(w) == 2 and abs(labelling[u] - labelling[w]) < q:
                return Violation(
                    kind="separation",
                    vertices=(u, w),
                    colours=(labelling[u], labelling[w]),
                    message=(
                        f"distance-two pair {u!r},{w!r} has labels "
                        f"{labelling[u]},{labelling[w]} closer than {q}"
                    ),
                )
    return None


def labelling_span(labelling) -> int:
    """Span of a labelling under the labels-start-at-one convention."""
    return max(labelling.values(), default=0)


def validate_face_rainbow(
    g: MultiGraph, constraint_sets, colouring
) -> Violation | None:
    """Check properness on g plus all-distinct colours inside each given set."""
    _require_total(g.vertices, colouring, "vertex colouring")
    for eid, u, v in g.edges:
        if colouring[u] == colouring[v]:
            return Violation(
                kind="adjacency",
                vertices=(u, v),
                edges=(eid,),
                colours=(colouring[u],),
                message=f"adjacent vertices {u!r},{v!r} share colour {colouring[u]}",
            )
    for idx, group in enumerate(constraint_sets):
        members = tuple(group)
        for v in members:
            if not g.has_vertex(v):
                raise ValueError(f"constraint set {idx} mentions unknown vertex {v!r}")
        counts = Counter(colouring[v] for v in members)
        for colour in sorted(counts):
            if counts[colour] > 1:
                offenders = tuple(v for v in members if colouring[v] == colour)
                return Violation(
                    kind="face-rainbow",
                    vertices=offenders,
                    colours=(colour,),
                    message=(
                        f"constraint set {idx} repeats colour {colour} "
                        f"on {offenders!r}"
                    ),
                )
    return None


def validate_lists(assignment, lists) -> Violation | None:
    """Check that every assigned colour belongs to its item's list."""
    missing = [x for x in assignment if x not in lists]
    if missing:
        raise ValueError(f"lists do not cover assigned items {missing[:3]!r}")
    for item in assignment:
        if assignment[item] not in lists[item]:
            return Violation(
                kind="list-membership",
                vertices=(item,),
                colours=(assignment[item],),
                message=(
                    f"item {item!r} got colour {assignment[item]} outside its "
                    f"list {sorted(lists[item])!r}"
                ),
            )
    return None
