"""Frugal list colouring of outerplanar graphs by reducible-vertex induction.

Two inductions are provided.  The general one (k >= 2, maximum degree >= 3)
removes a vertex matching one of three reducibility properties and needs
lists of size floor((D - 1) / k) + 3.  The 2-connected refinement (any
k >= 1, maximum degree >= 7) removes a degree-two vertex with a small second
neighbourhood, closing its two neighbours into an edge, and needs lists of
size floor((D - 2) / k) + 3.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import (
    ListTooSmallError,
    NoLightDegree2Error,
    NotReducibleError,
)
from .graphs import MultiGraph
from .planar import extend_colour_at_vertex


@dataclass(frozen=True)
class ReducibleWitness:
    vertex: object
    property: int  # 1: degree <= 1; 2: degree-2 next to degree-2; 3: triangle case
    supports: tuple


def find_reducible_vertex(g: MultiGraph) -> ReducibleWitness:
    """Find a vertex that every outerplanar graph must contain.

    Properties, lowest number preferred, ties by vertex order:
      1. degree at most one;
      2. degree two, adjacent to another vertex of degree two;
      3. degree two with adjacent neighbours v, w where v has degree three,
         or v has degree four and its two other neighbours are adjacent.

    Failure certifies the graph is not outerplanar.
    """
    for prop in (1, 2, 3):
        for u in g.vertices:
            d = len(g.neighbours(u))
            if prop == 1 and d <= 1:
                return ReducibleWitness(u, 1, ())
            if d != 2:
                continue
            a, b = g.neighbours(u)
            if prop == 2:
                for t in (a, b):
                    if len(g.neighbours(t)) == 2:
                        return ReducibleWitness(u, 2, (t,))
            if prop == 3 and g.has_edge(a, b):
                for v, w in ((a, b), (b, a)):
                    dv = len(g.neighbours(v))
                    if dv == 3:
                        return ReducibleWitness(u, 3, (v, w))
                    if dv == 4:
                        others = [x for x in g.neighbours(v) if x not in (u, w)]
                        if len(others) == 2 and g.has_edge(others[0], others[1]):
                            return ReducibleWitness(u, 3, (v, w))
    raise NotReducibleError("no reducible vertex: the graph is not outerplanar")


def outerplanar_required_list_size(max_degree: int, k: int) -> int:
    return (max_degree - 1) // k + 3


def colour_outerplanar(g: MultiGraph, k: int, lists) -> dict:
    """k-frugal list colouring of an outerplanar graph, k >= 2, max degree >= 3."""
    if k < 2:
        raise ValueError("this induction needs k >= 2")
    if g.max_degree < 3:
        raise ValueError("this induction needs maximum degree >= 3")
    required = outerplanar_required_list_size(g.max_degree, k)
    for v in g.vertices:
        if v not in lists or len(lists[v]) < required:
            raise ListTooSmallError(
                f"vertex {v!r} needs a list of at least {required} colours"
            )

    def rec(h: MultiGraph):
        if h.n == 0:
            return {}
        witness = find_reducible_vertex(h)
        u = witness.vertex
        partial = rec(h.remove_vertex(u))
        partial[u] = extend_colour_at_vertex(h, partial, u, k, lists[u])
        return partial

    return rec(g)


def is_two_connected(g: MultiGraph) -> bool:
    """Connected, at least three vertices, and no cut vertex."""
    if g.n < 3 or not g.is_connected():
        return False
    return all(g.remove_vertex(v).is_connected() for v in g.vertices)


def find_light_degree2(g: MultiGraph, second_cap: int):
    """Degree-two vertex with at most ``second_cap`` vertices at distance two."""
    for u in g.vertices:
        if len(g.neighbours(u)) != 2:
            continue
        nb = set(g.neighbours(u))
        second = [
            w
            for w, d in g.distances_from(u, limit=2).items()
            if d == 2 and w not in nb
        ]
        if len(second) <= second_cap:
            return u
    raise NoLightDegree2Error(
        f"no degree-two vertex with at most {second_cap} second neighbours"
    )


def twoconnected_required_list_size(max_degree: int, k: int) -> int:
    return (max_degree - 2) // k + 3


def colour_outerplanar_2connected(g: MultiGraph, k: int, lists) -> dict:
    """k-frugal list colouring of a 2-connected outerplanar graph, max degree >= 7.

    The induction removes a light degree-two vertex u with neighbours v, w and
    recurses on G - u with the edge vw added when absent (this is what keeps
    the extension safe for k = 1).  Whether that auxiliary graph keeps the
    required structure is re-checked by searching for the next light vertex
    rather than assumed; a loud error means the hypothesis broke.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    if g.max_degree < 7:
        raise ValueError("this refinement needs maximum degree >= 7")
    if not is_two_connected(g):
        raise ValueError("this refinement needs a 2-connected graph")
    required = twoconnected_required_list_size(g.max_degree, k)
    for v in g.vertices:
        if v not in lists or len(lists[v]) < required:
            raise ListTooSmallError(
                f"vertex {v!r} needs a list of at least {required} colours"
            )
    cap = g.max_degree - 2
    fresh = [0]

    def rec(h: MultiGraph):
        if h.n <= 2:
            partial = {}
            for v in h.vertices:
                partial[v] = extend_colour_at_vertex(h, partial, v, k, lists[v])
            return partial
        u = find_light_degree2(h, cap)
        v, w = h.neighbours(u)
        reduced = h.remove_vertex(u)
        if not reduced.has_edge(v, w):
            fresh[0] += 1
            reduced = reduced.with_edge(("aux", fresh[0]), v, w)
        partial = rec(reduced)
        partial[u] = extend_colour_at_vertex(h, partial, u, k, lists[u])
        return partial

    return rec(g)
