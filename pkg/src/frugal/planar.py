"""Frugal list colouring of simple planar graphs and labelling conversions.

The centrepiece is an inductive list-colouring algorithm driven by a
light-vertex lemma: every simple planar graph has a vertex whose few smallest
neighbour degrees are bounded, which lets the graph be shrunk by one vertex
(an edge contraction), coloured recursively, and extended at the removed
vertex because the forbidden colour count stays below the list size
floor((2C + 19) / k) + 6 with C = max(maximum degree, 12).
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass

from .errors import (
    ExtensionFailedError,
    ListTooSmallError,
    NoLightVertexError,
)
from .graphs import MultiGraph, contract_edge_simplify


# (case number, m, degree caps for the first few neighbours sorted ascending)
_LIGHT_CASES = (
    (1, None, ()),  # m <= 2, no caps
    (2, 3, (11,)),
    (3, 4, (7, 11)),
    (4, 5, (6, 7, 11)),
)


@dataclass(frozen=True)
class LightVertexWitness:
    vertex: object
    neighbours: tuple  # sorted by (degree, vertex order)
    case: int

    def check(self, g: MultiGraph) -> bool:
        """Re-validate the degree conditions against the graph."""
        nd = [g.degree(w) for w in self.neighbours]
        if self.case == 1:
            return len(nd) <= 2
        for case, m, caps in _LIGHT_CASES[1:]:
            if case == self.case:
                return len(nd) == m and all(
                    nd[i] <= cap for i, cap in enumerate(caps)
                )
        return False


def find_light_vertex(g: MultiGraph) -> LightVertexWitness:
    """Find a vertex matching one of the light-vertex cases.

    Preference: lowest case number, then vertex order.  Failure certifies the
    input is not a simple planar graph.
    """
    best = None
    for v in g.vertices:
        nbrs = sorted(
            g.neighbours(v), key=lambda w: (g.degree(w), g.vertex_index(w))
        )
        m = len(nbrs)
        case = None
        if m <= 2:
            case = 1
        elif m == 3 and g.degree(nbrs[0]) <= 11:
            case = 2
        elif m == 4 and g.degree(nbrs[0]) <= 7 and g.degree(nbrs[1]) <= 11:
            case = 3
        elif (
            m == 5
            and g.degree(nbrs[0]) <= 6
            and g.degree(nbrs[1]) <= 7
            and g.degree(nbrs[2]) <= 11
        ):
            case = 4
        if case is not None:
            key = (case, g.vertex_index(v))
            if best is None or key < best[0]:
                best = (key, LightVertexWitness(v, tuple(nbrs), case))
    if best is None:
        raise NoLightVertexError(
            "no light vertex: the graph is not simple planar"
        )
    return best[1]


def extend_colour_at_vertex(g: MultiGraph, partial, v, k: int, colour_list):
    """Smallest list colour that keeps the colouring proper and k-frugal at v.

    Forbidden are the colours on v's neighbours, plus every colour that some
    neighbour already sees k times among its other neighbours.
    """
    forbidden = set()
    for u in g.neighbours(v):
        if u in partial:
            forbidden.add(partial[u])
        around = [
            partial[w] for w in g.neighbours(u) if w != v and w in partial
        ]
        for colour, cnt in Counter(around).items():
            if cnt >= k:
                forbidden.add(colour)
    for colour in sorted(colour_list):
        if colour not in forbidden:
            return colour
    raise ExtensionFailedError(
        f"all {len(colour_list)} list colours are forbidden at {v!r}"
    )


def planar_required_list_size(max_degree: int, k: int) -> int:
    """List size the planar algorithm's guarantee needs."""
    c = max(max_degree, 12)
    return (2 * c + 19) // k + 6


def colour_planar_frugal(g: MultiGraph, k: int, lists) -> dict:
    """k-frugal list colouring of a simple planar graph by induction.

    Lists at least as large as ``planar_required_list_size`` are guaranteed to
    work; smaller lists are accepted and simply tried (small instances often
    succeed), with a ``ListTooSmallError`` if they run out.  An extension
    failure with large-enough lists indicates a breached precondition (for
    example a non-planar input that still had light vertices) and is surfaced.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    for v in g.vertices:
        if v not in lists or not lists[v]:
            raise ListTooSmallError(f"no non-empty colour list for {v!r}")
    if any(len(g.edges_between(u, v)) > 1 for _, u, v in g.edges):
        raise ValueError("planar colouring expects a simple graph")

    required = planar_required_list_size(g.max_degree, k)
    guaranteed = all(len(lists[v]) >= required for v in g.vertices)
    cap = max(g.max_degree, 12)

    def rec(h: MultiGraph, hlists):
        if h.n == 0:
            return {}
        if h.n == 1:
            v = h.vertices[0]
            return {v: min(hlists[v])}
        witness = find_light_vertex(h)
        v = witness.vertex
        if not witness.neighbours:
            sub = h.remove_vertex(v)
            partial = rec(sub, {u: hlists[u] for u in sub.vertices})
            partial[v] = min(hlists[v])
            return partial
        v1 = witness.neighbours[0]
        eid = h.edges_between(v, v1)[0]
        contracted, record = contract_edge_simplify(h, eid)
        merged = record[v]
        if contracted.max_degree > cap:
            raise ExtensionFailedError(
                "contraction raised the maximum degree beyond its bound; "
                "the light-vertex guarantee does not apply"
            )
        sub_lists = {u: hlists[u] for u in contracted.vertices if u != merged}
        sub_lists[merged] = hlists[v1]
        sub = rec(contracted, sub_lists)
        partial = {u: c for u, c in sub.items() if u != merged}
        partial[v1] = sub[merged]
        try:
            partial[v] = extend_colour_at_vertex(h, partial, v, k, hlists[v])
        except ExtensionFailedError:
            if guaranteed:
                raise
            raise ListTooSmallError(
                f"lists of size below the guarantee {required} ran out at {v!r}"
            ) from None
        return partial

    return rec(g, dict(lists))


def label_to_frugal(labelling, k: int) -> dict:
    """Collapse a distance-k labelling into a k-frugal colouring.

    Colour (label - 1) // k groups at most k consecutive labels together:
    adjacent vertices carry labels at least k apart so their colours differ,
    and the at-most-k-to-one collapse preserves k-frugality.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    return {v: (x - 1) // k for v, x in labelling.items()}


def greedy_L_k1(g: MultiGraph, k: int) -> dict:
    """Greedy labelling with separation k across edges and 1 at distance two.

    Vertices are labelled in BFS order from each component's first vertex,
    always taking the smallest feasible label >= 1.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    labelling = {}
    for comp in g.components():
        for v in comp:  # components() already yields BFS order
            d1 = [labelling[w] for w in g.neighbours(v) if w in labelling]
            nb = set(g.neighbours(v))
            d2 = [
                labelling[w]
                for w, d in g.distances_from(v, limit=2).items()
                if d == 2 and w not in nb and w in labelling
            ]
            x = 1
            while any(abs(x - y) < k for y in d1) or any(
                abs(x - y) < 1 for y in d2
            ):
                x += 1
            labelling[v] = x
    return labelling


_BOUND_FAMILIES = (
    "conjecture-2",
    "theorem-4",
    "corollary-8",
    "corollary-10-g7",
    "corollary-10-g6",
    "corollary-10-g5",
)


@dataclass(frozen=True)
class BoundSpec:
    family: str
    delta: int
    k: int
    girth: float | None
    value: int
    applicable: bool
    reason: str = ""


def bound_value(family: str, delta: int, k: int, girth=None) -> BoundSpec:
    """Evaluate a closed-form upper-bound family for planar frugal colouring.

    The value is always computed exactly as printed; the ``applicable`` flag
    records whether the family's hypotheses hold for these parameters (the
    conjectured family is additionally marked as such in the reason).
    """
    if family not in _BOUND_FAMILIES:
        raise ValueError(f"unknown bound family {family!r}")
    if k < 1 or delta < 0:
        raise ValueError("need k >= 1 and delta >= 0")

    applicable = True
    reason = ""
    if family == "conjecture-2":
        if k % 2 == 0:
            value = (delta - 1) // k + 3
        else:
            value = (3 * delta - 2) // (3 * k - 1) + 3
        if delta < max(2 * k, 8):
            applicable = False
            reason = f"needs maximum degree >= max(2k, 8) = {max(2 * k, 8)}"
        else:
            reason = "conjectured bound, not a guarantee"
    elif family == "theorem-4":
        value = (2 * delta + 19) // k + 6
        if delta < 12:
            applicable = False
            reason = "stated for maximum degree >= 12"
    elif family == "corollary-8":
        value = math.ceil((5 * delta + 180) / (3 * k)) + 18
    elif family == "corollary-10-g7":
        value = math.ceil((delta - 1) / k) + 2
        if girth is None or girth < 7:
            applicable = False
            reason = "needs girth >= 7"
        elif delta < 190 + 2 * k:
            applicable = False
            reason = f"needs maximum degree >= {190 + 2 * k}"
    elif family == "corollary-10-g6":
        value = math.ceil((delta + 4) / k) + 6
        if girth is None or girth < 6:
            applicable = False
            reason = "needs girth >= 6"
    else:  # corollary-10-g5
        value = math.ceil((delta + 10) / k) + 6
        if girth is None or girth < 5:
            applicable = False
            reason = "needs girth >= 5"

    return BoundSpec(
        family=family,
        delta=delta,
        k=k,
        girth=girth,
        value=value,
        applicable=applicable,
        reason=reason,
    )
