"""From a frugal colouring of a plane graph to a proper colouring of its square.

Each colour class C of a k-frugal colouring induces a constraint graph: two
class members are tied whenever they share a neighbour outside the class.  A
vertex with exactly two class neighbours contributes an edge; one with three
or more contributes a "special" cycle of its class neighbours in rotation
order, recorded as a set that must be rainbow (frugality caps these sets at
k members).  Colouring every class graph properly with all special sets
rainbow, on pairwise disjoint palettes, yields a colouring in which any two
vertices within distance two of each other differ.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import (
    ClassColouringBudgetExhaustedError,
    InvalidColouringError,
)
from .exact import DEFAULT_NODE_BUDGET, exact_rainbow_face_chromatic
from .graphs import MultiGraph, RotationSystem, square
from .validate import validate_frugal_vertex


@dataclass(frozen=True)
class ClassConstraintGraph:
    colour: int
    graph: MultiGraph  # on the class vertices
    special_sets: tuple  # tuples of class vertices in cyclic order, size >= 3


def build_class_constraint_graph(
    g: MultiGraph,
    rot: RotationSystem,
    colouring,
    class_colour: int,
    k: int,
) -> ClassConstraintGraph:
    """Constraint graph of one colour class of a k-frugal colouring."""
    violation = validate_frugal_vertex(g, k, colouring)
    if violation is not None:
        raise InvalidColouringError(str(violation))
    rot.validate(g)

    members = [v for v in g.vertices if colouring[v] == class_colour]
    member_set = set(members)
    pairs = set()
    edges = []
    special = []

    def add_pair(a, b):
        key = frozenset((a, b))
        if key not in pairs:
            pairs.add(key)
            edges.append((len(edges), a, b))

    # original edges inside the class (none for a proper colouring, but the
    # construction stays total on garbage inputs)
    for _, u, v in g.edges:
        if u in member_set and v in member_set:
            add_pair(u, v)

    seen_sets = set()
    for v in g.vertices:
        if v in member_set:
            continue
        ring = [
            g.other_end(e, v)
            for e in rot.order[v]
        ]
        in_class = [w for w in ring if w in member_set]
        distinct = []
        for w in in_class:  # rotation may list a parallel neighbour twice
            if w not in distinct:
                distinct.append(w)
        if len(distinct) == 2:
            add_pair(distinct[0], distinct[1])
        elif len(distinct) >= 3:
            if len(distinct) > k:
                raise InvalidColouringError(
                    f"{v!r} has {len(distinct)} neighbours in class "
                    f"{class_colour}, breaking {k}-frugality"
                )
            key = frozenset(distinct)
            if key not in seen_sets:
                seen_sets.add(key)
                special.append(tuple(distinct))
            for i, a in enumerate(distinct):
                add_pair(a, distinct[(i + 1) % len(distinct)])

    return ClassConstraintGraph(
        colour=class_colour,
        graph=MultiGraph(members, edges),
        special_sets=tuple(special),
    )


@dataclass(frozen=True)
class SquareColouringReport:
    colouring: dict
    total_colours: int
    per_class: dict  # class colour -> colours used
    class_budget: int  # the 3k/2 target per class
    combined_budget: int  # class budget times number of classes


def colour_square_via_classes(
    g: MultiGraph,
    rot: RotationSystem,
    k: int,
    frugal,
    node_budget: int = DEFAULT_NODE_BUDGET,
) -> SquareColouringReport:
    """Proper colouring of square(g) assembled from per-class rainbow colourings.

    Each class constraint graph is coloured exactly (proper plus rainbow
    special sets) on a fresh palette.  The per-class search starts from a
    ceil(3k/2) budget and widens if needed; classes needing more than the
    target are reported, not failed.
    """
    if k < 4 or k % 2:
        raise ValueError("the bridge needs even k >= 4")
    violation = validate_frugal_vertex(g, k, frugal)
    if violation is not None:
        raise InvalidColouringError(str(violation))

    class_colours = sorted(set(frugal.values()))
    budget = 3 * k // 2
    out = {}
    per_class = {}
    offset = 0
    for colour in class_colours:
        ccg = build_class_constraint_graph(g, rot, frugal, colour, k)
        cap = budget
        while True:
            result = exact_rainbow_face_chromatic(
                ccg.graph, ccg.special_sets, max_colours=cap, node_budget=node_budget
            )
            if result.budget_exhausted:
                raise ClassColouringBudgetExhaustedError(
                    f"class {colour}: search budget exhausted"
                )
            if result.optimum is not None:
                break
            cap += 1  # exceeding the target is data, not failure
        per_class[colour] = result.optimum
        for v, c in result.witness.items():
            out[v] = offset + c
        offset += result.optimum

    sq = square(g)
    for _, u, v in sq.edges:
        if out[u] == out[v]:
            raise AssertionError(
                "combined colouring is not proper on the square; this is a bug"
            )
    return SquareColouringReport(
        colouring=out,
        total_colours=offset,
        per_class=per_class,
        class_budget=budget,
        combined_budget=budget * len(class_colours),
    )
