"""Exact optima for small instances via backtracking with admissible bounds.

All searches are deterministic: items are processed by descending degree
(ties by declared order), colours ascending, and colour symmetry is broken by
allowing a fresh colour only one past the largest colour used so far (so the
first item always gets colour 1).  A shared node budget makes exhaustion a
visible outcome instead of a silent lie.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import BudgetExhaustedError
from .graphs import MultiGraph

DEFAULT_NODE_BUDGET = 10**7


@dataclass(frozen=True)
class ExactResult:
    optimum: int | None
    witness: dict | None
    nodes_explored: int
    budget_exhausted: bool = False

    @property
    def infeasible(self) -> bool:
        """True when the whole colour range was exhausted without a solution."""
        return self.optimum is None and not self.budget_exhausted


class _Budget(Exception):
    pass


class _Counter:
    __slots__ = ("nodes", "limit")

    def __init__(self, limit):
        self.nodes = 0
        self.limit = limit

    def tick(self):
        self.nodes += 1
        if self.nodes > self.limit:
            raise _Budget


def _vertex_order(g: MultiGraph):
    simple_deg = {v: len(g.neighbours(v)) for v in g.vertices}
    return sorted(g.vertices, key=lambda v: (-simple_deg[v], g.vertex_index(v)))


def _greedy_clique_in_square(g: MultiGraph):
    """Greedy clique in the distance-<=2 graph; a sound lower bound for k=1."""
    reach = {v: set(g.distances_from(v, limit=2)) - {v} for v in g.vertices}
    order = sorted(g.vertices, key=lambda v: (-len(reach[v]), g.vertex_index(v)))
    clique = []
    for v in order:
        if all(v in reach[u] for u in clique):
            clique.append(v)
    return len(clique)


def exact_frugal_chromatic(
    g: MultiGraph,
    k: int,
    max_colours: int | None = None,
    node_budget: int = DEFAULT_NODE_BUDGET,
) -> ExactResult:
    """Minimum colours of a k-frugal vertex colouring, with witness."""
    if k < 1:
        raise ValueError("k must be >= 1")
    if g.n == 0:
        return ExactResult(0, {}, 0)
    cap = g.n if max_colours is None else max_colours

    order = _vertex_order(g)
    pos = {v: i for i, v in enumerate(order)}
    adj = [
        [pos[w] for w in g.neighbours(v)] for v in order
    ]
    n = len(order)

    lb = 1
    if g.m > 0:
        lb = max(
            2,
            max(math.ceil(len(g.neighbours(v)) / k) + 1 for v in g.vertices),
        )
        if k == 1:
            lb = max(lb, _greedy_clique_in_square(g))
    if lb > cap:
        return ExactResult(None, None, 0)

    counter = _Counter(node_budget)
    colour = [0] * n

    def search(t):
        # cnt[v][c] = coloured neighbours of v carrying colour c
        cnt = [[0] * (t + 1) for _ in range(n)]

        def rec(i, used):
            if i == n:
                return True
            v = i
            limit = min(t, used + 1)
            for c in range(1, limit + 1):
                counter.tick()
                if cnt[v][c] != 0:
                    continue
                if any(cnt[w][c] >= k for w in adj[v]):
                    continue
                colour[v] = c
                for w in adj[v]:
                    cnt[w][c] += 1
                if rec(i + 1, max(used, c)):
                    return True
                for w in adj[v]:
                    cnt[w][c] -= 1
                colour[v] = 0
            return False

        return rec(0, 0)

    try:
        for t in range(lb, cap + 1):
            if search(t):
                witness = {order[i]: colour[i] for i in range(n)}
                return ExactResult(t, witness, counter.nodes)
        return ExactResult(None, None, counter.nodes)
    except _Budget:
        return ExactResult(None, None, counter.nodes, budget_exhausted=True)


def exact_frugal_chromatic_index(
    g: MultiGraph,
    k: int,
    max_colours: int | None = None,
    node_budget: int = DEFAULT_NODE_BUDGET,
) -> ExactResult:
    """Minimum colours of a k-frugal edge colouring, with witness.

    Properness is not required.  Parallel edges are interchangeable, so the
    search also insists that colours are non-decreasing along each parallel
    class, which prunes heavily on multigraphs.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    if g.m == 0:
        return ExactResult(0, {}, 0)
    cap = g.m if max_colours is None else max_colours

    deg = g.degrees()

    def ekey(t):
        eid, u, v = t
        pair = tuple(sorted((g.vertex_index(u), g.vertex_index(v))))
        return (-(deg[u] + deg[v]), pair, g.edge_index(eid))

    order = sorted(g.edges, key=ekey)
    vidx = {v: i for i, v in enumerate(g.vertices)}
    ends = [(vidx[u], vidx[v]) for _, u, v in order]
    same_pair_as_prev = [False] * len(order)
    for i in range(1, len(order)):
        same_pair_as_prev[i] = (
            frozenset(order[i][1:]) == frozenset(order[i - 1][1:])
        )
    mcount = len(order)

    lb = max(1, math.ceil(g.max_degree / k))
    if lb > cap:
        return ExactResult(None, None, 0)

    counter = _Counter(node_budget)
    colour = [0] * mcount

    def search(t):
        inc = [[0] * (t + 1) for _ in range(g.n)]

        def rec(i, used):
            if i == mcount:
                return True
            u, v = ends[i]
            low = colour[i - 1] if i > 0 and same_pair_as_prev[i] else 1
            limit = min(t, used + 1)
            for c in range(low, limit + 1):
                counter.tick()
                if inc[u][c] >= k or inc[v][c] >= k:
                    continue
                colour[i] = c
                inc[u][c] += 1
                inc[v][c] += 1
                if rec(i + 1, max(used, c)):
                    return True
                inc[u][c] -= 1
                inc[v][c] -= 1
                colour[i] = 0
            return False

        return rec(0, 0)

    try:
        for t in range(lb, cap + 1):
            if search(t):
                witness = {order[i][0]: colour[i] for i in range(mcount)}
                return ExactResult(t, witness, counter.nodes)
        return ExactResult(None, None, counter.nodes)
    except _Budget:
        return ExactResult(None, None, counter.nodes, budget_exhausted=True)


def _greedy_span(g: MultiGraph, p: int, q: int):
    """Greedy labelling span; a sound upper bound for the search window."""
    lab = {}
    for v in g.vertices:
        d1 = set(g.neighbours(v))
        d2 = set(g.distances_from(v, limit=2)) - d1 - {v}
        x = 1
        while any(abs(x - lab[w]) < p for w in d1 if w in lab) or any(
            abs(x - lab[w]) < q for w in d2 if w in lab
        ):
            x += 1
        lab[v] = x
    return max(lab.values(), default=1)


def exact_lambda(
    g: MultiGraph,
    p: int,
    q: int,
    max_label: int | None = None,
    node_budget: int = DEFAULT_NODE_BUDGET,
) -> ExactResult:
    """Smallest t admitting a labelling from 1..t with the (p, q) separations."""
    if p < 0 or q < 0:
        raise ValueError("p and q must be >= 0")
    if g.n == 0:
        return ExactResult(0, {}, 0)
    cap = _greedy_span(g, p, q) if max_label is None else max_label

    order = _vertex_order(g)
    pos = {v: i for i, v in enumerate(order)}
    d1 = []
    d2 = []
    for v in order:
        nb = set(g.neighbours(v))
        two = set(g.distances_from(v, limit=2)) - nb - {v}
        d1.append([pos[w] for w in nb])
        d2.append([pos[w] for w in two])
    n = len(order)

    lb = 1
    if any(d1[i] for i in range(n)):
        lb = max(lb, p + 1)
    if any(d2[i] for i in range(n)):
        lb = max(lb, q + 1)
    if lb > cap:
        return ExactResult(None, None, 0)

    counter = _Counter(node_budget)
    label = [0] * n

    def search(t):
        def rec(i):
            if i == n:
                return True
            for x in range(1, t + 1):
                counter.tick()
                ok = all(label[w] == 0 or abs(x - label[w]) >= p for w in d1[i]) and all(
                    label[w] == 0 or abs(x - label[w]) >= q for w in d2[i]
                )
                if not ok:
                    continue
                label[i] = x
                if rec(i + 1):
                    return True
                label[i] = 0
            return False

        return rec(0)

    try:
        for t in range(lb, cap + 1):
            if search(t):
                witness = {order[i]: label[i] for i in range(n)}
                return ExactResult(t, witness, counter.nodes)
        return ExactResult(None, None, counter.nodes)
    except _Budget:
        return ExactResult(None, None, counter.nodes, budget_exhausted=True)


def exact_rainbow_face_chromatic(
    g: MultiGraph,
    constraint_sets,
    max_colours: int | None = None,
    node_budget: int = DEFAULT_NODE_BUDGET,
) -> ExactResult:
    """Minimum colours for a proper colouring with every given set rainbow."""
    if g.n == 0:
        return ExactResult(0, {}, 0)
    cap = g.n if max_colours is None else max_colours

    order = _vertex_order(g)
    pos = {v: i for i, v in enumerate(order)}
    adj = [[pos[w] for w in g.neighbours(v)] for v in order]
    groups = [tuple(pos[v] for v in group) for group in constraint_sets]
    member_of = [[] for _ in order]
    for gi, group in enumerate(groups):
        for i in group:
            member_of[i].append(gi)
    n = len(order)

    lb = max(
        [1]
        + [len(set(group)) for group in groups]
        + ([2] if g.m > 0 else [])
    )
    if lb > cap:
        return ExactResult(None, None, 0)

    counter = _Counter(node_budget)
    colour = [0] * n

    def search(t):
        in_group = [[0] * (t + 1) for _ in groups]
        nbr = [[0] * (t + 1) for _ in range(n)]

        def rec(i, used):
            if i == n:
                return True
            limit = min(t, used + 1)
            for c in range(1, limit + 1):
                counter.tick()
                if nbr[i][c] != 0:
                    continue
                if any(in_group[gi][c] for gi in member_of[i]):
                    continue
                colour[i] = c
                for w in adj[i]:
                    nbr[w][c] += 1
                for gi in member_of[i]:
                    in_group[gi][c] += 1
                if rec(i + 1, max(used, c)):
                    return True
                for w in adj[i]:
                    nbr[w][c] -= 1
                for gi in member_of[i]:
                    in_group[gi][c] -= 1
                colour[i] = 0
            return False

        return rec(0, 0)

    try:
        for t in range(lb, cap + 1):
            if search(t):
                witness = {order[i]: colour[i] for i in range(n)}
                return ExactResult(t, witness, counter.nodes)
        return ExactResult(None, None, counter.nodes)
    except _Budget:
        return ExactResult(None, None, counter.nodes, budget_exhausted=True)


def exact_list_frugal_decision(
    g: MultiGraph,
    k: int,
    lists,
    node_budget: int = DEFAULT_NODE_BUDGET,
) -> dict | None:
    """A list-respecting k-frugal vertex colouring, or None if none exists.

    The search is exhaustive, so None is a proof of infeasibility; running
    out of budget raises ``BudgetExhaustedError`` instead of guessing.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    for v in g.vertices:
        if v not in lists or not lists[v]:
            raise ValueError(f"no non-empty list for vertex {v!r}")

    order = _vertex_order(g)
    pos = {v: i for i, v in enumerate(order)}
    adj = [[pos[w] for w in g.neighbours(v)] for v in order]
    palette = sorted(set().union(*(set(lists[v]) for v in g.vertices)))
    cidx = {c: i for i, c in enumerate(palette)}
    choices = [sorted(cidx[c] for c in lists[v]) for v in order]
    n = len(order)

    counter = _Counter(node_budget)
    colour = [-1] * n
    cnt = [[0] * len(palette) for _ in range(n)]

    def rec(i):
        if i == n:
            return True
        for c in choices[i]:
            counter.tick()
            if cnt[i][c] != 0:
                continue
            if any(cnt[w][c] >= k for w in adj[i]):
                continue
            colour[i] = c
            for w in adj[i]:
                cnt[w][c] += 1
            if rec(i + 1):
                return True
            for w in adj[i]:
                cnt[w][c] -= 1
            colour[i] = -1
        return False

    try:
        if rec(0):
            return {order[i]: palette[colour[i]] for i in range(n)}
        return None
    except _Budget:
        raise BudgetExhaustedError(
            f"list decision exceeded {node_budget} nodes"
        ) from None
