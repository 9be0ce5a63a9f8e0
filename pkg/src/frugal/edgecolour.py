"""Constructive frugal edge colouring of multigraphs.

The machinery: regularize a multigraph by joining it to a mirror copy, orient
it along Euler tours so in-degree equals out-degree, lift the orientation to
a regular bipartite multigraph, split that into perfect matchings, and spend
the matchings.  For even k the matchings grouped k/2 at a time give a
k-frugal edge colouring with exactly ceil(D/k) colours (each matching pulls
back to a subgraph of maximum degree two, one incidence per copy of the
vertex); the list version runs a kernel-based list edge colouring inside each
group.  For odd k the graph is split into an even-frugality part and a
residue of 2-factors coloured properly with two or three colours each; the
two parts share one palette, which is what keeps the total at
ceil(3D/(3k-1)).

Only the colours of original edges matter: everything added by
regularization is discarded on pull-back, and the odd-k pipeline exploits
that by steering padding into cheap factors.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass

from .errors import (
    EvenKError,
    ListTooSmallError,
    NotBipartiteError,
    NotEvenRegularError,
    NotRegularError,
    OddDegreeError,
    OddKError,
)
from .graphs import MultiGraph


@dataclass(frozen=True)
class Orientation:
    """Direction of every edge: edge id -> (tail, head)."""

    arcs: dict


@dataclass(frozen=True)
class BipartiteLift:
    """Bipartite double of an orientation.

    Vertices are ("L", v) and ("R", v); the arc (a, b) becomes an edge from
    ("L", a) to ("R", b) carrying the same edge id, recorded in
    ``edge_to_base``.
    """

    graph: MultiGraph
    edge_to_base: dict


def regularize_to_degree(g: MultiGraph, target: int):
    """Embed g into a target-regular loopless multigraph.

    A disjoint mirror copy is added and each vertex is joined to its mirror
    by exactly (target - degree) parallel edges.  Returns the regular graph
    and the (identity) embedding of g's edge ids.
    """
    if target < g.max_degree:
        raise ValueError("target degree below the maximum degree")
    mirror = {v: ("mir", v) for v in g.vertices}
    vertices = list(g.vertices) + [mirror[v] for v in g.vertices]
    edges = list(g.edges)
    for eid, u, v in g.edges:
        edges.append((("mir", eid), mirror[u], mirror[v]))
    for v in g.vertices:
        for i in range(target - g.degree(v)):
            edges.append((("pad", v, i), v, mirror[v]))
    return MultiGraph(vertices, edges), {eid: eid for eid, _, _ in g.edges}


def euler_orientation(g: MultiGraph) -> Orientation:
    """Orient every edge along closed trails so in-degree = out-degree."""
    if any(g.degree(v) % 2 for v in g.vertices):
        raise OddDegreeError("every vertex must have even degree")
    arcs = {}
    used = set()
    ptr = {v: 0 for v in g.vertices}

    def next_edge(v):
        inc = g.incident_edges(v)
        while ptr[v] < len(inc) and inc[ptr[v]] in used:
            ptr[v] += 1
        return inc[ptr[v]] if ptr[v] < len(inc) else None

    for root in g.vertices:
        if next_edge(root) is None:
            continue
        stack = [root]
        while stack:
            v = stack[-1]
            e = next_edge(v)
            if e is None:
                stack.pop()
                continue
            used.add(e)
            w = g.other_end(e, v)
            arcs[e] = (v, w)
            stack.append(w)
    return Orientation(arcs)


def bipartite_lift(g: MultiGraph):
    """Euler-orient an all-even-degrees multigraph and lift it to a bipartite one."""
    orientation = euler_orientation(g)
    vertices = [("L", v) for v in g.vertices] + [("R", v) for v in g.vertices]
    edges = [
        (eid, ("L", a), ("R", b)) for eid, (a, b) in orientation.arcs.items()
    ]
    # keep edge order deterministic: follow g's edge order
    order = {t[0]: i for i, t in enumerate(g.edges)}
    edges.sort(key=lambda t: order[t[0]])
    lift = BipartiteLift(
        graph=MultiGraph(vertices, edges),
        edge_to_base={eid: eid for eid, _, _ in edges},
    )
    return orientation, lift


def bipartition(g: MultiGraph):
    """Two-colour the vertices; raises NotBipartiteError on an odd cycle."""
    side = {}
    for root in g.vertices:
        if root in side:
            continue
        side[root] = 0
        queue = deque([root])
        while queue:
            x = queue.popleft()
            for y in g.neighbours(x):
                if y not in side:
                    side[y] = 1 - side[x]
                    queue.append(y)
                elif side[y] == side[x]:
                    raise NotBipartiteError(f"odd cycle through {x!r} and {y!r}")
    left = tuple(v for v in g.vertices if side[v] == 0)
    right = tuple(v for v in g.vertices if side[v] == 1)
    return left, right


def _hopcroft_karp(left, adj):
    """Maximum matching of a simple bipartite graph; returns left -> right."""
    INF = float("inf")
    pair_l = {}
    pair_r = {}
    dist = {}

    def bfs():
        queue = deque()
        for u in left:
            if u not in pair_l:
                dist[u] = 0
                queue.append(u)
            else:
                dist[u] = INF
        found = False
        while queue:
            u = queue.popleft()
            for v in adj[u]:
                w = pair_r.get(v)
                if w is None:
                    found = True
                elif dist[w] == INF:
                    dist[w] = dist[u] + 1
                    queue.append(w)
        return found

    def dfs(u):
        for v in adj[u]:
            w = pair_r.get(v)
            if w is None or (dist[w] == dist[u] + 1 and dfs(w)):
                pair_l[u] = v
                pair_r[v] = u
                return True
        dist[u] = INF
        return False

    while bfs():
        for u in left:
            if u not in pair_l:
                dfs(u)
    return pair_l


def perfect_matching_decomposition(H: MultiGraph):
    """Split an r-regular bipartite multigraph into r perfect matchings.

    Works by repeated maximum matching on the multiplicity-collapsed graph;
    regularity guarantees each round's matching is perfect.
    """
    if H.n == 0:
        return []
    degs = {H.degree(v) for v in H.vertices}
    if len(degs) != 1:
        raise NotRegularError(f"degrees {sorted(degs)} are not all equal")
    r = degs.pop()
    left, right = bipartition(H)
    if r == 0:
        return []

    leftset = set(left)
    buckets = {}
    for eid, u, v in H.edges:
        if u not in leftset:
            u, v = v, u
        buckets.setdefault((u, v), deque()).append(eid)

    result = []
    for _ in range(r):
        adj = {u: [] for u in left}
        for (u, v), bucket in buckets.items():
            if bucket:
                adj[u].append(v)
        pair_l = _hopcroft_karp(left, adj)
        if len(pair_l) != len(left):
            raise NotRegularError("no perfect matching: graph was not regular bipartite")
        matching = []
        for u in left:
            v = pair_l[u]
            matching.append(buckets[(u, v)].popleft())
        result.append(tuple(matching))
    return result


def _proper_edge_colouring_bipartite(H: MultiGraph):
    """Proper edge colouring of a bipartite multigraph with exactly D colours.

    Pads to a D-regular bipartite supergraph (balancing the sides, then
    joining deficient vertices) and decomposes it into perfect matchings;
    matching number = colour.
    """
    delta = H.max_degree
    if delta == 0:
        return {}
    left, right = bipartition(H)
    left, right = list(left), list(right)
    i = 0
    while len(left) < len(right):
        left.append(("bal", i))
        i += 1
    while len(right) < len(left):
        right.append(("bal", i))
        i += 1
    vertices = left + right
    edges = list(H.edges)
    deg = {v: 0 for v in vertices}
    for eid, u, v in H.edges:
        deg[u] += 1
        deg[v] += 1
    need_l = deque(v for v in left if deg[v] < delta)
    need_r = deque(v for v in right if deg[v] < delta)
    j = 0
    while need_l:
        u = need_l[0]
        v = need_r[0]
        edges.append((("fill", j), u, v))
        j += 1
        deg[u] += 1
        deg[v] += 1
        if deg[u] >= delta:
            need_l.popleft()
        if deg[v] >= delta:
            need_r.popleft()
    padded = MultiGraph(vertices, edges)
    seed = {}
    own = {t[0] for t in H.edges}
    for idx, matching in enumerate(perfect_matching_decomposition(padded), start=1):
        for eid in matching:
            if eid in own:
                seed[eid] = idx
    return seed


def _stable_edge_set(pool, seed, left_end, right_end):
    """Kernel of the pool under the seed colouring via deferred acceptance.

    Left endpoints propose along their pool edges in increasing seed order;
    right endpoints hold the largest seed seen.  The result is a matching
    such that every rejected edge shares a left end with a kept edge of
    smaller seed or a right end with a kept edge of larger seed, which is
    exactly the charge the list-size argument needs.
    """
    by_left = {}
    for e in pool:
        by_left.setdefault(left_end[e], []).append(e)
    for x in by_left:
        by_left[x].sort(key=lambda e: seed[e])
    pointer = {x: 0 for x in by_left}
    holder = {}
    free = deque(by_left)
    while free:
        x = free.popleft()
        while pointer[x] < len(by_left[x]):
            e = by_left[x][pointer[x]]
            pointer[x] += 1
            y = right_end[e]
            cur = holder.get(y)
            if cur is None:
                holder[y] = e
                break
            if seed[e] > seed[cur]:
                holder[y] = e
                free.append(left_end[cur])
                break
        # else: x stays unmatched
    return set(holder.values())


def galvin_list_edge_colour(H: MultiGraph, lists) -> dict:
    """Proper list edge colouring of a bipartite multigraph from D-lists.

    A proper D-edge-colouring seeds priorities; each colour round keeps a
    kernel (stable set) of the edges still wanting that colour, so every edge
    loses at most D-1 list entries before it is coloured.
    """
    delta = H.max_degree
    for eid, _, _ in H.edges:
        if eid not in lists or len(lists[eid]) < delta:
            raise ListTooSmallError(
                f"edge {eid!r} needs a list of at least {delta} colours"
            )
    if H.m == 0:
        return {}
    left, _ = bipartition(H)
    leftset = set(left)
    left_end = {}
    right_end = {}
    for eid, u, v in H.edges:
        if u in leftset:
            left_end[eid], right_end[eid] = u, v
        else:
            left_end[eid], right_end[eid] = v, u

    seed = _proper_edge_colouring_bipartite(H)
    remaining = {eid: set(lists[eid]) for eid, _, _ in H.edges}
    colour_of = {}
    for colour in sorted(set().union(*remaining.values())):
        pool = [
            eid
            for eid, _, _ in H.edges
            if eid not in colour_of and colour in remaining[eid]
        ]
        if not pool:
            continue
        kept = _stable_edge_set(pool, seed, left_end, right_end)
        for eid in pool:
            if eid in kept:
                colour_of[eid] = colour
            else:
                remaining[eid].discard(colour)
    if len(colour_of) != H.m:
        raise ListTooSmallError("lists ran out before every edge was coloured")
    return colour_of


def colour_edges_even_k(g: MultiGraph, k: int, lists=None) -> dict:
    """k-frugal edge colouring for even k with exactly ceil(D/k) colours.

    Without lists the colour of an edge is its matching's index within its
    group.  With lists (each of size >= ceil(D/k)) every group is list-edge
    coloured by the kernel method; padding edges get throwaway lists.
    """
    if k < 2 or k % 2:
        raise OddKError("this pipeline needs even k >= 2")
    if g.m == 0:
        return {}
    delta = g.max_degree
    width = math.ceil(delta / k)  # palette size
    if lists is not None:
        for eid, _, _ in g.edges:
            if eid not in lists or len(lists[eid]) < width:
                raise ListTooSmallError(
                    f"edge {eid!r} needs a list of at least {width} colours"
                )
    ell = k // 2
    g_reg, emb = regularize_to_degree(g, k * width)
    real = set(emb.values())
    _, lift = bipartite_lift(g_reg)
    matchings = perfect_matching_decomposition(lift.graph)
    if len(matchings) != ell * width:
        raise AssertionError("matching decomposition came up short")
    groups = [matchings[i * width : (i + 1) * width] for i in range(ell)]

    out = {}
    if lists is None:
        for group in groups:
            for j, matching in enumerate(group, start=1):
                for eid in matching:
                    if eid in real:
                        out[eid] = j
        return out

    throwaway = frozenset(range(1, width + 1))
    for group in groups:
        members = [eid for matching in group for eid in matching]
        sub = lift.graph.spanning_subgraph(members)
        sub_lists = {
            eid: (lists[eid] if eid in real else throwaway) for eid in members
        }
        coloured = galvin_list_edge_colour(sub, sub_lists)
        for eid in members:
            if eid in real:
                out[eid] = coloured[eid]
    return out


def two_factor_decomposition(g: MultiGraph):
    """Split a 2r-regular multigraph into r spanning 2-regular edge sets."""
    if g.n == 0:
        return []
    degs = {g.degree(v) for v in g.vertices}
    r = next(iter(degs)) if len(degs) == 1 else None
    if r is None or r % 2:
        raise NotEvenRegularError(
            f"degrees {sorted(degs)} are not all equal and even"
        )
    if r == 0:
        return []
    _, lift = bipartite_lift(g)
    return [tuple(m) for m in perfect_matching_decomposition(lift.graph)]


def _covering_linear_forest(g: MultiGraph, cover):
    """Disjoint paths in g touching every vertex of ``cover``.

    A maximal matching inside the cover set takes care of adjacent pairs;
    each leftover cover vertex is attached as a pendant to a neighbour, with
    capacity one at matched vertices and two elsewhere so the union stays a
    linear forest.  A counting argument (cover vertices have the largest
    degrees) guarantees the capacitated assignment exists; failure would mean
    the input was corrupt and raises.
    """
    cover = set(cover)
    matched = {}
    forest = []
    for eid, u, v in g.edges:
        if (
            u in cover
            and v in cover
            and u not in matched
            and v not in matched
        ):
            matched[u] = v
            matched[v] = u
            forest.append(eid)
    leftovers = [v for v in g.vertices if v in cover and v not in matched]
    cap = {v: 1 if v in matched else 2 for v in g.vertices}
    load = {v: [] for v in g.vertices}

    def place(u, visited):
        for w in g.neighbours(u):
            if w in visited or w in cover and w not in matched:
                continue
            visited.add(w)
            if len(load[w]) < cap[w]:
                load[w].append(u)
                return True
            for u2 in list(load[w]):
                if place(u2, visited):
                    load[w].remove(u2)
                    load[w].append(u)
                    return True
        return False

    for u in leftovers:
        if not place(u, set()):
            raise AssertionError(
                "could not cover a maximum-degree vertex with a linear forest"
            )
    for w in g.vertices:
        for u in load[w]:
            forest.append(g.edges_between(u, w)[0])
    return forest


def _safe_two_factor(g: MultiGraph, g_reg: MultiGraph, target: int):
    """A 2-factor of the regularized graph whose real part is a linear forest.

    Only used when the maximum degree D is odd (target = D + 1): every vertex
    then has at least one padding edge, except that maximum-degree vertices
    have exactly one, so those are covered by real forest edges and everyone
    else tops up with padding.  Real cycles cannot occur, so the factor can
    always be properly coloured with two colours on its real edges.
    """
    delta = g.max_degree
    cover = [v for v in g.vertices if g.degree(v) == delta]
    forest = _covering_linear_forest(g, cover)
    deg_r = {v: 0 for v in g.vertices}
    for eid in forest:
        u, v = g.endpoints(eid)
        deg_r[u] += 1
        deg_r[v] += 1
    factor = list(forest)
    for eid in forest:
        factor.append(("mir", eid))
    for v in g.vertices:
        need = 2 - deg_r[v]
        have = target - g.degree(v)
        if need > have:
            raise AssertionError("padding too thin for the safe factor")
        for i in range(need):
            factor.append(("pad", v, i))
    # sanity: exactly degree two everywhere in the regularized graph
    check = {v: 0 for v in g_reg.vertices}
    for eid in factor:
        u, v = g_reg.endpoints(eid)
        check[u] += 1
        check[v] += 1
    if any(c != 2 for c in check.values()):
        raise AssertionError("safe factor is not 2-regular")
    return factor


def _real_components(edge_list, endpoints):
    """Paths and cycles of a degree-<=2 edge set.

    Returns a list of (ordered edge ids, is_cycle).
    """
    incident = {}
    for eid in edge_list:
        u, v = endpoints(eid)
        incident.setdefault(u, []).append(eid)
        incident.setdefault(v, []).append(eid)
    seen = set()
    comps = []

    def walk(start, first):
        path = []
        v, e = start, first
        while e is not None and e not in seen:
            seen.add(e)
            path.append(e)
            u, w = endpoints(e)
            v = w if u == v else u
            e = next((x for x in incident[v] if x not in seen), None)
        return path, v

    order = list(incident)
    for v in order:
        if len(incident[v]) == 1:
            e = incident[v][0]
            if e not in seen:
                path, _ = walk(v, e)
                comps.append((path, False))
    for v in order:
        for e in incident[v]:
            if e not in seen:
                path, end = walk(v, e)
                comps.append((path, True))
    return comps


def _slice_cost(comps):
    cost = 0
    for edges, is_cycle in comps:
        if is_cycle and len(edges) % 2:
            return 3
        cost = max(cost, 2 if len(edges) >= 2 else 1)
    return cost


def _colour_components(comps, palette):
    out = {}
    for edges, is_cycle in comps:
        odd_cycle = is_cycle and len(edges) % 2
        for i, eid in enumerate(edges):
            if odd_cycle and i == len(edges) - 1:
                out[eid] = palette[2]
            else:
                out[eid] = palette[i % 2]
    return out


def colour_edges_odd_k(g: MultiGraph, k: int) -> dict:
    """k-frugal edge colouring for odd k with at most ceil(3D/(3k-1)) colours.

    The regularized graph is split into 2-factors.  Factors assigned to the
    even part are grouped (k-1)/2 to a colour, contributing at most k-1
    incidences of any colour at a vertex; the remaining factors are coloured
    properly (at most one incidence) with two or three colours each from the
    same palette, so any colour meets a vertex at most k times.  Expensive
    factors (odd all-real cycles) are steered into the even part first, a
    padding-only safe factor absorbs the parity slack when D is odd, and
    factors with no real edges cost nothing.
    """
    if k < 1 or k % 2 == 0:
        raise EvenKError("this pipeline needs odd k >= 1")
    if g.m == 0:
        return {}
    delta = g.max_degree
    width = math.ceil(3 * delta / (3 * k - 1))
    if delta <= k:
        return {eid: 1 for eid, _, _ in g.edges}
    ell = (k - 1) // 2

    padded = delta + (delta % 2)
    g_reg, emb = regularize_to_degree(g, padded)
    real = set(emb.values())

    factors = []
    rest = g_reg
    if delta % 2:
        safe = _safe_two_factor(g, g_reg, padded)
        rest = g_reg.remove_edges(safe)
        factors.append(tuple(safe))
    factors = list(two_factor_decomposition(rest)) + factors

    analysed = []
    for idx, factor in enumerate(factors):
        real_edges = [eid for eid in factor if eid in real]
        comps = _real_components(real_edges, g_reg.endpoints)
        cost = _slice_cost(comps)
        if cost:
            analysed.append((cost, idx, comps))
    analysed.sort(key=lambda t: (-t[0], t[1]))

    take = min(len(analysed), ell * width) if ell else 0
    even_part, proper_part = analysed[:take], analysed[take:]

    out = {}
    for i, (_, idx, comps) in enumerate(even_part):
        colour = 1 + i // ell
        for edges, _ in comps:
            for eid in edges:
                out[eid] = colour
    next_colour = 1
    for cost, idx, comps in proper_part:
        palet = list(range(next_colour, next_colour + cost))
        next_colour += cost
        out.update(_colour_components(comps, palet))

    used_even = math.ceil(take / ell) if take else 0
    if max(used_even, next_colour - 1) > width:
        raise AssertionError(
            "odd-k assembly exceeded its colour budget; this is a bug"
        )
    return out
