"""Shared test utilities: naive re-implementations used as independent oracles.

Everything here is deliberately written in the most literal way possible
(pairwise loops, explicit distance checks) so that agreement with the
package's validators and algorithms is meaningful.
"""

import random

from frugal.graphs import MultiGraph, build_multigraph


def bfs_distance(g: MultiGraph, s, t):
    """Plain BFS distance, independent of MultiGraph.distances_from."""
    from collections import deque

    if s == t:
        return 0
    seen = {s}
    queue = deque([(s, 0)])
    while queue:
        x, d = queue.popleft()
        for eid in g.incident_edges(x):
            y = g.other_end(eid, x)
            if y == t:
                return d + 1
            if y not in seen:
                seen.add(y)
                queue.append((y, d + 1))
    return None


def naive_frugal_vertex_ok(g, k, colouring):
    for _, u, v in g.edges:
        if colouring[u] == colouring[v]:
            return False
    for v in g.vertices:
        for colour in set(colouring.values()):
            hits = 0
            for w in g.vertices:
                if w != v and colouring[w] == colour and g.has_edge(v, w):
                    hits += 1
            if hits > k:
                return False
    return True


def naive_frugal_edge_ok(g, k, colouring):
    for v in g.vertices:
        for colour in set(colouring.values()):
            hits = 0
            for eid in g.incident_edges(v):
                if colouring[eid] == colour:
                    hits += 1
            if hits > k:
                return False
    return True


def naive_lpq_ok(g, p, q, labelling):
    vs = list(g.vertices)
    for i, u in enumerate(vs):
        for w in vs[i + 1 :]:
            d = bfs_distance(g, u, w)
            if d == 1 and abs(labelling[u] - labelling[w]) < p:
                return False
            if d == 2 and abs(labelling[u] - labelling[w]) < q:
                return False
    return True


def naive_face_rainbow_ok(g, sets, colouring):
    for _, u, v in g.edges:
        if colouring[u] == colouring[v]:
            return False
    for group in sets:
        members = list(group)
        for i, a in enumerate(members):
            for b in members[i + 1 :]:
                if colouring[a] == colouring[b]:
                    return False
    return True


def naive_lists_ok(assignment, lists):
    return all(assignment[item] in lists[item] for item in assignment)


def random_simple_graph(rng, max_n=8, edge_prob=0.5):
    n = rng.randint(1, max_n)
    vs = [f"v{i}" for i in range(n)]
    es = []
    for i in range(n):
        for j in range(i + 1, n):
            if rng.random() < edge_prob:
                es.append((f"e{len(es)}", vs[i], vs[j]))
    return build_multigraph(vs, es)


def random_multigraph(rng, max_n=6, max_mult=3, edge_prob=0.5):
    n = rng.randint(1, max_n)
    vs = [f"v{i}" for i in range(n)]
    es = []
    for i in range(n):
        for j in range(i + 1, n):
            if rng.random() < edge_prob:
                for _ in range(rng.randint(1, max_mult)):
                    es.append((f"e{len(es)}", vs[i], vs[j]))
    return build_multigraph(vs, es)


def random_bipartite_multigraph(rng, max_side=10, delta_cap=8, mult_cap=3):
    a = rng.randint(1, max_side)
    b = rng.randint(1, max_side)
    left = [f"a{i}" for i in range(a)]
    right = [f"b{i}" for i in range(b)]
    deg = {v: 0 for v in left + right}
    mult = {}
    es = []
    for _ in range(6 * (a + b)):
        u = left[rng.randrange(a)]
        v = right[rng.randrange(b)]
        if deg[u] >= delta_cap or deg[v] >= delta_cap:
            continue
        if mult.get((u, v), 0) >= mult_cap:
            continue
        mult[(u, v)] = mult.get((u, v), 0) + 1
        deg[u] += 1
        deg[v] += 1
        es.append((f"e{len(es)}", u, v))
    return build_multigraph(left + right, es)


def greedy_list_edge_colouring(g, lists):
    """First-fit list edge colouring in edge order; None when stuck."""
    col = {}
    for eid, u, v in g.edges:
        used = {col[e] for e in g.incident_edges(u) if e in col}
        used |= {col[e] for e in g.incident_edges(v) if e in col}
        for c in sorted(lists[eid]):
            if c not in used:
                col[eid] = c
                break
        else:
            return None
    return col


def edge_corpus(count=200):
    """The seeded multigraph corpus shared by the edge-colouring criteria."""
    from frugal.generators import gen_random_multigraph

    instances = []
    seed = 0
    while len(instances) < count:
        rng = random.Random(90000 + seed)
        n = rng.randint(4, 40)
        delta_cap = rng.randint(3, 20)
        mult_cap = rng.randint(1, 4)
        g = gen_random_multigraph(n, delta_cap, mult_cap, seed).graph
        seed += 1
        if g.m == 0:
            continue
        instances.append(g)
    return instances
