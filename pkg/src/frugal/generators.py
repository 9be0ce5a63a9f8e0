"""Deterministic graph families and seeded random corpora.

Every generator is a pure function of its parameters (and seed), so repeated
calls produce identical instances.  Plane families come with a rotation
system derived from an explicit straight-line drawing.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass

from .graphs import MultiGraph, RotationSystem, build_multigraph


@dataclass(frozen=True)
class GeneratedInstance:
    graph: MultiGraph
    rotation: RotationSystem | None
    family: str
    params: dict
    note: str = ""


def _pseudoangle(dx, dy):
    # Monotone in angle, cheaper than atan2; standard trick.
    if dx == dy == 0:
        return 0.0
    p = dx / (abs(dx) + abs(dy))
    return 3.0 + p if dy < 0 else 1.0 - p


def rotation_from_coordinates(g: MultiGraph, pos) -> RotationSystem:
    """Counter-clockwise rotation system of a straight-line drawing."""
    order = {}
    for v in g.vertices:
        vx, vy = pos[v]

        def key(eid, vx=vx, vy=vy, v=v):
            w = g.other_end(eid, v)
            wx, wy = pos[w]
            return (_pseudoangle(wx - vx, wy - vy), g.edge_index(eid))

        order[v] = tuple(sorted(g.incident_edges(v), key=key))
    return RotationSystem(order)


def gen_Gm(m: int) -> GeneratedInstance:
    """Three hubs x, y, z with an xy edge and three fans of common neighbours.

    m-1 vertices are adjacent to both x and y, m to both x and z, and m to
    both y and z, so every hub has degree 2m on 3m+2 vertices in total.  The
    rotation system realises a straight-line plane drawing.
    """
    if m < 2:
        raise ValueError("gen_Gm requires m >= 2")
    a = [f"a{i}" for i in range(m - 1)]  # common neighbours of x and y
    b = [f"b{i}" for i in range(m)]  # of x and z
    c = [f"c{i}" for i in range(m)]  # of y and z
    vertices = ["x", "y", "z", *a, *b, *c]
    edges = [("xy", "x", "y")]
    for i, w in enumerate(a):
        edges.append((f"xa{i}", "x", w))
        edges.append((f"ya{i}", "y", w))
    for i, w in enumerate(b):
        edges.append((f"xb{i}", "x", w))
        edges.append((f"zb{i}", "z", w))
    for i, w in enumerate(c):
        edges.append((f"yc{i}", "y", w))
        edges.append((f"zc{i}", "z", w))
    g = build_multigraph(vertices, edges)

    # Straight-line drawing: xy vertical, each fan on the perpendicular
    # bisector of its hub pair at distinct heights, so the paths through a
    # fan nest like parentheses and no two segments cross.
    pos = {"x": (0.0, 10.0), "y": (0.0, -10.0), "z": (30.0, 0.0)}
    for i, w in enumerate(a):
        pos[w] = (-2.0 * (i + 1), 0.0)
    for i, w in enumerate(b):
        pos[w] = (15.0, 7.0 + 2.0 * i)
    for i, w in enumerate(c):
        pos[w] = (15.0, -7.0 - 2.0 * i)
    rot = rotation_from_coordinates(g, pos)
    return GeneratedInstance(g, rot, "gm", {"m": m}, "three-hub tight family")


def gen_Tm(m: int) -> GeneratedInstance:
    """Three vertices with m parallel edges between each pair (2m-regular)."""
    if m < 1:
        raise ValueError("gen_Tm requires m >= 1")
    edges = []
    for i in range(m):
        edges.append((f"ab{i}", "a", "b"))
        edges.append((f"bc{i}", "b", "c"))
        edges.append((f"ca{i}", "c", "a"))
    g = build_multigraph(["a", "b", "c"], edges)
    return GeneratedInstance(g, None, "tm", {"m": m}, "triple multi-edge triangle")


def _cycle(n):
    vs = [f"v{i}" for i in range(n)]
    es = [(f"e{i}", vs[i], vs[(i + 1) % n]) for i in range(n)]
    return build_multigraph(vs, es)


def _path(n):
    vs = [f"v{i}" for i in range(n)]
    es = [(f"e{i}", vs[i], vs[i + 1]) for i in range(n - 1)]
    return build_multigraph(vs, es)


def _star(n):
    vs = ["c"] + [f"v{i}" for i in range(n)]
    es = [(f"e{i}", "c", f"v{i}") for i in range(n)]
    return build_multigraph(vs, es)


def _petersen():
    vs = [f"o{i}" for i in range(5)] + [f"i{i}" for i in range(5)]
    es = []
    for i in range(5):
        es.append((f"ring{i}", f"o{i}", f"o{(i + 1) % 5}"))
        es.append((f"spoke{i}", f"o{i}", f"i{i}"))
        es.append((f"star{i}", f"i{i}", f"i{(i + 2) % 5}"))
    return build_multigraph(vs, es)


def _k4():
    vs = ["v0", "v1", "v2", "v3"]
    es = []
    idx = 0
    for i in range(4):
        for j in range(i + 1, 4):
            es.append((f"e{idx}", vs[i], vs[j]))
            idx += 1
    g = build_multigraph(vs, es)
    pos = {"v0": (0.0, 0.0), "v1": (0.0, 2.0), "v2": (-2.0, -1.2), "v3": (2.0, -1.2)}
    return g, rotation_from_coordinates(g, pos)


def _icosahedron():
    vs = ["n"] + [f"u{i}" for i in range(5)] + [f"l{i}" for i in range(5)] + ["s"]
    es = []
    for i in range(5):
        es.append((f"nu{i}", "n", f"u{i}"))
        es.append((f"uu{i}", f"u{i}", f"u{(i + 1) % 5}"))
        es.append((f"ll{i}", f"l{i}", f"l{(i + 1) % 5}"))
        es.append((f"sl{i}", "s", f"l{i}"))
        es.append((f"ul{i}", f"u{i}", f"l{i}"))
        es.append((f"ud{i}", f"u{(i + 1) % 5}", f"l{i}"))
    return build_multigraph(vs, es)


def gen_named(name: str) -> GeneratedInstance:
    """Named instances: cycle(n), path(n), star(n), petersen, k4, icosahedron."""
    if name.startswith("cycle(") and name.endswith(")"):
        n = int(name[6:-1])
        if n < 3:
            raise ValueError("cycle needs n >= 3")
        g = _cycle(n)
        pos = {
            f"v{i}": (math.cos(2 * math.pi * i / n), math.sin(2 * math.pi * i / n))
            for i in range(n)
        }
        return GeneratedInstance(
            g, rotation_from_coordinates(g, pos), "cycle", {"n": n}
        )
    if name.startswith("path(") and name.endswith(")"):
        n = int(name[5:-1])
        if n < 1:
            raise ValueError("path needs n >= 1")
        return GeneratedInstance(_path(n), None, "path", {"n": n})
    if name.startswith("star(") and name.endswith(")"):
        n = int(name[5:-1])
        if n < 1:
            raise ValueError("star needs n >= 1 leaves")
        return GeneratedInstance(_star(n), None, "star", {"n": n})
    if name == "petersen":
        return GeneratedInstance(_petersen(), None, "petersen", {})
    if name == "k4":
        g, rot = _k4()
        return GeneratedInstance(g, rot, "k4", {})
    if name == "icosahedron":
        return GeneratedInstance(_icosahedron(), None, "icosahedron", {})
    raise ValueError(f"unknown named family {name!r}")


def gen_random_maximal_outerplanar(n: int, seed: int) -> GeneratedInstance:
    """Random triangulation of a convex polygon (maximal outerplanar graph).

    The outer cycle v0..v(n-1) is Hamiltonian and recorded in the instance
    params; the chord set is chosen by seeded random ear insertion, giving
    2n-3 edges for n >= 3.
    """
    if n < 3:
        raise ValueError("need n >= 3")
    rng = random.Random(seed)
    vs = [f"v{i}" for i in range(n)]
    edges = [(f"c{i}", vs[i], vs[(i + 1) % n]) for i in range(n)]
    chords = []

    def tri(i, j):
        if j - i < 2:
            return
        k = rng.randint(i + 1, j - 1)
        if k - i >= 2:
            chords.append((i, k))
        if j - k >= 2:
            chords.append((k, j))
        tri(i, k)
        tri(k, j)

    tri(0, n - 1)
    for a, b in chords:
        edges.append((f"d{a}_{b}", vs[a], vs[b]))
    g = build_multigraph(vs, edges)
    pos = {
        f"v{i}": (math.cos(2 * math.pi * i / n), math.sin(2 * math.pi * i / n))
        for i in range(n)
    }
    rot = rotation_from_coordinates(g, pos)
    return GeneratedInstance(
        g,
        rot,
        "random-maximal-outerplanar",
        {"n": n, "seed": seed, "outer_cycle": tuple(vs)},
    )


def gen_random_multigraph(
    n: int, delta_cap: int, multiplicity_cap: int, seed: int
) -> GeneratedInstance:
    """Seeded loopless random multigraph honouring degree and multiplicity caps."""
    if n < 1 or delta_cap < 0 or multiplicity_cap < 1:
        raise ValueError("bad parameters")
    rng = random.Random(seed)
    vs = [f"v{i}" for i in range(n)]
    deg = {v: 0 for v in vs}
    mult = {}
    edges = []
    if n >= 2:
        for _ in range(4 * n * max(1, delta_cap)):
            i = rng.randrange(n)
            j = rng.randrange(n)
            if i == j:
                continue
            u, v = vs[min(i, j)], vs[max(i, j)]
            if deg[u] >= delta_cap or deg[v] >= delta_cap:
                continue
            if mult.get((u, v), 0) >= multiplicity_cap:
                continue
            mult[(u, v)] = mult.get((u, v), 0) + 1
            deg[u] += 1
            deg[v] += 1
            edges.append((f"e{len(edges)}", u, v))
    g = build_multigraph(vs, edges)
    return GeneratedInstance(
        g,
        None,
        "random-multigraph",
        {
            "n": n,
            "delta_cap": delta_cap,
            "multiplicity_cap": multiplicity_cap,
            "seed": seed,
        },
    )


def gm_counting_lower_bound(m: int, k: int) -> int:
    """Certified lower bound on the k-frugal chromatic number of gen_Gm(m), even k.

    A colour class must be independent with at most k members in any
    neighbourhood.  This routine *computes* the maximum admissible class size
    s by exhaustive search, verifies that every maximum class uses at least
    k/2 of the m-1 common neighbours of x and y (so at most
    (m-1)/(k/2) classes can reach size s), and returns the resulting covering
    bound.  Everything is checked against the concrete instance rather than
    assumed.
    """
    if k < 2 or k % 2 != 0:
        raise ValueError("counting bound applies to even k >= 2")
    inst = gen_Gm(m)
    g = inst.graph
    verts = list(g.vertices)
    nbrs = {v: set(g.neighbours(v)) for v in verts}

    best = {"size": 0}
    max_classes = []

    def admissible_with(chosen, v):
        if any(v in nbrs[u] for u in chosen):
            return False
        for w in verts:
            cnt = sum(1 for u in chosen if u in nbrs[w]) + (1 if v in nbrs[w] else 0)
            if cnt > k:
                return False
        return True

    def extend(idx, chosen):
        if len(chosen) > best["size"]:
            best["size"] = len(chosen)
            max_classes.clear()
        if len(chosen) == best["size"]:
            max_classes.append(tuple(chosen))
        if idx == len(verts):
            return
        if len(chosen) + (len(verts) - idx) < best["size"]:
            return
        for j in range(idx, len(verts)):
            v = verts[j]
            if admissible_with(chosen, v):
                chosen.append(v)
                extend(j + 1, chosen)
                chosen.pop()

    extend(0, [])
    s_max = best["size"]
    ell = k // 2

    xy_fan = {v for v in verts if v.startswith("a")}
    for cls in max_classes:
        used = sum(1 for v in cls if v in xy_fan)
        if used < ell:
            raise AssertionError(
                "a maximum admissible class avoids the xy fan; counting bound void"
            )
    cap_full = (m - 1) // ell  # disjoint maximum classes are xy-fan limited

    nverts = len(verts)
    bound = min(
        a + math.ceil((nverts - a * s_max) / (s_max - 1))
        for a in range(0, cap_full + 1)
    )
    return bound
