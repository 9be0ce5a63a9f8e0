"""Command-line front end: generate, validate, colour, exact, bounds, bench.

Every subcommand prints one JSON report to stdout (sorted keys, so identical
inputs and seeds give byte-identical output except the timing field) and
signals through the exit code:

    0  success / valid
    1  invalid input colouring or violation found
    2  usage or structural error
    3  search budget exhausted

The environment variable FRUGAL_NODE_BUDGET overrides the default node
budget of the exact oracles.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys
import time
from dataclasses import asdict

from . import generators
from .cyclic import colour_square_via_classes
from .edgecolour import colour_edges_even_k, colour_edges_odd_k
from .errors import BudgetExhaustedError, FrugalError
from .exact import (
    DEFAULT_NODE_BUDGET,
    exact_frugal_chromatic,
    exact_frugal_chromatic_index,
    exact_lambda,
    exact_rainbow_face_chromatic,
)
from .graphio import parse_dimacs, parse_graph_file, write_graph_file
from .graphs import faces, metrics
from .outerplanar import (
    colour_outerplanar,
    colour_outerplanar_2connected,
    outerplanar_required_list_size,
    twoconnected_required_list_size,
)
from .planar import (
    bound_value,
    colour_planar_frugal,
    greedy_L_k1,
    label_to_frugal,
    planar_required_list_size,
)
from .validate import (
    labelling_span,
    validate_frugal_edge,
    validate_frugal_vertex,
    validate_Lpq,
    validate_lists,
)


def _budget(args):
    env = os.environ.get("FRUGAL_NODE_BUDGET")
    if env is not None:
        return int(env)
    return getattr(args, "budget", None) or DEFAULT_NODE_BUDGET


def _load(path):
    if str(path).endswith(".col"):
        return None, parse_dimacs(path)
    gf = parse_graph_file(path)
    return gf, gf.graph


def _report(command, parameters, outcome, started, seed=None, bounds=None):
    report = {
        "command": command,
        "parameters": parameters,
        "outcome": outcome,
        "bounds": bounds or [],
        "seed": seed,
        "timing_ms": round(1000 * (time.perf_counter() - started), 3),
    }
    print(json.dumps(report, sort_keys=True, default=str))


def _violation_dict(violation):
    return {
        "kind": violation.kind,
        "vertices": list(violation.vertices),
        "edges": list(violation.edges),
        "colours": list(violation.colours),
        "message": violation.message,
    }


def _cmd_generate(args):
    started = time.perf_counter()
    fam = args.family
    if fam == "gm":
        inst = generators.gen_Gm(args.m)
    elif fam == "tm":
        inst = generators.gen_Tm(args.m)
    elif fam in ("cycle", "path", "star"):
        inst = generators.gen_named(f"{fam}({args.n})")
    elif fam in ("petersen", "k4", "icosahedron"):
        inst = generators.gen_named(fam)
    elif fam == "random-outerplanar":
        if args.seed is None:
            raise FrugalError("random families require --seed")
        inst = generators.gen_random_maximal_outerplanar(args.n, args.seed)
    elif fam == "random-multigraph":
        if args.seed is None:
            raise FrugalError("random families require --seed")
        inst = generators.gen_random_multigraph(
            args.n, args.delta_cap, args.multiplicity_cap, args.seed
        )
    else:
        raise FrugalError(f"unknown family {fam!r}")
    if args.out:
        write_graph_file(args.out, inst.graph, rotation=inst.rotation)
    stats = metrics(inst.graph)
    _report(
        "generate",
        {"family": fam, **{k: v for k, v in inst.params.items() if k != "outer_cycle"}},
        {
            "vertices": inst.graph.n,
            "edges": inst.graph.m,
            "max_degree": stats.max_degree,
            "girth": "infinite" if stats.girth == math.inf else stats.girth,
            "components": stats.component_count,
            "written": args.out,
        },
        started,
        seed=args.seed,
    )
    return 0


def _cmd_validate(args):
    started = time.perf_counter()
    gf, g = _load(args.graph)
    params = {"what": args.what, "graph": args.graph}

    if args.what == "faces":
        try:
            if gf is None or gf.rotation is None:
                raise FrugalError("faces validation needs a rotation in the file")
            structure = faces(g, gf.rotation)
            _report(
                "validate",
                params,
                {
                    "valid": True,
                    "faces": len(structure.walks),
                    "max_face_size": structure.max_face_size,
                },
                started,
            )
            return 0
        except FrugalError as exc:
            _report("validate", params, {"valid": False, "error": str(exc)}, started)
            return 1

    if gf is None or gf.colouring is None:
        raise FrugalError("validation needs a colouring block in the file")
    colouring = gf.colouring
    if args.what == "vertex":
        params["k"] = args.k
        violation = validate_frugal_vertex(g, args.k, colouring)
    elif args.what == "edge":
        params["k"] = args.k
        violation = validate_frugal_edge(g, args.k, colouring)
    else:  # lpq
        params.update({"p": args.p, "q": args.q})
        violation = validate_Lpq(g, args.p, args.q, colouring)
        params["span"] = labelling_span(colouring)
    if violation is None and gf.lists is not None:
        violation = validate_lists(colouring, gf.lists)
    if violation is None:
        _report("validate", params, {"valid": True}, started)
        return 0
    _report(
        "validate",
        params,
        {"valid": False, "violation": _violation_dict(violation)},
        started,
    )
    return 1


def _auto_lists(items, size):
    palette = frozenset(range(1, size + 1))
    return {item: palette for item in items}


def _cmd_colour(args):
    started = time.perf_counter()
    gf, g = _load(args.graph)
    k = args.k

    if args.target == "vertex":
        algo = args.algo
        if algo == "via-lambda":
            labelling = greedy_L_k1(g, k)
            colouring = label_to_frugal(labelling, k)
            extra = {"labelling_span": labelling_span(labelling)}
        else:
            if algo == "planar":
                required = planar_required_list_size(g.max_degree, k)
                colour_fn = colour_planar_frugal
            elif algo == "outerplanar":
                required = outerplanar_required_list_size(g.max_degree, k)
                colour_fn = colour_outerplanar
            else:
                required = twoconnected_required_list_size(g.max_degree, k)
                colour_fn = colour_outerplanar_2connected
            lists = gf.lists if gf.lists else _auto_lists(g.vertices, required)
            colouring = colour_fn(g, k, lists)
            extra = {"list_size": min(len(s) for s in lists.values())}
            check = validate_lists(colouring, lists)
            if check is not None:
                _report(
                    "colour",
                    {"target": "vertex", "algo": algo, "k": k},
                    {"valid": False, "violation": _violation_dict(check)},
                    started,
                )
                return 1
        violation = validate_frugal_vertex(g, k, colouring)
        kind = "vertex"
    else:
        if k % 2 == 0:
            lists = gf.lists if gf and gf.lists else None
            colouring = colour_edges_even_k(g, k, lists)
        else:
            colouring = colour_edges_odd_k(g, k)
        extra = {}
        violation = validate_frugal_edge(g, k, colouring)
        kind = "edge"

    outcome = {
        "colours_used": len(set(colouring.values())),
        "valid": violation is None,
        **extra,
    }
    if violation is not None:
        outcome["violation"] = _violation_dict(violation)
    if args.out:
        write_graph_file(
            args.out,
            g,
            rotation=gf.rotation if gf else None,
            colouring=colouring,
            colouring_kind=kind,
        )
        outcome["written"] = args.out
    _report(
        "colour",
        {"target": args.target, "algo": getattr(args, "algo", None), "k": k},
        outcome,
        started,
    )
    return 0 if violation is None else 1


def _cmd_exact(args):
    started = time.perf_counter()
    gf, g = _load(args.graph)
    budget = _budget(args)
    params = {"problem": args.problem, "budget": budget, "graph": args.graph}

    if args.problem == "chi-k":
        params["k"] = args.k
        result = exact_frugal_chromatic(g, args.k, args.max, budget)
    elif args.problem == "chi-k-edge":
        params["k"] = args.k
        result = exact_frugal_chromatic_index(g, args.k, args.max, budget)
    elif args.problem == "lambda":
        params.update({"p": args.p, "q": args.q})
        result = exact_lambda(g, args.p, args.q, args.max, budget)
    else:  # rainbow
        if gf is None or gf.rotation is None:
            raise FrugalError("rainbow needs a rotation in the file")
        structure = faces(g, gf.rotation)
        sets = []
        for walk in structure.walks:
            found = []
            for tail, _ in walk:
                if tail not in found:
                    found.append(tail)
            if len(found) >= 2:
                sets.append(tuple(found))
        result = exact_rainbow_face_chromatic(g, sets, args.max, budget)

    outcome = {
        "optimum": result.optimum,
        "nodes_explored": result.nodes_explored,
        "budget_exhausted": result.budget_exhausted,
        "infeasible": result.infeasible,
    }
    _report("exact", params, outcome, started)
    if result.budget_exhausted:
        return 3
    return 0


def _cmd_square_via_cyclic(args):
    started = time.perf_counter()
    gf, g = _load(args.graph)
    if gf.rotation is None or gf.colouring is None or gf.colouring_kind != "vertex":
        raise FrugalError(
            "square-via-cyclic needs a rotation and a vertex colouring in the file"
        )
    report = colour_square_via_classes(g, gf.rotation, args.k, gf.colouring)
    _report(
        "square-via-cyclic",
        {"k": args.k, "graph": args.graph},
        {
            "total_colours": report.total_colours,
            "per_class": report.per_class,
            "class_budget": report.class_budget,
            "combined_budget": report.combined_budget,
        },
        started,
    )
    return 0


def _cmd_bounds(args):
    started = time.perf_counter()
    spec = bound_value(args.family, args.delta, args.k, args.girth)
    _report(
        "bounds",
        {"family": args.family, "delta": args.delta, "k": args.k, "girth": args.girth},
        asdict(spec),
        started,
        bounds=[asdict(spec)],
    )
    return 0


def _cmd_bench(args):
    started = time.perf_counter()
    sizes = {"small": (8, 12), "medium": (20, 30)}[args.corpus]
    count, nmax = sizes
    rows = []
    for i in range(count):
        inst = generators.gen_random_multigraph(
            4 + (i * 7) % nmax, 3 + (i % 10), 3, args.seed + i
        )
        g = inst.graph
        if g.m == 0:
            continue
        t0 = time.perf_counter()
        even = colour_edges_even_k(g, 2)
        odd = colour_edges_odd_k(g, 3)
        ok = (
            validate_frugal_edge(g, 2, even) is None
            and validate_frugal_edge(g, 3, odd) is None
        )
        rows.append(
            {
                "instance": i,
                "n": g.n,
                "m": g.m,
                "even_colours": len(set(even.values())),
                "odd_colours": len(set(odd.values())),
                "valid": ok,
                "ms": round(1000 * (time.perf_counter() - t0), 3),
            }
        )
    _report(
        "bench",
        {"corpus": args.corpus},
        {"instances": rows, "all_valid": all(r["valid"] for r in rows)},
        started,
        seed=args.seed,
    )
    return 0 if all(r["valid"] for r in rows) else 1


def build_parser():
    parser = argparse.ArgumentParser(
        prog="frugal", description="Frugal graph colouring toolkit"
    )
    sub = parser.add_subparsers(dest="cmd", required=True)

    p = sub.add_parser("generate", help="emit a generated instance")
    p.add_argument(
        "family",
        choices=[
            "gm",
            "tm",
            "cycle",
            "path",
            "star",
            "petersen",
            "k4",
            "icosahedron",
            "random-outerplanar",
            "random-multigraph",
        ],
    )
    p.add_argument("--m", type=int, default=2)
    p.add_argument("--n", type=int, default=5)
    p.add_argument("--delta-cap", type=int, default=6)
    p.add_argument("--multiplicity-cap", type=int, default=2)
    p.add_argument("--seed", type=int)
    p.add_argument("--out")
    p.set_defaults(fn=_cmd_generate)

    p = sub.add_parser("validate", help="check a colouring or an embedding")
    p.add_argument("what", choices=["vertex", "edge", "lpq", "faces"])
    p.add_argument("graph")
    p.add_argument("--k", type=int, default=1)
    p.add_argument("--p", type=int, default=2)
    p.add_argument("--q", type=int, default=1)
    p.set_defaults(fn=_cmd_validate)

    p = sub.add_parser("colour", help="run a constructive colouring algorithm")
    p.add_argument("target", choices=["vertex", "edge"])
    p.add_argument("graph")
    p.add_argument("--k", type=int, required=True)
    p.add_argument(
        "--algo",
        choices=["planar", "outerplanar", "outerplanar2", "via-lambda"],
        default="planar",
    )
    p.add_argument("--out")
    p.set_defaults(fn=_cmd_colour)

    p = sub.add_parser("exact", help="run an exact oracle")
    p.add_argument("problem", choices=["chi-k", "chi-k-edge", "lambda", "rainbow"])
    p.add_argument("graph")
    p.add_argument("--k", type=int, default=1)
    p.add_argument("--p", type=int, default=2)
    p.add_argument("--q", type=int, default=1)
    p.add_argument("--max", type=int)
    p.add_argument("--budget", type=int)
    p.set_defaults(fn=_cmd_exact)

    p = sub.add_parser("square-via-cyclic", help="colour the square through classes")
    p.add_argument("graph")
    p.add_argument("--k", type=int, required=True)
    p.set_defaults(fn=_cmd_square_via_cyclic)

    p = sub.add_parser("bounds", help="evaluate a closed-form bound family")
    p.add_argument("--family", required=True)
    p.add_argument("--delta", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--girth", type=int)
    p.set_defaults(fn=_cmd_bounds)

    p = sub.add_parser("bench", help="time the pipelines over a seeded corpus")
    p.add_argument("--corpus", choices=["small", "medium"], default="small")
    p.add_argument("--seed", type=int, required=True)
    p.set_defaults(fn=_cmd_bench)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except BudgetExhaustedError as exc:
        print(json.dumps({"error": str(exc), "kind": "budget"}), file=sys.stderr)
        return 3
    except FrugalError as exc:
        print(
            json.dumps({"error": str(exc), "kind": type(exc).__name__}),
            file=sys.stderr,
        )
        return 2
    except ValueError as exc:
        print(json.dumps({"error": str(exc), "kind": "usage"}), file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
