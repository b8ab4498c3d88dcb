"""Command-line interface.

Exit codes: 0 success, 1 data/domain error (bad input files, unknown
labels, unsupported operations), 2 usage error (bad flags).
"""

from __future__ import annotations

import argparse
import os
import random
import sys
import time as time_mod

from . import kernels
from .aggregation import AggMode, aggregate, aggregate_static_fast
from .errors import GraphTempoError, UsageError
from .evolution import aggregate_evolution, evolution_graph
from .exploration import (
    Event,
    Extremal,
    ExplorationQuery,
    Reference,
    Target,
    explore,
    init_threshold,
)
from .export import (
    aggregate_to_csv,
    aggregate_to_dot,
    aggregate_to_json,
    evolution_overlay_to_dot,
    evolution_to_json,
    exploration_heatmap_csv,
    exploration_to_json,
    graph_to_dot,
    graph_to_json,
)
from .fixture import build_fixture_fig1
from .graph import TemporalGraph, build_graph
from .io import export_temporal_graph, load_temporal_graph
from .materialization import (
    AggregateCache,
    precompute_timepoint_aggregates,
    rollup_attributes,
    rollup_time_union_all,
)
from .operators import difference, intersection, project, union
from .patterns import Strategy, aggregate_pattern, build_tri_graph
from .timeline import IntervalSet

_OPERATORS = {
    "union": union,
    "intersection": intersection,
    "difference": difference,
    "project": project,
}


_EXTREMAL_ALIASES = {"min": "minimal", "max": "maximal"}
_REFERENCE_ALIASES = {"old": "old-fixed", "new": "new-fixed"}


# ------------------------------------------------------------------ parsing

def _parse_interval(spec: str, g: TemporalGraph) -> IntervalSet:
    """`t0..t2` for a run, `t1` for a single point; labels come from the
    graph's time domain."""
    if ".." in spec:
        lo, hi = spec.split("..", 1)
        return IntervalSet.of(g.time.index(lo), g.time.index(hi))
    return IntervalSet.single(g.time.index(spec))


def _parse_attrs(spec: str) -> tuple[str, ...]:
    return tuple(a for a in spec.split(",") if a)


def _parse_key(spec: str, arity: int) -> tuple:
    """One grouping key: values joined by `/` (e.g. `f/3`); a bare value for
    single-attribute grouping."""
    parts = tuple(spec.split("/"))
    if len(parts) != arity:
        raise UsageError(f"key {spec!r} has {len(parts)} values, expected {arity}")
    return parts


def _parse_target(args, attrs: tuple[str, ...]) -> Target:
    given = [
        name
        for name in ("target_node", "target_edge", "target_pattern")
        if getattr(args, name, None)
    ]
    if len(given) != 1:
        raise UsageError("exactly one of --target-node/--target-edge/--target-pattern is required")
    arity = len(attrs)
    if given[0] == "target_node":
        return Target("node", attrs, _parse_key(args.target_node, arity))
    if given[0] == "target_edge":
        sides = args.target_edge.split(",")
        if len(sides) != 2:
            raise UsageError("--target-edge wants two keys separated by a comma, e.g. f,f")
        return Target("edge", attrs, (_parse_key(sides[0], arity), _parse_key(sides[1], arity)))
    spec = args.target_pattern
    if "," in spec:
        members = [_parse_key(m, arity) for m in spec.split(",")]
    elif arity == 1:
        members = [(c,) for c in spec]  # `ffm` shorthand for single-attr keys
    else:
        raise UsageError("--target-pattern with several attributes wants comma-separated members")
    if len(members) != 3:
        raise UsageError("a triangle pattern has exactly three members")
    return Target("pattern", attrs, tuple(members))


def _load(args) -> TemporalGraph:
    if args.demo:
        return build_fixture_fig1()
    if not args.edges:
        raise UsageError("either --demo or --edges is required")
    varying = {}
    for item in args.varying or []:
        if "=" not in item:
            raise UsageError(f"--varying wants name=path, got {item!r}")
        name, path = item.split("=", 1)
        varying[name] = path
    return load_temporal_graph(
        args.edges,
        static_file=args.static,
        varying_files=varying,
        node_presence_file=args.presence,
        directed=args.directed,
    )


def _add_input_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--demo", action="store_true", help="use the built-in 5-node demo graph")
    p.add_argument("--edges", help="edge CSV (source,target,time)")
    p.add_argument("--static", help="static attribute CSV (id,attr,...)")
    p.add_argument("--varying", action="append", metavar="NAME=PATH",
                   help="time-varying attribute CSV; repeatable")
    p.add_argument("--presence", help="node presence CSV (id,t0,t1,...)")
    p.add_argument("--directed", action="store_true")


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text if text.endswith("\n") else text + "\n")


# ----------------------------------------------------------------- commands

def _cmd_ingest(args) -> int:
    g = _load(args)
    print(f"time points: {g.time.n} ({', '.join(g.time.labels)})")
    print(f"nodes: {g.n_nodes}  edges: {g.n_edges}  directed: {g.directed}")
    print(f"static attrs: {', '.join(g.static_attrs) or '-'}")
    print(f"varying attrs: {', '.join(g.varying_attrs) or '-'}")
    if args.out:
        paths = export_temporal_graph(g, args.out)
        for kind, path in sorted(paths.items()):
            print(f"wrote {kind}: {path}")
    return 0


def _cmd_op(args) -> int:
    g = _load(args)
    op = _OPERATORS[args.operator]
    t1 = _parse_interval(args.t1, g)
    if args.operator == "project":
        iv = t1.intervals
        if len(iv) != 1:
            raise UsageError("project wants a single contiguous interval")
        res = op(g, iv[0])
    else:
        if not args.t2:
            raise UsageError(f"{args.operator} needs --t2")
        res = op(g, t1, _parse_interval(args.t2, g))
    text = graph_to_dot(res) if args.format == "dot" else graph_to_json(res)
    _emit(text, args.out)
    return 0


def _cmd_aggregate(args) -> int:
    g = _load(args)
    attrs = _parse_attrs(args.attrs)
    t = _parse_interval(args.interval, g)
    mode = AggMode(args.mode)
    fn = aggregate_static_fast if args.fast else aggregate
    ag = fn(g, t, attrs, mode)
    text = {
        "json": aggregate_to_json,
        "dot": aggregate_to_dot,
        "csv": aggregate_to_csv,
    }[args.format](ag)
    _emit(text, args.out)
    return 0


def _cmd_tri(args) -> int:
    g = _load(args)
    attrs = _parse_attrs(args.attrs)
    t = _parse_interval(args.interval, g)
    op = None
    if args.op:
        if args.op == "project":
            op = ("project", _parse_interval(args.t1, g))
        else:
            if not (args.t1 and args.t2):
                raise UsageError("--op needs --t1 and --t2")
            op = (args.op, _parse_interval(args.t1, g), _parse_interval(args.t2, g))
    strategy = Strategy(args.strategy) if args.strategy else None
    ag = aggregate_pattern(g, t, attrs, AggMode(args.mode), op=op, strategy=strategy)
    text = {
        "json": aggregate_to_json,
        "dot": aggregate_to_dot,
        "csv": aggregate_to_csv,
    }[args.format](ag)
    _emit(text, args.out)
    return 0


def _cmd_evolve(args) -> int:
    g = _load(args)
    t_old = _parse_interval(args.t_old, g)
    t_new = _parse_interval(args.t_new, g)
    if args.format == "dot":
        ev = evolution_graph(g, t_old, t_new)
        _emit(evolution_overlay_to_dot(ev), args.out)
        return 0
    attrs = _parse_attrs(args.attrs)
    aeg = aggregate_evolution(g, t_old, t_new, attrs, AggMode(args.mode), pattern=args.pattern)
    _emit(evolution_to_json(aeg), args.out)
    return 0


def _cmd_explore(args) -> int:
    g = _load(args)
    attrs = _parse_attrs(args.attrs)
    target = _parse_target(args, attrs)
    query = ExplorationQuery(
        Event(args.event),
        Extremal(_EXTREMAL_ALIASES.get(args.extremal, args.extremal)),
        Reference(_REFERENCE_ALIASES.get(args.reference, args.reference)),
        target,
        args.k,
    )
    res = explore(g, query)
    _emit(exploration_to_json(res), args.out)
    if args.heatmap:
        with open(args.heatmap, "w") as fh:
            fh.write(exploration_heatmap_csv(res))
    return 0


def _cmd_init_k(args) -> int:
    g = _load(args)
    attrs = _parse_attrs(args.attrs)
    target = _parse_target(args, attrs)
    init = init_threshold(g, Event(args.event), target)
    print(f"consecutive weights: {init.weights}")
    print(f"w_min={init.w_min} w_max={init.w_max} start={init.start}")
    return 0


def _cache_dir(args) -> str | None:
    return args.dir or os.environ.get("GRAPHTEMPO_CACHE_DIR") or None


def _cmd_cache(args) -> int:
    g = _load(args)
    attrs = _parse_attrs(args.attrs)
    cache = AggregateCache(_cache_dir(args))
    if args.cache_cmd == "build":
        n = precompute_timepoint_aggregates(g, attrs, cache)
        where = cache.root or "memory only"
        print(f"cached {n} per-time-point aggregates for {'+'.join(attrs)} in {where}")
        return 0
    # rollup: reuse cached per-point aggregates; fill them first when no
    # write-through directory was given (nothing to reuse from disk)
    if cache.root is None:
        precompute_timepoint_aggregates(g, attrs, cache)
    t = _parse_interval(args.interval, g)
    ag = rollup_time_union_all(cache, attrs, t, g.time)
    if args.drop_to:
        ag = rollup_attributes(ag, _parse_attrs(args.drop_to), directed=g.directed)
    _emit(aggregate_to_json(ag), args.out)
    return 0


# --------------------------------------------------------------- benchmarks

def _bench_graph(n_nodes: int, n_times: int, p: float, seed: int) -> TemporalGraph:
    rng = random.Random(seed)
    labels = tuple(f"t{i}" for i in range(n_times))
    nodes = [f"v{i}" for i in range(n_nodes)]
    presence = {u: tuple(1 for _ in labels) for u in nodes}
    edges = {}
    for i in range(n_nodes):
        for j in range(i + 1, n_nodes):
            bits = tuple(1 if rng.random() < p else 0 for _ in labels)
            if any(bits):
                edges[(nodes[i], nodes[j])] = bits
    colors = {u: rng.choice("abc") for u in nodes}
    return build_graph(labels, presence, edges, static_attrs={"color": colors})


def _edge_budget_graph(n_edges: int, n_times: int, seed: int) -> TemporalGraph:
    """Sparse always-present-node graph with a fixed number of edges (about
    5% pair density) and per-point edge presence of one half."""
    rng = random.Random(seed)
    n_nodes = max(8, int((2 * n_edges / 0.05) ** 0.5))
    labels = tuple(f"t{i}" for i in range(n_times))
    nodes = [f"v{i}" for i in range(n_nodes)]
    presence = {u: tuple(1 for _ in labels) for u in nodes}
    pairs = set()
    while len(pairs) < n_edges:
        i, j = rng.sample(range(n_nodes), 2)
        pairs.add((nodes[min(i, j)], nodes[max(i, j)]))
    edges = {}
    for pair in pairs:
        bits = [1 if rng.random() < 0.5 else 0 for _ in labels]
        bits[rng.randrange(n_times)] = 1  # keep the edge count exact
        edges[pair] = tuple(bits)
    colors = {u: rng.choice("abc") for u in nodes}
    return build_graph(labels, presence, edges, static_attrs={"color": colors})


def _timeit(fn, repeat: int = 3) -> float:
    best = float("inf")
    for _ in range(repeat):
        t0 = time_mod.perf_counter()
        fn()
        best = min(best, time_mod.perf_counter() - t0)
    return best


def _cmd_bench(args) -> int:
    if args.bench_cmd == "kernels":
        g = _bench_graph(args.nodes, 4, 0.25, seed=7)
        results = {}
        for name in sorted(kernels.backends()):
            impl = kernels.backends()[name]
            saved = kernels.enumerate_triangles
            kernels.enumerate_triangles = impl
            try:
                results[name] = _timeit(lambda: build_tri_graph(g))
            finally:
                kernels.enumerate_triangles = saved
        for name, t in sorted(results.items()):
            print(f"{name:>9}: {t * 1e3:8.2f} ms")
        if "compiled" in results and "python" in results:
            print(f"speedup: {results['python'] / results['compiled']:.1f}x")
        return 0
    if args.bench_cmd == "rollup":
        g = _edge_budget_graph(args.edges, args.points, seed=11)
        span = IntervalSet.of(0, args.points - 1)
        direct = _timeit(lambda: aggregate(g, span, ("color",), AggMode.ALL))
        cache = AggregateCache()
        precompute_timepoint_aggregates(g, ("color",), cache)
        rolled = _timeit(lambda: rollup_time_union_all(cache, ("color",), span, g.time))
        print("method,ms")
        print(f"direct,{direct * 1e3:.3f}")
        print(f"rollup,{rolled * 1e3:.3f}")
        print(f"ratio,{direct / rolled:.2f}")
        return 0
    # pattern strategies: intersection shrinks the graph, so op-first wins
    g = _bench_graph(args.nodes, 4, 0.25, seed=13)
    t1, t2 = IntervalSet.single(0), IntervalSet.single(3)
    op = ("intersection", t1, t2)
    span = IntervalSet.of(0, 3)
    tri_first = _timeit(
        lambda: aggregate_pattern(g, span, ("color",), op=op, strategy=Strategy.TRI_FIRST)
    )
    op_first = _timeit(
        lambda: aggregate_pattern(g, span, ("color",), op=op, strategy=Strategy.OP_FIRST)
    )
    print(f"tri-first: {tri_first * 1e3:8.2f} ms")
    print(f"op-first:  {op_first * 1e3:8.2f} ms")
    print(f"speedup: {tri_first / op_first:.1f}x")
    return 0


# -------------------------------------------------------------------- main

def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="graphtempo",
        description="temporal attributed graph aggregation and exploration",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("ingest", help="load and validate a graph, print a summary")
    _add_input_args(p)
    p.add_argument("--out", help="directory to re-export the normalized CSVs to")
    p.set_defaults(fn=_cmd_ingest)

    p = sub.add_parser("op", help="apply a temporal operator")
    p.add_argument("operator", choices=sorted(_OPERATORS))
    _add_input_args(p)
    p.add_argument("--t1", required=True, help="interval, e.g. t0..t1 or t2")
    p.add_argument("--t2", help="second interval (not used by project)")
    p.add_argument("--format", choices=["json", "dot"], default="json")
    p.add_argument("--out")
    p.set_defaults(fn=_cmd_op)

    p = sub.add_parser("aggregate", help="attribute-level aggregation")
    _add_input_args(p)
    p.add_argument("--interval", required=True)
    p.add_argument("--attrs", required=True, help="comma-separated attribute names")
    p.add_argument("--mode", choices=["dist", "all"], default="dist")
    p.add_argument("--fast", action="store_true", help="static-only fast path")
    p.add_argument("--format", choices=["json", "dot", "csv"], default="json")
    p.add_argument("--out")
    p.set_defaults(fn=_cmd_aggregate)

    p = sub.add_parser("tri", help="triangle-pattern aggregation")
    _add_input_args(p)
    p.add_argument("--interval", required=True)
    p.add_argument("--attrs", required=True)
    p.add_argument("--mode", choices=["dist", "all"], default="dist")
    p.add_argument("--op", choices=["union", "intersection", "difference", "project"])
    p.add_argument("--t1")
    p.add_argument("--t2")
    p.add_argument("--strategy", choices=["tri-first", "op-first"])
    p.add_argument("--format", choices=["json", "dot", "csv"], default="json")
    p.add_argument("--out")
    p.set_defaults(fn=_cmd_tri)

    p = sub.add_parser("evolve", help="evolution between two intervals")
    _add_input_args(p)
    p.add_argument("--t-old", required=True)
    p.add_argument("--t-new", required=True)
    p.add_argument("--attrs", default="", help="grouping attributes (json format)")
    p.add_argument("--mode", choices=["dist", "all"], default="dist")
    p.add_argument("--pattern", choices=["none", "triangle"], default="none")
    p.add_argument("--format", choices=["json", "dot"], default="json")
    p.add_argument("--out")
    p.set_defaults(fn=_cmd_evolve)

    def add_target_args(p):
        p.add_argument("--attrs", required=True)
        p.add_argument("--target-node", help="node key, values joined by /")
        p.add_argument("--target-edge", help="two keys joined by a comma, e.g. f,f")
        p.add_argument("--target-pattern", help="three member keys, e.g. ffm or f/1,f/2,m/1")

    p = sub.add_parser("explore", help="search interval pairs reaching a threshold")
    _add_input_args(p)
    p.add_argument("--event", choices=[e.value for e in Event], required=True)
    p.add_argument(
        "--extremal",
        choices=[e.value for e in Extremal] + sorted(_EXTREMAL_ALIASES),
        default="minimal",
    )
    p.add_argument(
        "--reference",
        choices=[r.value for r in Reference] + sorted(_REFERENCE_ALIASES),
        default="old-fixed",
    )
    add_target_args(p)
    p.add_argument("-k", type=int, required=True)
    p.add_argument("--heatmap", help="write the evaluated-weight grid as CSV")
    p.add_argument("--out")
    p.set_defaults(fn=_cmd_explore)

    p = sub.add_parser("init-k", help="suggest a starting threshold")
    _add_input_args(p)
    p.add_argument("--event", choices=[e.value for e in Event], required=True)
    add_target_args(p)
    p.set_defaults(fn=_cmd_init_k)

    p = sub.add_parser("cache", help="materialized per-time-point aggregates")
    cache_sub = p.add_subparsers(dest="cache_cmd", required=True)
    for name, help_text in (
        ("build", "precompute per-time-point aggregates"),
        ("rollup", "combine cached aggregates over an interval"),
    ):
        cp = cache_sub.add_parser(name, help=help_text)
        _add_input_args(cp)
        cp.add_argument("--attrs", required=True)
        cp.add_argument("--dir", help="write-through directory (or GRAPHTEMPO_CACHE_DIR)")
        if name == "rollup":
            cp.add_argument("--interval", required=True)
            cp.add_argument("--drop-to", help="project the result onto these attributes")
            cp.add_argument("--out")
        cp.set_defaults(fn=_cmd_cache)

    p = sub.add_parser("bench", help="micro-benchmarks")
    bench_sub = p.add_subparsers(dest="bench_cmd", required=True)
    for name in ("kernels", "rollup", "pattern"):
        bp = bench_sub.add_parser(name)
        bp.add_argument("--nodes", type=int, default=120)
        if name == "rollup":
            bp.add_argument("--edges", type=int, default=10000)
            bp.add_argument("--points", type=int, default=8)
        bp.set_defaults(fn=_cmd_bench)
    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    except GraphTempoError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
