"""Triangle pattern graph (tri-graph) construction and pattern-level
aggregation.

A tri-graph is itself a TemporalGraph: its nodes are sorted member
triples, alive where all three edges exist; its edges connect triangles
sharing at least one original node, alive where both triangles exist.
Attribute cells hold member-aligned value triples, so any temporal
operator applies to a tri-graph unchanged.

Triangles are always computed on the undirected view of the edges.
"""

from __future__ import annotations

import enum
from collections import defaultdict

import numpy as np

from . import kernels
from .aggregation import AggMode, AggregateGraph, _check_attrs, _count, _points, tuple_sort_key
from .errors import UnsupportedPatternError, UsageError
from .graph import MISSING, TemporalGraph
from .operators import difference, intersection, project, union
from .timeline import as_interval_set

TRIANGLE_SIZE = 3

_OPERATORS = {
    "union": union,
    "intersection": intersection,
    "difference": difference,
}


class Strategy(enum.Enum):
    TRI_FIRST = "tri-first"
    OP_FIRST = "op-first"


#: default evaluation order per operator: intersection shrinks the graph
#: before the expensive triangle scan, union is cheaper on prebuilt tri-graphs
DEFAULT_STRATEGY = {
    "union": Strategy.TRI_FIRST,
    "intersection": Strategy.OP_FIRST,
    "difference": Strategy.TRI_FIRST,
}


def check_pattern(pattern: str) -> None:
    if pattern != "triangle":
        raise UnsupportedPatternError(f"unsupported pattern {pattern!r}; only 'triangle' ships")


def pattern_key(member_tuples) -> tuple:
    """Canonical multiset key: member attribute tuples in sorted order."""
    return tuple(sorted((tuple(m) for m in member_tuples), key=tuple_sort_key))


def _undirected_edge_rows(g: TemporalGraph):
    """Edge presence keyed by index pair (min, max), ignoring direction."""
    merged: dict[tuple[int, int], np.ndarray] = {}
    for i, (u, v) in enumerate(g.edge_ids):
        a, b = g.node_index[u], g.node_index[v]
        if a == b:
            continue  # self-loops cannot close triangles
        key = (a, b) if a < b else (b, a)
        row = g.edge_bits[i]
        if key in merged:
            merged[key] = merged[key] | row
        else:
            merged[key] = row
    return merged


def build_tri_graph(g: TemporalGraph, t=None) -> TemporalGraph:
    """Temporal graph of closed triangles alive somewhere in t (default:
    the whole time domain)."""
    ivs = as_interval_set(t if t is not None else g.time.full_interval(), g.time)
    pts = ivs.points()
    mask = np.zeros(g.time.n, dtype=np.uint8)
    mask[pts] = 1

    merged = _undirected_edge_rows(g)
    pairs = sorted(merged)
    n_pairs = len(pairs)
    edge_bits = (
        np.array([merged[p] & mask for p in pairs], dtype=np.uint8)
        if n_pairs
        else np.zeros((0, g.time.n), dtype=np.uint8)
    )
    # sorted CSR over the undirected pair list
    adj: list[list[tuple[int, int]]] = [[] for _ in range(g.n_nodes)]
    for eid, (a, b) in enumerate(pairs):
        adj[a].append((b, eid))
        adj[b].append((a, eid))
    indptr = np.zeros(g.n_nodes + 1, dtype=np.int64)
    indices = np.zeros(2 * n_pairs, dtype=np.int32)
    eids = np.zeros(2 * n_pairs, dtype=np.int32)
    pos = 0
    for v in range(g.n_nodes):
        for nbr, eid in sorted(adj[v]):
            indices[pos] = nbr
            eids[pos] = eid
            pos += 1
        indptr[v + 1] = pos

    members, tri_bits = kernels.enumerate_triangles(
        g.n_nodes, indptr, indices, eids, edge_bits
    )

    tri_ids = []
    for row in members:
        ids = sorted((g.node_ids[int(row[0])], g.node_ids[int(row[1])], g.node_ids[int(row[2])]), key=str)
        tri_ids.append(tuple(ids))

    # triangles sharing an original node become adjacent tri-graph nodes
    by_member: dict = defaultdict(list)
    for idx, tri in enumerate(tri_ids):
        for m in tri:
            by_member[m].append(idx)
    tri_edge_ids = []
    tri_edge_bits = []
    seen = set()
    for bucket in by_member.values():
        for x in range(len(bucket)):
            for y in range(x + 1, len(bucket)):
                a, b = bucket[x], bucket[y]
                if a > b:
                    a, b = b, a
                if (a, b) in seen:
                    continue
                seen.add((a, b))
                bits = tri_bits[a] & tri_bits[b]
                if bits.any():
                    tri_edge_ids.append((tri_ids[a], tri_ids[b]))
                    tri_edge_bits.append(bits)
    tri_edge_bits = (
        np.array(tri_edge_bits, dtype=np.uint8)
        if tri_edge_bits
        else np.zeros((0, g.time.n), dtype=np.uint8)
    )

    static = {
        name: [tuple(col[g.node_index[m]] for m in tri) for tri in tri_ids]
        for name, col in g.static_attrs.items()
    }
    varying = {}
    for name, rows in g.varying_attrs.items():
        out = []
        for idx, tri in enumerate(tri_ids):
            mrows = [rows[g.node_index[m]] for m in tri]
            row = []
            for tt in range(g.time.n):
                if tri_bits[idx][tt] and all(r[tt] is not MISSING for r in mrows):
                    row.append(tuple(r[tt] for r in mrows))
                else:
                    row.append(MISSING)
            out.append(row)
        varying[name] = out

    return TemporalGraph(
        g.time, tri_ids, tri_bits, tri_edge_ids, tri_edge_bits,
        static, varying, directed=False, validate=False,
    )


def _tri_key_fn(tg: TemporalGraph, attrs: tuple[str, ...]):
    """Key function over tri-graph rows: combines per-attribute member
    triples into a sorted multiset of member tuples."""
    columns = []
    for a in attrs:
        if a in tg.static_attrs:
            columns.append((True, tg.static_attrs[a]))
        else:
            columns.append((False, tg.varying_attrs[a]))

    def key(i: int, t: int):
        per_attr = []
        for is_static, col in columns:
            v = col[i] if is_static else col[i][t]
            if v is MISSING:
                return None
            per_attr.append(v)
        return pattern_key(zip(*per_attr))

    return key


def _pattern_pair(ka: tuple, kb: tuple) -> tuple[tuple, tuple]:
    return tuple(sorted((ka, kb), key=lambda k: tuple(tuple_sort_key(m) for m in k)))


def iter_tri_node_appearances(tg: TemporalGraph, pts, attrs):
    """Yields (tri_id, t, pattern_key) for present triangles with full keys."""
    key = _tri_key_fn(tg, attrs)
    for i, tri in enumerate(tg.node_ids):
        for t in pts:
            if tg.node_bits[i, t]:
                k = key(i, t)
                if k is not None:
                    yield tri, t, k


def iter_tri_edge_appearances(tg: TemporalGraph, pts, attrs):
    """Yields (tri_edge_id, t, (key_a, key_b)) with the pair canonicalized."""
    key = _tri_key_fn(tg, attrs)
    for i, (a, b) in enumerate(tg.edge_ids):
        ia, ib = tg.node_index[a], tg.node_index[b]
        for t in pts:
            if tg.edge_bits[i, t]:
                ka = key(ia, t)
                kb = key(ib, t)
                if ka is not None and kb is not None:
                    yield (a, b), t, _pattern_pair(ka, kb)


def aggregate_tri_graph(tg: TemporalGraph, t, attrs, mode: AggMode = AggMode.DIST) -> AggregateGraph:
    """Attribute aggregation of a tri-graph with pattern multiset keys."""
    attrs = _check_attrs(tg, attrs)
    pts = _points(tg, t)
    node_weights = _count(iter_tri_node_appearances(tg, pts, attrs), mode)
    edge_weights = _count(iter_tri_edge_appearances(tg, pts, attrs), mode)
    return AggregateGraph(node_weights, edge_weights, mode, attrs)


def aggregate_pattern(
    g: TemporalGraph,
    t,
    attrs,
    mode: AggMode = AggMode.DIST,
    op: tuple | None = None,
    strategy: Strategy | None = None,
    pattern: str = "triangle",
) -> AggregateGraph:
    """Pattern aggregation, optionally composed with a temporal operator.

    op is (name, t1, t2) with name in {union, intersection, difference} or
    ("project", t1). TRI_FIRST builds the tri-graph and applies the
    operator to it; OP_FIRST applies the operator first and builds the
    tri-graph of the (often much smaller) result.
    """
    check_pattern(pattern)
    if op is None:
        return aggregate_tri_graph(build_tri_graph(g, t), t, attrs, mode)
    name = op[0]
    if name == "project":
        operator, args = project, op[1:2]
    elif name in _OPERATORS:
        operator, args = _OPERATORS[name], op[1:3]
    else:
        raise UsageError(f"unknown operator {name!r}")
    if strategy is None:
        strategy = DEFAULT_STRATEGY.get(name, Strategy.TRI_FIRST)
    if strategy is Strategy.TRI_FIRST:
        tg = operator(build_tri_graph(g), *args)
    else:
        tg = build_tri_graph(operator(g, *args), t)
    return aggregate_tri_graph(tg, t, attrs, mode)
