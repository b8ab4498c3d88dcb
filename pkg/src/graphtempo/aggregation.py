"""Attribute-level grouping of nodes and edges with COUNT weights.

Grouping keys are tuples of attribute values in query order. DIST counts
unique entities per key; ALL counts every (entity, time) appearance.
"""

from __future__ import annotations

import enum
from collections import Counter
from dataclasses import dataclass
from typing import Iterator

import numpy as np

from .errors import EntityLookupError, UsageError
from .graph import MISSING, TemporalGraph
from .timeline import IntervalSet, as_interval_set


class AggMode(enum.Enum):
    DIST = "dist"
    ALL = "all"


def sort_key(value) -> str:
    """Deterministic total order over heterogeneous attribute values."""
    return str(value)


def tuple_sort_key(tup: tuple) -> tuple[str, ...]:
    return tuple(str(v) for v in tup)


def canonical_pair(a: tuple, b: tuple, directed: bool) -> tuple[tuple, tuple]:
    if directed:
        return (a, b)
    return tuple(sorted((a, b), key=tuple_sort_key))


@dataclass
class AggregateGraph:
    """Weighted graph over attribute tuples (or pattern attribute multisets)."""

    node_weights: dict
    edge_weights: dict
    mode: AggMode
    attrs: tuple[str, ...]

    def node_weight(self, key: tuple) -> int:
        return self.node_weights.get(tuple(key), 0)

    def edge_weight(self, key: tuple) -> int:
        return self.edge_weights.get((tuple(key[0]), tuple(key[1])), 0)

    def is_empty(self) -> bool:
        return not self.node_weights and not self.edge_weights

    def __eq__(self, other):
        return (
            isinstance(other, AggregateGraph)
            and self.node_weights == other.node_weights
            and self.edge_weights == other.edge_weights
            and self.mode == other.mode
            and tuple(self.attrs) == tuple(other.attrs)
        )


def _check_attrs(g: TemporalGraph, attrs) -> tuple[str, ...]:
    attrs = tuple(attrs)
    if not attrs:
        raise UsageError("attribute list must be non-empty")
    known = set(g.static_attrs) | set(g.varying_attrs)
    for a in attrs:
        if a not in known:
            raise EntityLookupError(f"unknown attribute {a!r}")
    return attrs


def _points(g: TemporalGraph, t) -> list[int]:
    ivs = as_interval_set(t, g.time) if not isinstance(t, IntervalSet) else t
    pts = ivs.points()
    if not pts:
        raise UsageError("aggregation interval is empty")
    return pts


def node_key_fn(g: TemporalGraph, attrs: tuple[str, ...]):
    """Returns f(node_row, t) -> key tuple or None when any value is MISSING."""
    columns = []
    for a in attrs:
        if a in g.static_attrs:
            columns.append((True, g.static_attrs[a]))
        else:
            columns.append((False, g.varying_attrs[a]))

    def key(i: int, t: int):
        out = []
        for is_static, col in columns:
            v = col[i] if is_static else col[i][t]
            if v is MISSING:
                return None
            out.append(v)
        return tuple(out)

    return key


def iter_node_appearances(
    g: TemporalGraph, pts: list[int], attrs: tuple[str, ...]
) -> Iterator[tuple]:
    """Yields (node_id, t, key) for every present (node, t) with a full key."""
    key = node_key_fn(g, attrs)
    bits = g.node_bits
    for i, u in enumerate(g.node_ids):
        for t in pts:
            if bits[i, t]:
                k = key(i, t)
                if k is not None:
                    yield u, t, k


def iter_edge_appearances(
    g: TemporalGraph, pts: list[int], attrs: tuple[str, ...]
) -> Iterator[tuple]:
    """Yields (edge_id, t, (key_u, key_v)) with the pair canonicalized for
    undirected graphs."""
    key = node_key_fn(g, attrs)
    bits = g.edge_bits
    for i, e in enumerate(g.edge_ids):
        iu = g.node_index[e[0]]
        iv = g.node_index[e[1]]
        for t in pts:
            if bits[i, t]:
                ku = key(iu, t)
                kv = key(iv, t)
                if ku is not None and kv is not None:
                    yield e, t, canonical_pair(ku, kv, g.directed)


def _count(appearances, mode: AggMode) -> dict:
    weights: Counter = Counter()
    if mode is AggMode.DIST:
        seen = set()
        for ent, _t, key in appearances:
            if (ent, key) not in seen:
                seen.add((ent, key))
                weights[key] += 1
    else:
        for _ent, _t, key in appearances:
            weights[key] += 1
    return dict(weights)


def aggregate(g: TemporalGraph, t, attrs, mode: AggMode = AggMode.DIST) -> AggregateGraph:
    """Group nodes and edges of g over the interval set t by attribute tuple."""
    attrs = _check_attrs(g, attrs)
    pts = _points(g, t)
    node_weights = _count(iter_node_appearances(g, pts, attrs), mode)
    edge_weights = _count(iter_edge_appearances(g, pts, attrs), mode)
    return AggregateGraph(node_weights, edge_weights, mode, attrs)


def aggregate_static_fast(
    g: TemporalGraph, t, attrs, mode: AggMode = AggMode.DIST
) -> AggregateGraph:
    """Same contract as aggregate() for all-static attribute lists.

    Skips the per-time-point unpivot: each entity has one fixed key, so DIST
    reduces to counting entities alive in t, and ALL to summing presence-bit
    column counts.
    """
    attrs = _check_attrs(g, attrs)
    for a in attrs:
        if a not in g.static_attrs:
            raise UsageError(f"attribute {a!r} is not static; use aggregate()")
    pts = _points(g, t)
    cols = [g.static_attrs[a] for a in attrs]

    node_weights: Counter = Counter()
    node_alive = g.node_bits[:, pts]
    counts = node_alive.sum(axis=1) if g.n_nodes else np.zeros(0)
    for i in range(g.n_nodes):
        c = int(counts[i])
        if c:
            key = tuple(col[i] for col in cols)
            node_weights[key] += 1 if mode is AggMode.DIST else c

    edge_weights: Counter = Counter()
    if g.n_edges:
        edge_alive = g.edge_bits[:, pts]
        ecounts = edge_alive.sum(axis=1)
        for i, (u, v) in enumerate(g.edge_ids):
            c = int(ecounts[i])
            if c:
                iu, iv = g.node_index[u], g.node_index[v]
                ku = tuple(col[iu] for col in cols)
                kv = tuple(col[iv] for col in cols)
                pair = canonical_pair(ku, kv, g.directed)
                edge_weights[pair] += 1 if mode is AggMode.DIST else c
    return AggregateGraph(dict(node_weights), dict(edge_weights), mode, attrs)
