"""Temporal operators producing sub-temporal-graphs: project, union,
intersection, difference.

All operators keep the original time domain and mask presence bits to the
retained time points; entity rows that do not qualify are dropped. Results
are new immutable graphs.
"""

from __future__ import annotations

from typing import Iterable

import numpy as np

from .graph import TemporalGraph
from .timeline import Interval, IntervalSet, as_interval_set


def _any_at(bits: np.ndarray, points: list[int]) -> np.ndarray:
    if bits.shape[0] == 0:
        return np.zeros(0, dtype=bool)
    return bits[:, points].any(axis=1)


def _all_at(bits: np.ndarray, points: list[int]) -> np.ndarray:
    if bits.shape[0] == 0:
        return np.zeros(0, dtype=bool)
    return bits[:, points].all(axis=1)


def _endpoint_rows(g: TemporalGraph, edge_keep: np.ndarray) -> np.ndarray:
    """Boolean node mask: endpoints of kept edges."""
    out = np.zeros(g.n_nodes, dtype=bool)
    for i in np.flatnonzero(edge_keep):
        u, v = g.edge_ids[i]
        out[g.node_index[u]] = True
        out[g.node_index[v]] = True
    return out


def project(g: TemporalGraph, t1: Interval) -> TemporalGraph:
    """Entities valid throughout t1; timestamps restricted to t1."""
    g.time.check(t1)
    pts = list(t1.points())
    return g.select(_all_at(g.node_bits, pts), _all_at(g.edge_bits, pts), pts)


def union(g: TemporalGraph, t1, t2) -> TemporalGraph:
    """Entities existing somewhere in t1 or t2; timestamps in t1 union t2."""
    pts = _coverage(g, t1, t2)
    return g.select(_any_at(g.node_bits, pts), _any_at(g.edge_bits, pts), pts)


def intersection(g: TemporalGraph, t1, t2) -> TemporalGraph:
    """Entities existing somewhere in t1 AND somewhere in t2.

    Retained timestamps cover t1 union t2 (the definition's timestamp rule);
    swap `_coverage` for an intersection policy here if ever needed - weight
    computations downstream depend only on entity sets and per-point values.
    """
    p1 = as_interval_set(t1, g.time).points()
    p2 = as_interval_set(t2, g.time).points()
    node_keep = _any_at(g.node_bits, p1) & _any_at(g.node_bits, p2)
    edge_keep = _any_at(g.edge_bits, p1) & _any_at(g.edge_bits, p2)
    return g.select(node_keep, edge_keep, sorted(set(p1) | set(p2)))


def difference(g: TemporalGraph, t1, t2) -> TemporalGraph:
    """Edges in t1 and nowhere in t2; nodes likewise, or endpoints of kept
    edges. Timestamps restricted to t1."""
    p1 = as_interval_set(t1, g.time).points()
    p2 = as_interval_set(t2, g.time).points()
    edge_keep = _any_at(g.edge_bits, p1) & ~_any_at(g.edge_bits, p2)
    node_keep = _any_at(g.node_bits, p1) & (
        ~_any_at(g.node_bits, p2) | _endpoint_rows(g, edge_keep)
    )
    return g.select(node_keep, edge_keep, p1)


def difference_vs_throughout(g: TemporalGraph, t1, t2) -> TemporalGraph:
    """Difference where membership in the subtracted side t2 requires
    presence throughout t2: an entity present at some but not all points of
    t2 still counts as changed. Used by intersection-semantics exploration
    when the extension interval is the subtracted side."""
    p1 = as_interval_set(t1, g.time).points()
    p2 = as_interval_set(t2, g.time).points()
    edge_keep = _any_at(g.edge_bits, p1) & ~_all_at(g.edge_bits, p2)
    node_keep = _any_at(g.node_bits, p1) & (
        ~_all_at(g.node_bits, p2) | _endpoint_rows(g, edge_keep)
    )
    return g.select(node_keep, edge_keep, p1)


def restrict_throughout(g: TemporalGraph, points: Iterable[int]) -> TemporalGraph:
    """Subgraph of entities present at every given point; timestamps kept.

    This is the all-points filter behind intersection semantics on an
    exploration side: the entity set of G[t_i] ^ G[t_i+1] ^ ... is exactly
    the set of entities present throughout those points.
    """
    pts = sorted(set(points))
    for p in pts:
        g.time.check(Interval(p, p))
    return g.select(
        _all_at(g.node_bits, pts), _all_at(g.edge_bits, pts), range(g.time.n)
    )


def _coverage(g: TemporalGraph, t1, t2) -> list[int]:
    p1 = as_interval_set(t1, g.time).points()
    p2 = as_interval_set(t2, g.time).points()
    return sorted(set(p1) | set(p2))
