"""Evolution graphs (stability / growth / shrinkage overlay) and their
aggregated form with per-key weight triples.

The overlay is built from three operator results: intersection for
stability and the two difference directions for shrinkage and growth.
Aggregated evolution weights count, per grouping key:

  stability  - entities carrying the key on both sides,
  growth     - entities absent from the old side, keyed by their new-side
               values,
  shrinkage  - entities absent from the new side, keyed by their old-side
               values.

Difference graphs keep surviving endpoints of removed edges so the
overlay stays connected, but an endpoint that merely lost an edge is not
itself a growth/shrinkage event, so those endpoints do not contribute to
the weight triples.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

import numpy as np

from .aggregation import (
    AggMode,
    _check_attrs,
    iter_edge_appearances,
    iter_node_appearances,
)
from .errors import UsageError
from .graph import TemporalGraph
from .operators import _any_at, difference, intersection
from .patterns import (
    build_tri_graph,
    iter_tri_edge_appearances,
    iter_tri_node_appearances,
)
from .timeline import as_interval_set

STABLE = "S"
GROW = "G"
SHRINK = "R"


@dataclass
class EvolutionGraph:
    """Overlay of the three component graphs with S/G/R labels."""

    stable: TemporalGraph
    shrink: TemporalGraph
    grow: TemporalGraph

    def _labels(self, attr: str) -> dict:
        out: dict = {}
        for label, g in ((STABLE, self.stable), (SHRINK, self.shrink), (GROW, self.grow)):
            for ent in getattr(g, attr):
                out.setdefault(ent, set()).add(label)
        return {k: frozenset(v) for k, v in out.items()}

    def node_labels(self) -> dict:
        return self._labels("node_ids")

    def edge_labels(self) -> dict:
        return self._labels("edge_ids")


def evolution_graph(g: TemporalGraph, t_old, t_new) -> EvolutionGraph:
    return EvolutionGraph(
        stable=intersection(g, t_old, t_new),
        shrink=difference(g, t_old, t_new),
        grow=difference(g, t_new, t_old),
    )


@dataclass
class AggregateEvolutionGraph:
    """Weight triples (stability, growth, shrinkage) per grouping key."""

    node_triples: dict
    edge_triples: dict
    attrs: tuple[str, ...]
    mode: AggMode
    pattern: str

    def node_triple(self, key: tuple) -> tuple[int, int, int]:
        return self.node_triples.get(tuple(key), (0, 0, 0))

    def edge_triple(self, key) -> tuple[int, int, int]:
        return self.edge_triples.get((tuple(key[0]), tuple(key[1])), (0, 0, 0))


def _collect(appearances):
    """Per-entity key counters from (entity, t, key) appearances."""
    keys: dict = {}
    for ent, _t, key in appearances:
        keys.setdefault(ent, Counter())[key] += 1
    return keys


def _component_weights(present_old, present_new, keys_old, keys_new, keys_union, mode):
    s: Counter = Counter()
    gr: Counter = Counter()
    r: Counter = Counter()
    for ent in present_old & present_new:
        ko = keys_old.get(ent, {})
        kn = keys_new.get(ent, {})
        for key in set(ko) & set(kn):
            s[key] += 1 if mode is AggMode.DIST else keys_union[ent][key]
    for ent in present_new - present_old:
        for key, c in keys_new.get(ent, {}).items():
            gr[key] += 1 if mode is AggMode.DIST else c
    for ent in present_old - present_new:
        for key, c in keys_old.get(ent, {}).items():
            r[key] += 1 if mode is AggMode.DIST else c
    triples = {}
    for key in set(s) | set(gr) | set(r):
        triples[key] = (s.get(key, 0), gr.get(key, 0), r.get(key, 0))
    return triples


def aggregate_evolution(
    g: TemporalGraph,
    t_old,
    t_new,
    attrs,
    mode: AggMode = AggMode.DIST,
    pattern: str = "none",
) -> AggregateEvolutionGraph:
    """Aggregate the three evolution components and join them by key.

    pattern="triangle" computes triangles on the full graph first
    (tri-first composition; a vanished triangle's edges may partially
    persist, so triangles of a difference graph would miss it)."""
    if pattern not in ("none", "triangle"):
        raise UsageError(f"unsupported evolution pattern {pattern!r}")
    pts_old = as_interval_set(t_old, g.time).points()
    pts_new = as_interval_set(t_new, g.time).points()
    pts_union = sorted(set(pts_old) | set(pts_new))

    if pattern == "triangle":
        base = build_tri_graph(g)
        node_iter, edge_iter = iter_tri_node_appearances, iter_tri_edge_appearances
    else:
        base = g
        node_iter, edge_iter = iter_node_appearances, iter_edge_appearances
    attrs = _check_attrs(base, attrs)

    node_present_old = {base.node_ids[i] for i in _rows_alive(base.node_bits, pts_old)}
    node_present_new = {base.node_ids[i] for i in _rows_alive(base.node_bits, pts_new)}
    edge_present_old = {base.edge_ids[i] for i in _rows_alive(base.edge_bits, pts_old)}
    edge_present_new = {base.edge_ids[i] for i in _rows_alive(base.edge_bits, pts_new)}

    node_triples = _component_weights(
        node_present_old,
        node_present_new,
        _collect(node_iter(base, pts_old, attrs)),
        _collect(node_iter(base, pts_new, attrs)),
        _collect(node_iter(base, pts_union, attrs)),
        mode,
    )
    edge_triples = _component_weights(
        edge_present_old,
        edge_present_new,
        _collect(edge_iter(base, pts_old, attrs)),
        _collect(edge_iter(base, pts_new, attrs)),
        _collect(edge_iter(base, pts_union, attrs)),
        mode,
    )
    return AggregateEvolutionGraph(node_triples, edge_triples, attrs, mode, pattern)


def _rows_alive(bits, pts):
    if bits.shape[0] == 0 or not pts:
        return []
    return list(np.flatnonzero(_any_at(bits, list(pts))))
