"""Partial materialization of aggregates.

Per-(attribute list, time point) aggregates in ALL mode are the reusable
building blocks: appearance counts over disjoint time points add up, so
the aggregate of any interval is the keywise sum of its per-point
aggregates (time rollup), and dropping grouping attributes is a key
projection plus weight sum (attribute rollup). DIST weights deduplicate
entities across time points and do not add up; time rollups refuse them.

The cache is an in-memory dict with an optional JSON write-through
directory laid out as ``<root>/<attrs-key>/<timepoint>.json``.
"""

from __future__ import annotations

import json
import threading
from collections import Counter
from pathlib import Path

from .aggregation import AggMode, AggregateGraph, aggregate, canonical_pair
from .errors import CacheMissError, UnsupportedRollupError, UsageError
from .graph import TemporalGraph
from .timeline import as_interval_set


def _attrs_key(attrs) -> str:
    return "+".join(attrs)


def _encode(ag: AggregateGraph) -> dict:
    return {
        "mode": ag.mode.value,
        "attrs": list(ag.attrs),
        "nodes": [
            {"key": list(k), "weight": w}
            for k, w in sorted(ag.node_weights.items(), key=lambda kv: [str(v) for v in kv[0]])
        ],
        "edges": [
            {"key": [list(k[0]), list(k[1])], "weight": w}
            for k, w in sorted(ag.edge_weights.items(), key=lambda kv: str(kv[0]))
        ],
    }


def _decode(doc: dict) -> AggregateGraph:
    nodes = {tuple(e["key"]): e["weight"] for e in doc["nodes"]}
    edges = {(tuple(e["key"][0]), tuple(e["key"][1])): e["weight"] for e in doc["edges"]}
    return AggregateGraph(nodes, edges, AggMode(doc["mode"]), tuple(doc["attrs"]))


class AggregateCache:
    """Thread-safe store of per-time-point aggregates, keyed by
    (attribute list, time point index)."""

    def __init__(self, root=None):
        self.root = Path(root) if root is not None else None
        self._entries: dict[tuple[str, int], AggregateGraph] = {}
        self._lock = threading.Lock()
        self.hits = 0
        self.misses = 0

    def _path(self, akey: str, t: int) -> Path:
        return self.root / akey / f"{t}.json"

    def put(self, attrs, t: int, ag: AggregateGraph) -> None:
        akey = _attrs_key(tuple(attrs))
        with self._lock:
            self._entries[(akey, t)] = ag
        if self.root is not None:
            path = self._path(akey, t)
            path.parent.mkdir(parents=True, exist_ok=True)
            path.write_text(json.dumps(_encode(ag), sort_keys=True))

    def get(self, attrs, t: int) -> AggregateGraph:
        akey = _attrs_key(tuple(attrs))
        with self._lock:
            ag = self._entries.get((akey, t))
        if ag is not None:
            self.hits += 1
            return ag
        if self.root is not None:
            path = self._path(akey, t)
            if path.exists():
                ag = _decode(json.loads(path.read_text()))
                with self._lock:
                    self._entries[(akey, t)] = ag
                self.hits += 1
                return ag
        self.misses += 1
        raise CacheMissError(f"no cached aggregate for attrs={akey!r} at t={t}")

    def __contains__(self, key: tuple) -> bool:
        akey = _attrs_key(tuple(key[0]))
        with self._lock:
            if (akey, key[1]) in self._entries:
                return True
        return self.root is not None and self._path(akey, key[1]).exists()

    def stats(self) -> dict[str, int]:
        with self._lock:
            size = len(self._entries)
        return {"hits": self.hits, "misses": self.misses, "entries": size}


def precompute_timepoint_aggregates(g: TemporalGraph, attrs, cache: AggregateCache) -> int:
    """Fill the cache with the ALL-mode aggregate of every single time
    point; returns the number of entries written."""
    attrs = tuple(attrs)
    for t in range(g.time.n):
        cache.put(attrs, t, aggregate(g, t, attrs, AggMode.ALL))
    return g.time.n


def rollup_time_union_all(cache: AggregateCache, attrs, t, time_domain) -> AggregateGraph:
    """Aggregate of an interval set as the keywise sum of its cached
    per-point ALL aggregates. Any uncached point raises CacheMissError."""
    attrs = tuple(attrs)
    pts = as_interval_set(t, time_domain).points()
    if not pts:
        raise UsageError("rollup interval is empty")
    node_weights: Counter = Counter()
    edge_weights: Counter = Counter()
    for p in pts:
        ag = cache.get(attrs, p)
        if ag.mode is not AggMode.ALL:
            raise UnsupportedRollupError(
                "DIST weights deduplicate entities across time points and cannot be summed"
            )
        node_weights.update(ag.node_weights)
        edge_weights.update(ag.edge_weights)
    return AggregateGraph(dict(node_weights), dict(edge_weights), AggMode.ALL, attrs)


def rollup_attributes(ag: AggregateGraph, sub_attrs, directed: bool = False) -> AggregateGraph:
    """Coarser aggregate over a subset of the grouping attributes: project
    each key to the kept positions and sum the weights.

    Exact whenever every counted appearance had a complete fine key;
    appearances that were dropped for a MISSING value in a projected-away
    attribute cannot be recovered here."""
    sub_attrs = tuple(sub_attrs)
    for a in sub_attrs:
        if a not in ag.attrs:
            raise UnsupportedRollupError(
                f"{a!r} is not among the cached grouping attributes {ag.attrs}"
            )
    positions = [ag.attrs.index(a) for a in sub_attrs]
    if not positions:
        raise UsageError("attribute rollup needs at least one kept attribute")

    def proj(key: tuple) -> tuple:
        return tuple(key[p] for p in positions)

    node_weights: Counter = Counter()
    for key, w in ag.node_weights.items():
        node_weights[proj(key)] += w
    edge_weights: Counter = Counter()
    for (ka, kb), w in ag.edge_weights.items():
        edge_weights[canonical_pair(proj(ka), proj(kb), directed)] += w
    return AggregateGraph(dict(node_weights), dict(edge_weights), ag.mode, sub_attrs)
