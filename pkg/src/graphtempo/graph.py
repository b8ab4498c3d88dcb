"""In-memory temporal attributed graph backed by presence bitmaps.

Nodes and edges each carry one presence bit per time point, stored as a
dense uint8 matrix. Static attributes are one column per attribute; a
time-varying attribute is a full (entity x time) matrix with an explicit
MISSING marker wherever the entity is absent.
"""

from __future__ import annotations

from typing import Hashable, Mapping, Sequence

import numpy as np

from .errors import ConsistencyError, EntityLookupError, UsageError
from .timeline import TimeDomain


class _Missing:
    __slots__ = ()

    def __repr__(self):
        return "MISSING"

    def __reduce__(self):
        return (_missing_instance, ())


MISSING = _Missing()

#: literal used for MISSING cells in CSV files
MISSING_TOKEN = "-"


def _missing_instance():
    return MISSING


def canonical_edge(u, v, directed: bool) -> tuple:
    if directed:
        return (u, v)
    return (u, v) if str(u) <= str(v) else (v, u)


class TemporalGraph:
    """Immutable temporal attributed graph.

    Node ids are opaque hashables (strings for loaded graphs, member
    tuples for tri-graphs). Edge ids are (source, target) pairs over node
    ids, canonicalized to (min, max) by string order when undirected.
    """

    def __init__(
        self,
        time: TimeDomain,
        node_ids: Sequence[Hashable],
        node_bits: np.ndarray,
        edge_ids: Sequence[tuple],
        edge_bits: np.ndarray,
        static_attrs: Mapping[str, Sequence] | None = None,
        varying_attrs: Mapping[str, Sequence[Sequence]] | None = None,
        directed: bool = False,
        validate: bool = True,
    ):
        self.time = time
        self.node_ids = list(node_ids)
        self.edge_ids = [tuple(e) for e in edge_ids]
        self.node_bits = np.ascontiguousarray(node_bits, dtype=np.uint8)
        self.edge_bits = np.ascontiguousarray(edge_bits, dtype=np.uint8)
        if self.node_bits.shape != (len(self.node_ids), time.n):
            self.node_bits = self.node_bits.reshape(len(self.node_ids), time.n)
        if self.edge_bits.shape != (len(self.edge_ids), time.n):
            self.edge_bits = self.edge_bits.reshape(len(self.edge_ids), time.n)
        self.static_attrs = {k: list(v) for k, v in (static_attrs or {}).items()}
        self.varying_attrs = {
            k: [list(row) for row in rows] for k, rows in (varying_attrs or {}).items()
        }
        self.directed = directed
        self.node_index = {u: i for i, u in enumerate(self.node_ids)}
        self.edge_index = {e: i for i, e in enumerate(self.edge_ids)}
        if len(self.node_index) != len(self.node_ids):
            raise ConsistencyError("duplicate node ids")
        if len(self.edge_index) != len(self.edge_ids):
            raise ConsistencyError("duplicate edge ids")
        if validate:
            self._validate()

    # -- introspection ----------------------------------------------------

    @property
    def n_nodes(self) -> int:
        return len(self.node_ids)

    @property
    def n_edges(self) -> int:
        return len(self.edge_ids)

    def attr_names(self) -> list[str]:
        return list(self.static_attrs) + list(self.varying_attrs)

    def is_static(self, attr: str) -> bool:
        if attr in self.static_attrs:
            return True
        if attr in self.varying_attrs:
            return False
        raise EntityLookupError(f"unknown attribute {attr!r}")

    def nodes_at(self, t: int) -> list:
        return [u for u, i in zip(self.node_ids, range(self.n_nodes)) if self.node_bits[i, t]]

    def edges_at(self, t: int) -> list[tuple]:
        return [e for e, i in zip(self.edge_ids, range(self.n_edges)) if self.edge_bits[i, t]]

    def lookup_attribute(self, u, attr: str, t: int):
        """Attribute value of node u at time index t; static attrs ignore t."""
        if u not in self.node_index:
            raise EntityLookupError(f"unknown node {u!r}")
        i = self.node_index[u]
        if attr in self.static_attrs:
            return self.static_attrs[attr][i]
        if attr in self.varying_attrs:
            if not (0 <= t < self.time.n):
                raise EntityLookupError(f"time index {t} out of range")
            return self.varying_attrs[attr][i][t]
        raise EntityLookupError(f"unknown attribute {attr!r}")

    # -- derivation -------------------------------------------------------

    def select(self, node_keep: np.ndarray, edge_keep: np.ndarray, time_points) -> TemporalGraph:
        """New graph with the kept rows, bits masked to the given time points.

        Varying values are reset to MISSING wherever the masked presence bit
        is 0. Callers guarantee that kept edges only reference kept nodes.
        """
        mask = np.zeros(self.time.n, dtype=np.uint8)
        mask[list(time_points)] = 1
        node_rows = np.flatnonzero(node_keep)
        edge_rows = np.flatnonzero(edge_keep)
        node_ids = [self.node_ids[i] for i in node_rows]
        edge_ids = [self.edge_ids[i] for i in edge_rows]
        node_bits = self.node_bits[node_rows] & mask
        edge_bits = self.edge_bits[edge_rows] & mask
        static = {k: [col[i] for i in node_rows] for k, col in self.static_attrs.items()}
        varying = {}
        for name, rows in self.varying_attrs.items():
            out = []
            for new_i, i in enumerate(node_rows):
                bits = node_bits[new_i]
                out.append([rows[i][t] if bits[t] else MISSING for t in range(self.time.n)])
            varying[name] = out
        return TemporalGraph(
            self.time, node_ids, node_bits, edge_ids, edge_bits,
            static, varying, self.directed, validate=False,
        )

    # -- checks -----------------------------------------------------------

    def _validate(self):
        n = self.time.n
        for name, col in self.static_attrs.items():
            if len(col) != self.n_nodes:
                raise ConsistencyError(f"static attribute {name!r} has wrong length")
        for name, rows in self.varying_attrs.items():
            if len(rows) != self.n_nodes:
                raise ConsistencyError(f"varying attribute {name!r} has wrong row count")
            for i, row in enumerate(rows):
                if len(row) != n:
                    raise ConsistencyError(
                        f"varying attribute {name!r} row {self.node_ids[i]!r} has wrong width"
                    )
                for t, value in enumerate(row):
                    if value is not MISSING and not self.node_bits[i, t]:
                        raise ConsistencyError(
                            f"attribute {name!r} value for absent node "
                            f"{self.node_ids[i]!r} at {self.time.labels[t]}"
                        )
        if self.n_edges:
            src = np.empty(self.n_edges, dtype=np.int64)
            dst = np.empty(self.n_edges, dtype=np.int64)
            for i, (u, v) in enumerate(self.edge_ids):
                if u not in self.node_index or v not in self.node_index:
                    missing = u if u not in self.node_index else v
                    raise ConsistencyError(f"edge {self.edge_ids[i]!r} references unknown node {missing!r}")
                src[i] = self.node_index[u]
                dst[i] = self.node_index[v]
            ok = self.edge_bits <= (self.node_bits[src] & self.node_bits[dst])
            if not ok.all():
                bad = np.argwhere(~ok)[0]
                raise ConsistencyError(
                    f"edge {self.edge_ids[bad[0]]!r} present at "
                    f"{self.time.labels[bad[1]]} but an endpoint is absent"
                )

    # -- misc -------------------------------------------------------------

    def __repr__(self):
        return (
            f"TemporalGraph(n={self.time.n}, nodes={self.n_nodes}, "
            f"edges={self.n_edges}, directed={self.directed})"
        )

    def equal_content(self, other: TemporalGraph) -> bool:
        """Structural equality of presence matrices and attribute arrays."""
        return (
            self.time.labels == other.time.labels
            and self.node_ids == other.node_ids
            and self.edge_ids == other.edge_ids
            and np.array_equal(self.node_bits, other.node_bits)
            and np.array_equal(self.edge_bits, other.edge_bits)
            and self.static_attrs == other.static_attrs
            and self.varying_attrs == other.varying_attrs
            and self.directed == other.directed
        )


def build_graph(
    time_labels: Sequence[str],
    node_presence: Mapping[Hashable, Sequence[int]],
    edge_presence: Mapping[tuple, Sequence[int]],
    static_attrs: Mapping[str, Mapping[Hashable, object]] | None = None,
    varying_attrs: Mapping[str, Mapping[Hashable, Sequence]] | None = None,
    directed: bool = False,
) -> TemporalGraph:
    """Convenience constructor from per-entity presence dicts.

    Edge keys are canonicalized when undirected; presence rows of edges
    mapping to the same canonical pair are OR-ed together.
    """
    time = TimeDomain(tuple(time_labels))
    node_ids = list(node_presence)
    node_bits = np.array([list(node_presence[u]) for u in node_ids], dtype=np.uint8)
    node_bits = node_bits.reshape(len(node_ids), time.n)
    merged: dict[tuple, np.ndarray] = {}
    for (u, v), bits in edge_presence.items():
        key = canonical_edge(u, v, directed)
        row = np.asarray(list(bits), dtype=np.uint8)
        if key in merged:
            merged[key] |= row
        else:
            merged[key] = row
    edge_ids = list(merged)
    edge_bits = (
        np.array([merged[e] for e in edge_ids], dtype=np.uint8)
        if edge_ids
        else np.zeros((0, time.n), dtype=np.uint8)
    )
    static = {}
    for name, per_node in (static_attrs or {}).items():
        try:
            static[name] = [per_node[u] for u in node_ids]
        except KeyError as exc:
            raise ConsistencyError(f"static attribute {name!r} missing for node {exc.args[0]!r}")
    varying = {}
    for name, per_node in (varying_attrs or {}).items():
        rows = []
        for i, u in enumerate(node_ids):
            row = list(per_node.get(u, [MISSING] * time.n))
            if len(row) != time.n:
                raise UsageError(f"varying attribute {name!r} row for {u!r} has wrong width")
            rows.append(row)
        varying[name] = rows
    return TemporalGraph(time, node_ids, node_bits, edge_ids, edge_bits, static, varying, directed)
