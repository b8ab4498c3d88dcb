"""CSV ingestion and export of temporal attributed graphs.

File formats:
  edges:    header ``source,target,time``; one row per (edge, time point).
  static:   header ``id,<attr>,...``.
  varying:  one file per attribute; header ``id,<t-label>,...``; "-" = MISSING.
  presence: optional; header ``id,<t-label>,...``; cells 0/1.
"""

from __future__ import annotations

import csv
from pathlib import Path

import numpy as np

from .errors import ConsistencyError, ParseError
from .graph import MISSING, MISSING_TOKEN, TemporalGraph, canonical_edge
from .timeline import TimeDomain


def _read_rows(path):
    path = Path(path)
    with path.open(newline="") as fh:
        for line_no, row in enumerate(csv.reader(fh), start=1):
            if row and any(cell.strip() for cell in row):
                yield line_no, [cell.strip() for cell in row]


def _read_table(path, kind):
    """Returns (header, rows) for an id-keyed CSV table."""
    rows = list(_read_rows(path))
    if not rows:
        raise ParseError(path, 1, f"empty {kind} file")
    (_, header), body = rows[0], rows[1:]
    width = len(header)
    for line_no, row in body:
        if len(row) != width:
            raise ParseError(path, line_no, f"expected {width} cells, got {len(row)}")
    return header, body


def load_temporal_graph(
    edge_file,
    static_file=None,
    varying_files=None,
    node_presence_file=None,
    directed: bool = False,
) -> TemporalGraph:
    """Assemble a TemporalGraph from its CSV pieces.

    The time domain comes from the presence/varying file headers when
    present (order of first appearance), else from the lexicographically
    sorted time labels of the edge file. When no presence file is given, a
    node exists at t iff it is incident to some edge at t.
    """
    varying_files = dict(varying_files or {})

    # edge occurrences
    header, body = _read_table(edge_file, "edges")
    if [h.lower() for h in header[:3]] != ["source", "target", "time"]:
        raise ParseError(edge_file, 1, "expected header source,target,time")
    occurrences = []
    for line_no, row in body:
        if len(row) < 3 or not row[0] or not row[1] or not row[2]:
            raise ParseError(edge_file, line_no, f"malformed edge row {row!r}")
        occurrences.append((row[0], row[1], row[2]))

    # time domain
    time_labels: list[str] | None = None
    for path in ([node_presence_file] if node_presence_file else []) + list(varying_files.values()):
        h, _ = _read_table(path, "time-labeled")
        labels = h[1:]
        if time_labels is None:
            time_labels = labels
        elif labels != time_labels:
            raise ConsistencyError(f"time labels of {path} disagree with other files")
    if time_labels is None:
        time_labels = sorted({t for _, _, t in occurrences})
    time = TimeDomain(tuple(time_labels))
    t_index = {lbl: i for i, lbl in enumerate(time.labels)}

    # node universe
    static_cols: dict[str, dict[str, str]] = {}
    declared_nodes: list[str] = []
    if static_file is not None:
        h, body_s = _read_table(static_file, "static")
        names = h[1:]
        static_cols = {name: {} for name in names}
        for line_no, row in body_s:
            node = row[0]
            if not node:
                raise ParseError(static_file, line_no, "empty node id")
            declared_nodes.append(node)
            for name, value in zip(names, row[1:]):
                static_cols[name][node] = value
        declared = set(declared_nodes)
        for u, v, t in occurrences:
            for x in (u, v):
                if x not in declared:
                    raise ConsistencyError(f"edge references unknown node {x!r}")

    node_ids: list[str] = list(dict.fromkeys(declared_nodes))
    known = set(node_ids)
    for u, v, _ in occurrences:
        for x in (u, v):
            if x not in known:
                known.add(x)
                node_ids.append(x)
    node_pos = {u: i for i, u in enumerate(node_ids)}

    # edge presence
    edge_rows: dict[tuple, np.ndarray] = {}
    for u, v, t in occurrences:
        if t not in t_index:
            raise ConsistencyError(f"edge time label {t!r} not in the time domain")
        key = canonical_edge(u, v, directed)
        row = edge_rows.setdefault(key, np.zeros(time.n, dtype=np.uint8))
        row[t_index[t]] = 1
    edge_ids = sorted(edge_rows, key=lambda e: (str(e[0]), str(e[1])))
    edge_bits = (
        np.array([edge_rows[e] for e in edge_ids], dtype=np.uint8)
        if edge_ids
        else np.zeros((0, time.n), dtype=np.uint8)
    )

    # node presence
    node_bits = np.zeros((len(node_ids), time.n), dtype=np.uint8)
    if node_presence_file is not None:
        _, body_p = _read_table(node_presence_file, "presence")
        listed = set()
        for line_no, row in body_p:
            node = row[0]
            if node not in node_pos:
                node_ids.append(node)
                node_pos[node] = len(node_ids) - 1
                node_bits = np.vstack([node_bits, np.zeros((1, time.n), dtype=np.uint8)])
            listed.add(node)
            for t, cell in enumerate(row[1:]):
                if cell not in ("0", "1"):
                    raise ParseError(node_presence_file, line_no, f"presence cell {cell!r} not 0/1")
                node_bits[node_pos[node], t] = int(cell)
    else:
        for u, v, t in occurrences:
            node_bits[node_pos[u], t_index[t]] = 1
            node_bits[node_pos[v], t_index[t]] = 1

    static = {name: [col.get(u) for u in node_ids] for name, col in static_cols.items()}

    varying = {}
    for name, path in varying_files.items():
        h, body_v = _read_table(path, "varying")
        rows = {u: [MISSING] * time.n for u in node_ids}
        for line_no, row in body_v:
            node = row[0]
            if node not in node_pos:
                raise ConsistencyError(f"varying attribute {name!r} lists unknown node {node!r}")
            for t, cell in enumerate(row[1:]):
                if cell == MISSING_TOKEN:
                    continue
                if not node_bits[node_pos[node], t]:
                    raise ConsistencyError(
                        f"varying value for absent node {node!r} at {time.labels[t]} in {path}"
                    )
                rows[node][t] = cell
        varying[name] = [rows[u] for u in node_ids]

    return TemporalGraph(time, node_ids, node_bits, edge_ids, edge_bits, static, varying, directed)


def export_temporal_graph(g: TemporalGraph, out_dir) -> dict[str, Path]:
    """Write a graph back to the ingestion format; returns the paths.

    Round trip: loading the written files reproduces the presence matrices
    and attribute arrays exactly (values are stringified).
    """
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    paths: dict[str, Path] = {}

    edges_path = out_dir / "edges.csv"
    with edges_path.open("w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(["source", "target", "time"])
        for i, (u, v) in enumerate(g.edge_ids):
            for t in range(g.time.n):
                if g.edge_bits[i, t]:
                    w.writerow([u, v, g.time.labels[t]])
    paths["edges"] = edges_path

    presence_path = out_dir / "presence.csv"
    with presence_path.open("w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(["id", *g.time.labels])
        for i, u in enumerate(g.node_ids):
            w.writerow([u, *(int(b) for b in g.node_bits[i])])
    paths["presence"] = presence_path

    if g.static_attrs:
        static_path = out_dir / "static.csv"
        with static_path.open("w", newline="") as fh:
            w = csv.writer(fh)
            names = list(g.static_attrs)
            w.writerow(["id", *names])
            for i, u in enumerate(g.node_ids):
                w.writerow([u, *(g.static_attrs[name][i] for name in names)])
        paths["static"] = static_path

    for name, rows in g.varying_attrs.items():
        vpath = out_dir / f"varying_{name}.csv"
        with vpath.open("w", newline="") as fh:
            w = csv.writer(fh)
            w.writerow(["id", *g.time.labels])
            for i, u in enumerate(g.node_ids):
                w.writerow(
                    [u, *(MISSING_TOKEN if v is MISSING else v for v in rows[i])]
                )
        paths[f"varying_{name}"] = vpath
    return paths
