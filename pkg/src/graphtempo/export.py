"""Serialization of results to JSON, DOT, and CSV.

All exports are deterministic: collections are emitted in sorted key
order so repeated runs produce byte-identical output.
"""

from __future__ import annotations

import csv
import io
import json

from .aggregation import AggregateGraph
from .evolution import AggregateEvolutionGraph, EvolutionGraph
from .exploration import ExplorationResult
from .graph import MISSING, TemporalGraph


def _key_str(key) -> str:
    if isinstance(key, tuple):
        return "|".join(_key_str(v) for v in key)
    return str(key)


def _jsonable(key):
    if isinstance(key, tuple):
        return [_jsonable(v) for v in key]
    return key


def _sorted_items(weights: dict):
    return sorted(weights.items(), key=lambda kv: _key_str(kv[0]))


# ---------------------------------------------------------------- aggregates

def aggregate_to_json(ag: AggregateGraph) -> str:
    if ag.is_empty():
        return "{}"
    doc = {
        "mode": ag.mode.value,
        "attrs": list(ag.attrs),
        "nodes": [
            {"key": _jsonable(k), "weight": w} for k, w in _sorted_items(ag.node_weights)
        ],
        "edges": [
            {"key": _jsonable(k), "weight": w} for k, w in _sorted_items(ag.edge_weights)
        ],
    }
    return json.dumps(doc, indent=2, sort_keys=True)


def aggregate_to_dot(ag: AggregateGraph, name: str = "aggregate") -> str:
    lines = [f"graph {name} {{"]
    for key, w in _sorted_items(ag.node_weights):
        lines.append(f'  "{_key_str(key)}" [label="{_key_str(key)} ({w})"];')
    for (ka, kb), w in _sorted_items(ag.edge_weights):
        lines.append(f'  "{_key_str(ka)}" -- "{_key_str(kb)}" [label="{w}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def aggregate_to_csv(ag: AggregateGraph) -> str:
    buf = io.StringIO()
    w = csv.writer(buf)
    w.writerow(["kind", "key", "weight"])
    for key, weight in _sorted_items(ag.node_weights):
        w.writerow(["node", _key_str(key), weight])
    for key, weight in _sorted_items(ag.edge_weights):
        w.writerow(["edge", _key_str(key), weight])
    return buf.getvalue()


# ----------------------------------------------------------------- evolution

def _triple_doc(key, triple) -> dict:
    s, g, r = triple
    total = s + g + r
    return {
        "key": _jsonable(key),
        "stability": s,
        "growth": g,
        "shrinkage": r,
        "total": total,
        "percent": {
            "stability": round(100.0 * s / total, 4) if total else 0.0,
            "growth": round(100.0 * g / total, 4) if total else 0.0,
            "shrinkage": round(100.0 * r / total, 4) if total else 0.0,
        },
    }


def evolution_to_json(aeg: AggregateEvolutionGraph) -> str:
    doc = {
        "mode": aeg.mode.value,
        "attrs": list(aeg.attrs),
        "pattern": aeg.pattern,
        "nodes": [_triple_doc(k, t) for k, t in _sorted_items(aeg.node_triples)],
        "edges": [_triple_doc(k, t) for k, t in _sorted_items(aeg.edge_triples)],
    }
    return json.dumps(doc, indent=2, sort_keys=True)


def evolution_overlay_to_dot(ev: EvolutionGraph, name: str = "evolution") -> str:
    """Overlay drawing: entity labels carry their S/G/R membership set."""
    nl = ev.node_labels()
    el = ev.edge_labels()
    lines = [f"graph {name} {{"]
    for node in sorted(nl, key=str):
        tags = "".join(sorted(nl[node]))
        lines.append(f'  "{node}" [label="{node} [{tags}]"];')
    for (u, v) in sorted(el, key=lambda e: (str(e[0]), str(e[1]))):
        tags = "".join(sorted(el[(u, v)]))
        lines.append(f'  "{u}" -- "{v}" [label="{tags}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


# --------------------------------------------------------------- exploration

def exploration_to_json(res: ExplorationResult) -> str:
    doc = {
        "event": res.query.event.value,
        "extremal": res.query.extremal.value,
        "reference": res.query.reference.value,
        "target": {
            "kind": res.query.target.kind,
            "attrs": list(res.query.target.attrs),
            "key": _jsonable(res.query.target.key),
        },
        "k": res.query.k,
        "evaluations": res.evaluations,
        "pairs": [
            {
                "reference": p.reference,
                "extension": [p.extension.start, p.extension.end],
                "weight": p.weight,
            }
            for p in res.pairs
        ],
    }
    return json.dumps(doc, indent=2, sort_keys=True)


def exploration_heatmap_csv(res: ExplorationResult) -> str:
    """Reference x extension-length grid of every evaluated weight; cells
    never evaluated (pruned) are left empty."""
    refs = sorted({r for r, _ in res.weights})
    lengths = sorted({l for _, l in res.weights})
    buf = io.StringIO()
    w = csv.writer(buf)
    w.writerow(["reference", *(f"len{l}" for l in lengths)])
    for r in refs:
        w.writerow([r, *(res.weights.get((r, l), "") for l in lengths)])
    return buf.getvalue()


# ------------------------------------------------------------ temporal graph

def graph_to_json(g: TemporalGraph) -> str:
    doc = {
        "time": list(g.time.labels),
        "directed": g.directed,
        "nodes": [
            {
                "id": _jsonable(u),
                "presence": [int(b) for b in g.node_bits[i]],
                "static": {a: _jsonable(col[i]) for a, col in sorted(g.static_attrs.items())},
                "varying": {
                    a: [None if v is MISSING else _jsonable(v) for v in rows[i]]
                    for a, rows in sorted(g.varying_attrs.items())
                },
            }
            for i, u in sorted(enumerate(g.node_ids), key=lambda p: str(p[1]))
        ],
        "edges": [
            {
                "source": _jsonable(u),
                "target": _jsonable(v),
                "presence": [int(b) for b in g.edge_bits[i]],
            }
            for i, (u, v) in sorted(enumerate(g.edge_ids), key=lambda p: (str(p[1][0]), str(p[1][1])))
        ],
    }
    return json.dumps(doc, indent=2, sort_keys=True)


def graph_to_dot(g: TemporalGraph, name: str = "temporal") -> str:
    edge_op = "->" if g.directed else "--"
    kind = "digraph" if g.directed else "graph"
    lines = [f"{kind} {name} {{"]
    for i, u in sorted(enumerate(g.node_ids), key=lambda p: str(p[1])):
        alive = ",".join(g.time.labels[t] for t in range(g.time.n) if g.node_bits[i, t])
        lines.append(f'  "{_key_str(u)}" [label="{_key_str(u)} [{alive}]"];')
    for i, (u, v) in sorted(enumerate(g.edge_ids), key=lambda p: (str(p[1][0]), str(p[1][1]))):
        alive = ",".join(g.time.labels[t] for t in range(g.time.n) if g.edge_bits[i, t])
        lines.append(f'  "{_key_str(u)}" {edge_op} "{_key_str(v)}" [label="{alive}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
