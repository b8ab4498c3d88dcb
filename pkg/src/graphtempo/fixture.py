"""Canonical 5-node, 3-time-point co-authorship fixture used across the
test suite and CLI demos.

Node presence, gender, and publication counts follow the reference
tables; the edge list is the unique minimal set consistent with the
documented triangle sets per time point (two triangles at t0, two at t1,
none at t2) and was frozen after brute-force verification.
"""

from __future__ import annotations

from .graph import MISSING, TemporalGraph, build_graph

FIXTURE_EDGES = {
    "t0": [("u1", "u2"), ("u1", "u3"), ("u1", "u4"), ("u2", "u4"), ("u3", "u4")],
    "t1": [("u1", "u2"), ("u1", "u4"), ("u2", "u4"), ("u2", "u5"), ("u4", "u5")],
    "t2": [("u2", "u4"), ("u4", "u5")],
}


def build_fixture_fig1() -> TemporalGraph:
    labels = ("t0", "t1", "t2")
    presence = {
        "u1": (1, 1, 0),
        "u2": (1, 1, 1),
        "u3": (1, 0, 0),
        "u4": (1, 1, 1),
        "u5": (0, 1, 1),
    }
    gender = {"u1": "m", "u2": "f", "u3": "f", "u4": "f", "u5": "f"}
    publications = {
        "u1": ("3", "1", MISSING),
        "u2": ("1", "1", "1"),
        "u3": ("1", MISSING, MISSING),
        "u4": ("2", "1", "1"),
        "u5": (MISSING, "2", "2"),
    }
    edge_presence: dict[tuple, list[int]] = {}
    for t, ts in enumerate(labels):
        for e in FIXTURE_EDGES[ts]:
            edge_presence.setdefault(e, [0, 0, 0])[t] = 1
    return build_graph(
        labels,
        presence,
        edge_presence,
        static_attrs={"gender": gender},
        varying_attrs={"publications": publications},
        directed=False,
    )
