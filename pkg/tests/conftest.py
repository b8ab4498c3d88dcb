"""Shared fixtures, a seeded random-graph generator, and independent
reference implementations (oracles) used to cross-check the library.

The oracles deliberately avoid the library's vectorized code paths: they
work entity by entity through sets and lookup_attribute so that a bug in
the bitmap machinery cannot hide in both sides of a comparison.
"""

from __future__ import annotations

import itertools
import random

import pytest

from graphtempo import (
    MISSING,
    AggMode,
    build_fixture_fig1,
    build_graph,
    canonical_edge,
)


@pytest.fixture
def fig1():
    return build_fixture_fig1()


# ------------------------------------------------------------- generators

COLORS = ("a", "b")


def random_graph(
    seed: int,
    n_nodes: int = 6,
    n_times: int = 4,
    p_node: float = 0.8,
    p_edge: float = 0.45,
    with_varying: bool = False,
    p_value_missing: float = 0.2,
    directed: bool = False,
):
    """Seeded temporal graph with a static `color` attribute and an optional
    time-varying `load` attribute. Edge bits respect endpoint presence."""
    rng = random.Random(seed)
    labels = tuple(f"t{i}" for i in range(n_times))
    nodes = [f"v{i}" for i in range(n_nodes)]
    presence = {}
    for u in nodes:
        bits = [1 if rng.random() < p_node else 0 for _ in labels]
        if not any(bits):
            bits[rng.randrange(n_times)] = 1
        presence[u] = tuple(bits)
    edges = {}
    pair_iter = (
        itertools.permutations(nodes, 2) if directed else itertools.combinations(nodes, 2)
    )
    for u, v in pair_iter:
        bits = tuple(
            1 if presence[u][t] and presence[v][t] and rng.random() < p_edge else 0
            for t in range(n_times)
        )
        if any(bits):
            edges[(u, v)] = bits
    static = {"color": {u: rng.choice(COLORS) for u in nodes}}
    varying = None
    if with_varying:
        load = {}
        for u in nodes:
            load[u] = tuple(
                rng.choice(("lo", "hi"))
                if presence[u][t] and rng.random() >= p_value_missing
                else MISSING
                for t in range(n_times)
            )
        varying = {"load": load}
    return build_graph(labels, presence, edges, static_attrs=static,
                       varying_attrs=varying, directed=directed)


# ------------------------------------------------------ entity-set oracles

def nodes_any(g, pts):
    return {u for i, u in enumerate(g.node_ids) if any(g.node_bits[i, t] for t in pts)}


def nodes_all(g, pts):
    return {u for i, u in enumerate(g.node_ids) if all(g.node_bits[i, t] for t in pts)}


def edges_any(g, pts):
    return {e for i, e in enumerate(g.edge_ids) if any(g.edge_bits[i, t] for t in pts)}


def edges_all(g, pts):
    return {e for i, e in enumerate(g.edge_ids) if all(g.edge_bits[i, t] for t in pts)}


def oracle_project(g, pts):
    return nodes_all(g, pts), edges_all(g, pts)


def oracle_union(g, p1, p2):
    pts = sorted(set(p1) | set(p2))
    return nodes_any(g, pts), edges_any(g, pts)


def oracle_intersection(g, p1, p2):
    return (
        nodes_any(g, p1) & nodes_any(g, p2),
        edges_any(g, p1) & edges_any(g, p2),
    )


def oracle_difference(g, p1, p2):
    edges = edges_any(g, p1) - edges_any(g, p2)
    endpoints = {x for e in edges for x in e}
    nodes = (nodes_any(g, p1) - nodes_any(g, p2)) | (nodes_any(g, p1) & endpoints)
    return nodes, edges


# ------------------------------------------------------ aggregation oracle

def _node_key(g, u, t, attrs):
    vals = []
    for a in attrs:
        v = g.lookup_attribute(u, a, t)
        if v is MISSING:
            return None
        vals.append(v)
    return tuple(vals)


def oracle_aggregate(g, pts, attrs, mode):
    """Appearance-by-appearance recount of aggregate weights."""
    node_w: dict = {}
    node_seen = set()
    for i, u in enumerate(g.node_ids):
        for t in pts:
            if not g.node_bits[i, t]:
                continue
            key = _node_key(g, u, t, attrs)
            if key is None:
                continue
            if mode is AggMode.DIST:
                if (u, key) in node_seen:
                    continue
                node_seen.add((u, key))
            node_w[key] = node_w.get(key, 0) + 1
    edge_w: dict = {}
    edge_seen = set()
    for i, (u, v) in enumerate(g.edge_ids):
        for t in pts:
            if not g.edge_bits[i, t]:
                continue
            ku = _node_key(g, u, t, attrs)
            kv = _node_key(g, v, t, attrs)
            if ku is None or kv is None:
                continue
            pair = (ku, kv) if g.directed else tuple(
                sorted((ku, kv), key=lambda k: tuple(str(x) for x in k))
            )
            if mode is AggMode.DIST:
                if ((u, v), pair) in edge_seen:
                    continue
                edge_seen.add(((u, v), pair))
            edge_w[pair] = edge_w.get(pair, 0) + 1
    return node_w, edge_w


# --------------------------------------------------------- triangle oracle

def oracle_triangles(g, t):
    """All closed triangles at time index t by cubic enumeration."""
    present = {e for i, e in enumerate(g.edge_ids) if g.edge_bits[i, t]}
    und = {frozenset(e) for e in present if e[0] != e[1]}
    out = set()
    for u, v, w in itertools.combinations(sorted(g.node_ids, key=str), 3):
        if {frozenset((u, v)), frozenset((u, w)), frozenset((v, w))} <= und:
            out.add((u, v, w))
    return out


def k4_graph():
    """Complete graph on four nodes at a single time point."""
    nodes = ["a", "b", "c", "d"]
    presence = {u: (1,) for u in nodes}
    edges = {e: (1,) for e in itertools.combinations(nodes, 2)}
    return build_graph(("t0",), presence, edges,
                       static_attrs={"color": {u: "x" for u in nodes}})


def undirected_edge_set(edge_ids):
    return {canonical_edge(u, v, False) for (u, v) in edge_ids}
