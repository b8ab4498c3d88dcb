"""Triangle enumeration, tri-graphs, and pattern aggregation."""

import pytest

from graphtempo import (
    AggMode,
    IntervalSet,
    Strategy,
    UnsupportedPatternError,
    aggregate_pattern,
    aggregate_tri_graph,
    build_tri_graph,
    pattern_key,
)

from conftest import k4_graph, oracle_triangles, random_graph

FFM = pattern_key((("f",), ("f",), ("m",)))
FFF = pattern_key((("f",), ("f",), ("f",)))


def _tri_at(tg, t):
    return {tg.node_ids[i] for i in range(tg.n_nodes) if tg.node_bits[i, t]}


def test_fixture_triangles_per_timepoint(fig1):
    # [DERIVED] two triangles at t0, two at t1, none at t2
    tg = build_tri_graph(fig1)
    assert _tri_at(tg, 0) == {("u1", "u2", "u4"), ("u1", "u3", "u4")}
    assert _tri_at(tg, 1) == {("u1", "u2", "u4"), ("u2", "u4", "u5")}
    assert _tri_at(tg, 2) == set()


def test_tri_graph_edges_share_members(fig1):
    tg = build_tri_graph(fig1)
    for (a, b) in tg.edge_ids:
        assert set(a) & set(b)


def test_k4_has_four_triangles_six_adjacencies():
    tg = build_tri_graph(k4_graph())
    assert tg.n_nodes == 4
    assert tg.n_edges == 6


def test_pattern_key_is_order_insensitive():
    assert pattern_key((("m",), ("f",), ("f",))) == FFM


def test_union_pattern_counts(fig1):
    # [DERIVED] ffm: (u1,u2,u4) both times + (u1,u3,u4) at t0 -> DIST 2 / ALL 3
    op = ("union", IntervalSet.single(0), IntervalSet.single(1))
    dist = aggregate_pattern(fig1, IntervalSet.of(0, 1), ("gender",), AggMode.DIST, op=op)
    assert dist.node_weight(FFM) == 2
    assert dist.node_weight(FFF) == 1
    alls = aggregate_pattern(fig1, IntervalSet.of(0, 1), ("gender",), AggMode.ALL, op=op)
    assert alls.node_weight(FFM) == 3


def test_strategies_agree(fig1):
    for name, t1, t2 in (
        ("union", IntervalSet.single(0), IntervalSet.single(1)),
        ("intersection", IntervalSet.single(0), IntervalSet.single(1)),
        ("difference", IntervalSet.single(0), IntervalSet.single(1)),
    ):
        span = IntervalSet.of(0, 1) if name != "difference" else IntervalSet.single(0)
        a = aggregate_pattern(fig1, span, ("gender",), op=(name, t1, t2),
                              strategy=Strategy.TRI_FIRST)
        b = aggregate_pattern(fig1, span, ("gender",), op=(name, t1, t2),
                              strategy=Strategy.OP_FIRST)
        if name == "difference":
            # a triangle can vanish while every edge survives somewhere, so
            # op-first only ever sees a subset of tri-first's triangles
            assert all(b.node_weight(k) <= w for k, w in a.node_weights.items())
        else:
            assert a == b


def test_only_triangles_supported(fig1):
    with pytest.raises(UnsupportedPatternError):
        aggregate_pattern(fig1, IntervalSet.single(0), ("gender",), pattern="square")


@pytest.mark.parametrize("seed", range(8))
def test_tri_graph_matches_cubic_oracle(seed):
    g = random_graph(seed, n_nodes=8, n_times=4, p_edge=0.5)
    tg = build_tri_graph(g)
    for t in range(g.time.n):
        assert _tri_at(tg, t) == oracle_triangles(g, t)


@pytest.mark.parametrize("seed", range(4))
def test_tri_graph_edge_bits(seed):
    g = random_graph(seed, n_nodes=8, n_times=3, p_edge=0.55)
    tg = build_tri_graph(g)
    for i, (a, b) in enumerate(tg.edge_ids):
        ia, ib = tg.node_index[a], tg.node_index[b]
        for t in range(g.time.n):
            assert tg.edge_bits[i, t] == (tg.node_bits[ia, t] and tg.node_bits[ib, t])


def test_tri_varying_attrs_are_member_triples(fig1):
    tg = build_tri_graph(fig1)
    i = tg.node_index[("u1", "u2", "u4")]
    assert tg.varying_attrs["publications"][i][0] == ("3", "1", "2")
    # both t0 triangles carry the {1,2,3} publication multiset
    ag = aggregate_tri_graph(tg, IntervalSet.single(0), ("publications",), AggMode.DIST)
    assert ag.node_weight(pattern_key((("3",), ("1",), ("2",)))) == 2
