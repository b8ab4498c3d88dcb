"""Attribute aggregation: fixture pins, oracle recounts, fast path."""

import pytest

from graphtempo import (
    AggMode,
    EntityLookupError,
    IntervalSet,
    UsageError,
    aggregate,
    aggregate_static_fast,
    union,
)

from conftest import oracle_aggregate, random_graph

T01 = IntervalSet.of(0, 1)


def test_gender_dist_full_graph(fig1):
    # [DERIVED] 4 women, 1 man over the whole history
    ag = aggregate(fig1, IntervalSet.of(0, 2), ("gender",), AggMode.DIST)
    assert ag.node_weight(("f",)) == 4
    assert ag.node_weight(("m",)) == 1


def test_gender_edges_t0(fig1):
    ag = aggregate(fig1, IntervalSet.single(0), ("gender",), AggMode.DIST)
    assert ag.edge_weight((("f",), ("f",))) == 2  # (u2,u4), (u3,u4)
    assert ag.edge_weight((("f",), ("m",))) == 3  # u1 with u2, u3, u4


def test_union_gender_publications(fig1):
    # [DERIVED] frozen counts for the union of t0 and t1
    u = union(fig1, IntervalSet.single(0), IntervalSet.single(1))
    dist = aggregate(u, T01, ("gender", "publications"), AggMode.DIST)
    assert dist.node_weight(("f", "1")) == 3  # u2, u3, u4
    alls = aggregate(u, T01, ("gender", "publications"), AggMode.ALL)
    # appearances: u2@t0, u2@t1, u3@t0, u4@t1
    assert alls.node_weight(("f", "1")) == 4


def test_missing_values_drop_appearances(fig1):
    # u1 has no publication count at t2; u5 none at t0
    ag = aggregate(fig1, IntervalSet.single(2), ("publications",), AggMode.DIST)
    assert sum(ag.node_weights.values()) == 3  # u2, u4, u5 only


def test_all_counts_appearances(fig1):
    ag = aggregate(fig1, IntervalSet.of(0, 2), ("gender",), AggMode.ALL)
    # presence bits per node: u1:2 u2:3 u3:1 u4:3 u5:2
    assert ag.node_weight(("f",)) == 9
    assert ag.node_weight(("m",)) == 2


def test_edge_pair_canonicalized(fig1):
    ag = aggregate(fig1, IntervalSet.single(0), ("gender",), AggMode.DIST)
    assert (("m",), ("f",)) not in ag.edge_weights  # only the sorted order


def test_unknown_attribute(fig1):
    with pytest.raises(EntityLookupError):
        aggregate(fig1, T01, ("nope",))


def test_empty_attribute_list(fig1):
    with pytest.raises(UsageError):
        aggregate(fig1, T01, ())


@pytest.mark.parametrize("seed", range(10))
@pytest.mark.parametrize("mode", [AggMode.DIST, AggMode.ALL])
def test_aggregate_matches_oracle(seed, mode):
    g = random_graph(seed, n_nodes=7, n_times=4, with_varying=True,
                     directed=(seed % 3 == 0))
    for pts in ([0], [1, 2], [0, 1, 2, 3]):
        for attrs in (("color",), ("load",), ("color", "load")):
            ag = aggregate(g, IntervalSet.from_points(pts), attrs, mode)
            node_w, edge_w = oracle_aggregate(g, pts, attrs, mode)
            assert ag.node_weights == node_w
            assert ag.edge_weights == edge_w


@pytest.mark.parametrize("seed", range(10))
@pytest.mark.parametrize("mode", [AggMode.DIST, AggMode.ALL])
def test_static_fast_path_equivalent(seed, mode):
    g = random_graph(seed, n_nodes=8, n_times=5, directed=(seed % 2 == 0))
    for pts in ([0], [0, 1, 2], [1, 3, 4]):
        ivs = IntervalSet.from_points(pts)
        assert aggregate_static_fast(g, ivs, ("color",), mode) == aggregate(
            g, ivs, ("color",), mode
        )


def test_fast_path_rejects_varying(fig1):
    with pytest.raises(UsageError):
        aggregate_static_fast(fig1, T01, ("publications",))
