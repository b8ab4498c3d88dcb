"""Evolution overlays and stability/growth/shrinkage weight triples."""

import pytest

from graphtempo import (
    AggMode,
    IntervalSet,
    UsageError,
    aggregate_evolution,
    evolution_graph,
    pattern_key,
)

T0 = IntervalSet.single(0)
T1 = IntervalSet.single(1)
FFM = pattern_key((("f",), ("f",), ("m",)))
FFF = pattern_key((("f",), ("f",), ("f",)))


def test_overlay_components(fig1):
    ev = evolution_graph(fig1, T0, T1)
    assert set(ev.stable.node_ids) == {"u1", "u2", "u4"}
    assert set(ev.shrink.node_ids) == {"u1", "u3", "u4"}
    assert set(ev.grow.node_ids) == {"u2", "u4", "u5"}


def test_overlay_labels(fig1):
    ev = evolution_graph(fig1, T0, T1)
    labels = ev.node_labels()
    assert labels["u3"] == frozenset({"R"})
    assert labels["u5"] == frozenset({"G"})
    assert labels["u4"] == frozenset({"S", "G", "R"})
    elabels = ev.edge_labels()
    assert elabels[("u2", "u5")] == frozenset({"G"})
    assert elabels[("u1", "u3")] == frozenset({"R"})


def test_node_triples_dist(fig1):
    # [DERIVED] (f,1): u2 stable with the key on both sides; u3 vanished
    aeg = aggregate_evolution(fig1, T0, T1, ("gender", "publications"))
    assert aeg.node_triple(("f", "1")) == (1, 0, 1)
    # u5 is the only truly new node, arriving with 2 publications
    # u4 holds (f,2) at t0 but (f,1) at t1: stable presence, no stable key
    assert aeg.node_triple(("f", "2")) == (0, 1, 0)


def test_gender_triples_dist(fig1):
    aeg = aggregate_evolution(fig1, T0, T1, ("gender",))
    # u2 and u4 stable; u5 appears; u3 vanishes
    assert aeg.node_triple(("f",)) == (2, 1, 1)
    assert aeg.node_triple(("m",)) == (1, 0, 0)


def test_triples_all_mode(fig1):
    aeg = aggregate_evolution(fig1, T0, T1, ("gender",), AggMode.ALL)
    # stable f entities u2,u4 appear at both points -> 2+2; new u5 once;
    # vanished u3 once
    assert aeg.node_triple(("f",)) == (4, 1, 1)
    assert aeg.node_triple(("m",)) == (2, 0, 0)


def test_edge_triples(fig1):
    aeg = aggregate_evolution(fig1, T0, T1, ("gender",))
    # f-f: (u2,u4) stable; (u2,u5),(u4,u5) appear; (u3,u4) vanishes
    assert aeg.edge_triple((("f",), ("f",))) == (1, 2, 1)
    # f-m: u1's edges to u2 and u4 persist; (u1,u3) vanishes
    assert aeg.edge_triple((("f",), ("m",))) == (2, 0, 1)


def test_pattern_triples(fig1):
    # [DERIVED] ffm stable (u1,u2,u4); fff appears ((u2,u4,u5)); ffm (u1,u3,u4) vanishes
    aeg = aggregate_evolution(fig1, T0, T1, ("gender",), pattern="triangle")
    assert aeg.node_triple(FFM) == (1, 0, 1)
    assert aeg.node_triple(FFF) == (0, 1, 0)


def test_unknown_pattern(fig1):
    with pytest.raises(UsageError):
        aggregate_evolution(fig1, T0, T1, ("gender",), pattern="square")


def test_interval_sides(fig1):
    # multi-point old side: anything alive in [t0,t1] but gone at t2
    aeg = aggregate_evolution(fig1, IntervalSet.of(0, 1), IntervalSet.single(2), ("gender",))
    # u1 and u3 vanish; u2,u4,u5 remain; nobody is new
    assert aeg.node_triple(("f",))[2] == 1  # u3
    assert aeg.node_triple(("m",))[2] == 1  # u1
    assert aeg.node_triple(("f",))[1] == 0
