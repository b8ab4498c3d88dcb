"""Temporal attributed graphs: interval operators, attribute- and
triangle-pattern aggregation, evolution analysis, threshold-driven
interval-pair exploration, and partial materialization of aggregates."""

from .aggregation import (
    AggMode,
    AggregateGraph,
    aggregate,
    aggregate_static_fast,
)
from .errors import (
    CacheMissError,
    ConsistencyError,
    EntityLookupError,
    GraphTempoError,
    IntervalError,
    ParseError,
    UnsupportedPatternError,
    UnsupportedRollupError,
    UsageError,
)
from .evolution import (
    AggregateEvolutionGraph,
    EvolutionGraph,
    aggregate_evolution,
    evolution_graph,
)
from .exploration import (
    Event,
    ExplorationQuery,
    ExplorationResult,
    Extremal,
    IntervalPair,
    Reference,
    Target,
    ThresholdInit,
    brute_force_explore,
    event_weight,
    explore,
    i_explore,
    init_threshold,
    u_explore,
)
from .fixture import build_fixture_fig1
from .graph import MISSING, TemporalGraph, build_graph, canonical_edge
from .io import export_temporal_graph, load_temporal_graph
from .kernels import BACKEND, backends
from .materialization import (
    AggregateCache,
    precompute_timepoint_aggregates,
    rollup_attributes,
    rollup_time_union_all,
)
from .operators import difference, intersection, project, restrict_throughout, union
from .patterns import (
    Strategy,
    aggregate_pattern,
    aggregate_tri_graph,
    build_tri_graph,
    pattern_key,
)
from .timeline import Interval, IntervalSet, TimeDomain, as_interval_set

__version__ = "0.1.0"

__all__ = [
    "AggMode",
    "AggregateCache",
    "AggregateEvolutionGraph",
    "AggregateGraph",
    "BACKEND",
    "CacheMissError",
    "ConsistencyError",
    "EntityLookupError",
    "Event",
    "EvolutionGraph",
    "ExplorationQuery",
    "ExplorationResult",
    "Extremal",
    "GraphTempoError",
    "Interval",
    "IntervalError",
    "IntervalPair",
    "IntervalSet",
    "MISSING",
    "ParseError",
    "Reference",
    "Strategy",
    "Target",
    "TemporalGraph",
    "ThresholdInit",
    "TimeDomain",
    "UnsupportedPatternError",
    "UnsupportedRollupError",
    "UsageError",
    "aggregate",
    "aggregate_evolution",
    "aggregate_pattern",
    "aggregate_static_fast",
    "aggregate_tri_graph",
    "as_interval_set",
    "backends",
    "brute_force_explore",
    "build_fixture_fig1",
    "build_graph",
    "build_tri_graph",
    "canonical_edge",
    "difference",
    "event_weight",
    "evolution_graph",
    "explore",
    "export_temporal_graph",
    "i_explore",
    "init_threshold",
    "intersection",
    "load_temporal_graph",
    "pattern_key",
    "precompute_timepoint_aggregates",
    "project",
    "restrict_throughout",
    "rollup_attributes",
    "rollup_time_union_all",
    "u_explore",
    "union",
]
