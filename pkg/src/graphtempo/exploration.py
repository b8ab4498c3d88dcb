"""Search for interval pairs whose stability / growth / shrinkage weight
for a chosen target reaches a threshold k.

A query fixes one side of the pair at a reference time point and extends
the other side one point at a time:

  OLD_FIXED: reference i is the old side; the new side grows rightward,
             [i+1 .. i+l].
  NEW_FIXED: reference i is the new side; the old side grows leftward,
             [i-l .. i-1].

Minimal queries interpret the extension with union semantics (an entity
belongs to the extension side if it exists at some covered point), which
makes the weight non-decreasing or non-increasing in l depending on the
event/reference combination. Maximal queries use intersection semantics
(the entity must exist throughout the extension), flipping the
monotonicity. Each (event, extremal, reference) cell therefore maps to
one of four strategies:

  union scan        - weight grows with l: stop at the first l with w >= k
  intersection scan - weight shrinks with l: extend while w >= k, each
                      success replacing the shorter predecessor pair
  consecutive only  - weight shrinks with l under union semantics: only
                      l = 1 can qualify
  longest only      - weight grows with l under intersection semantics:
                      only the longest extension can qualify

Every aggregate-weight computation counts as one evaluation; all
evaluated (reference, length) -> weight cells are recorded for heatmaps.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field

from .aggregation import AggMode, aggregate, canonical_pair
from .errors import UsageError
from .graph import TemporalGraph
from .operators import (
    difference,
    difference_vs_throughout,
    intersection,
    restrict_throughout,
)
from .patterns import aggregate_tri_graph, build_tri_graph, pattern_key
from .timeline import Interval, IntervalSet, as_interval_set


class Event(enum.Enum):
    STABILITY = "stability"
    GROWTH = "growth"
    SHRINKAGE = "shrinkage"


class Extremal(enum.Enum):
    MINIMAL = "minimal"
    MAXIMAL = "maximal"


class Reference(enum.Enum):
    OLD_FIXED = "old-fixed"
    NEW_FIXED = "new-fixed"


@dataclass(frozen=True)
class Target:
    """What gets counted: a node key, an edge key pair, or a triangle
    pattern key, under the given grouping attributes."""

    kind: str  # "node" | "edge" | "pattern"
    attrs: tuple[str, ...]
    key: tuple

    def __post_init__(self):
        if self.kind not in ("node", "edge", "pattern"):
            raise UsageError(f"unknown target kind {self.kind!r}")
        object.__setattr__(self, "attrs", tuple(self.attrs))
        if self.kind == "node":
            object.__setattr__(self, "key", tuple(self.key))
        elif self.kind == "edge":
            a, b = self.key
            object.__setattr__(self, "key", (tuple(a), tuple(b)))
        else:
            object.__setattr__(self, "key", pattern_key(self.key))


@dataclass(frozen=True)
class ExplorationQuery:
    event: Event
    extremal: Extremal
    reference: Reference
    target: Target
    k: int

    def __post_init__(self):
        if self.k < 1:
            raise UsageError("threshold k must be >= 1")


@dataclass(frozen=True)
class IntervalPair:
    """A qualifying (reference point, extension interval) with its weight."""

    reference: int
    extension: Interval
    weight: int

    def old_new(self, ref_mode: Reference) -> tuple[IntervalSet, IntervalSet]:
        ref = IntervalSet.single(self.reference)
        ext = IntervalSet((self.extension,))
        return (ref, ext) if ref_mode is Reference.OLD_FIXED else (ext, ref)


@dataclass
class ExplorationResult:
    query: ExplorationQuery
    pairs: list[IntervalPair]
    evaluations: int
    weights: dict  # (reference, extension length) -> weight

    def as_set(self) -> set[tuple[int, int, int, int]]:
        return {(p.reference, p.extension.start, p.extension.end, p.weight) for p in self.pairs}


def _target_weight(h: TemporalGraph, pts, target: Target) -> int:
    """Weight of the target inside an operator-result graph."""
    if target.kind == "pattern":
        ag = aggregate_tri_graph(h, IntervalSet.from_points(pts), target.attrs, AggMode.DIST)
        return ag.node_weight(target.key)
    ag = aggregate(h, IntervalSet.from_points(pts), target.attrs, AggMode.DIST)
    if target.kind == "node":
        return ag.node_weight(target.key)
    return ag.edge_weight(canonical_pair(target.key[0], target.key[1], h.directed))


def _event_weight_on(base: TemporalGraph, event: Event, t_old, t_new, target: Target) -> int:
    """Event weight on a prepared base graph (tri-graph for pattern targets)."""
    p_old = as_interval_set(t_old, base.time).points()
    p_new = as_interval_set(t_new, base.time).points()
    if event is Event.STABILITY:
        h = intersection(base, t_old, t_new)
        pts = sorted(set(p_old) | set(p_new))
    elif event is Event.GROWTH:
        h = difference(base, t_new, t_old)
        pts = p_new
    else:
        h = difference(base, t_old, t_new)
        pts = p_old
    return _target_weight(h, pts, target)


def _prepare(g: TemporalGraph, target: Target) -> TemporalGraph:
    return build_tri_graph(g) if target.kind == "pattern" else g


def event_weight(g: TemporalGraph, event: Event, t_old, t_new, target: Target) -> int:
    """Stability / growth / shrinkage weight of a target between two intervals."""
    return _event_weight_on(_prepare(g, target), event, t_old, t_new, target)


class _Session:
    """One explore() run: shared base graph, evaluation counter, weight grid."""

    def __init__(self, g: TemporalGraph, query: ExplorationQuery):
        self.query = query
        self.base = _prepare(g, query.target)
        self.n = g.time.n
        self.evaluations = 0
        self.weights: dict[tuple[int, int], int] = {}

    def refs(self):
        if self.query.reference is Reference.OLD_FIXED:
            return [(i, self.n - 1 - i) for i in range(self.n - 1)]
        return [(i, i) for i in range(1, self.n)]

    def extension(self, ref: int, length: int) -> Interval:
        if self.query.reference is Reference.OLD_FIXED:
            return Interval(ref + 1, ref + length)
        return Interval(ref - length, ref - 1)

    def evaluate(self, ref: int, length: int, throughout: bool) -> int:
        ext = self.extension(ref, length)
        ref_iv = Interval(ref, ref)
        if self.query.reference is Reference.OLD_FIXED:
            t_old, t_new = ref_iv, ext
        else:
            t_old, t_new = ext, ref_iv
        event = self.query.event
        target = self.query.target
        if not throughout:
            w = _event_weight_on(self.base, event, t_old, t_new, target)
        elif event is Event.STABILITY or (
            event is Event.GROWTH and self.query.reference is Reference.OLD_FIXED
        ) or (
            event is Event.SHRINKAGE and self.query.reference is Reference.NEW_FIXED
        ):
            # the extension is the side whose entities get counted: keeping
            # only entities present throughout it realizes the all-points rule
            base = restrict_throughout(self.base, ext.points())
            w = _event_weight_on(base, event, t_old, t_new, target)
        else:
            # the extension is the subtracted side; "belongs there" must mean
            # present throughout, which a plain difference cannot express
            if event is Event.GROWTH:
                h = difference_vs_throughout(self.base, t_new, t_old)
                pts = list(t_new.points())
            else:
                h = difference_vs_throughout(self.base, t_old, t_new)
                pts = list(t_old.points())
            w = _target_weight(h, pts, target)
        self.evaluations += 1
        self.weights[(ref, length)] = w
        return w

    def entity_bound(self) -> int:
        # largest weight any pair can reach under DIST counting
        if self.query.target.kind == "edge":
            return self.base.n_edges
        return self.base.n_nodes

    def result(self, pairs: list[IntervalPair]) -> ExplorationResult:
        pairs.sort(key=lambda p: (p.reference, p.extension.start, p.extension.end))
        return ExplorationResult(self.query, pairs, self.evaluations, dict(self.weights))


def u_explore(g: TemporalGraph, query: ExplorationQuery) -> ExplorationResult:
    """Shortest qualifying extension per reference; union semantics, so the
    weight only grows with the extension and the scan stops at the first hit.

    When k exceeds the number of candidate entities no pair can ever
    qualify; only the consecutive pairs are touched before giving up."""
    s = _Session(g, query)
    if query.k > s.entity_bound():
        for ref, _max_len in s.refs():
            s.evaluate(ref, 1, throughout=False)
        return s.result([])
    pairs = []
    for ref, max_len in s.refs():
        for length in range(1, max_len + 1):
            w = s.evaluate(ref, length, throughout=False)
            if w >= query.k:
                pairs.append(IntervalPair(ref, s.extension(ref, length), w))
                break
    return s.result(pairs)


def i_explore(g: TemporalGraph, query: ExplorationQuery) -> ExplorationResult:
    """Longest qualifying extension per reference; intersection semantics, so
    the weight only shrinks with the extension. Each qualifying extension
    replaces its shorter predecessor until the weight drops below k."""
    s = _Session(g, query)
    pairs = []
    for ref, max_len in s.refs():
        best: IntervalPair | None = None
        for length in range(1, max_len + 1):
            w = s.evaluate(ref, length, throughout=True)
            if w < query.k:
                break
            best = IntervalPair(ref, s.extension(ref, length), w)
        if best is not None:
            pairs.append(best)
    return s.result(pairs)


def _consecutive_only(g: TemporalGraph, query: ExplorationQuery) -> ExplorationResult:
    """Minimal search where union-semantics weight shrinks with the extension:
    only the consecutive pair (length 1) can qualify."""
    s = _Session(g, query)
    pairs = []
    for ref, _max_len in s.refs():
        w = s.evaluate(ref, 1, throughout=False)
        if w >= query.k:
            pairs.append(IntervalPair(ref, s.extension(ref, 1), w))
    return s.result(pairs)


def _longest_only(g: TemporalGraph, query: ExplorationQuery) -> ExplorationResult:
    """Maximal search where intersection-semantics weight grows with the
    extension: only the longest available extension can qualify."""
    s = _Session(g, query)
    pairs = []
    for ref, max_len in s.refs():
        w = s.evaluate(ref, max_len, throughout=True)
        if w >= query.k:
            pairs.append(IntervalPair(ref, s.extension(ref, max_len), w))
    return s.result(pairs)


_DISPATCH = {
    (Event.STABILITY, Extremal.MINIMAL, Reference.OLD_FIXED): u_explore,
    (Event.STABILITY, Extremal.MINIMAL, Reference.NEW_FIXED): u_explore,
    (Event.STABILITY, Extremal.MAXIMAL, Reference.OLD_FIXED): i_explore,
    (Event.STABILITY, Extremal.MAXIMAL, Reference.NEW_FIXED): i_explore,
    (Event.GROWTH, Extremal.MINIMAL, Reference.OLD_FIXED): u_explore,
    (Event.GROWTH, Extremal.MINIMAL, Reference.NEW_FIXED): _consecutive_only,
    (Event.GROWTH, Extremal.MAXIMAL, Reference.OLD_FIXED): i_explore,
    (Event.GROWTH, Extremal.MAXIMAL, Reference.NEW_FIXED): _longest_only,
    (Event.SHRINKAGE, Extremal.MINIMAL, Reference.OLD_FIXED): _consecutive_only,
    (Event.SHRINKAGE, Extremal.MINIMAL, Reference.NEW_FIXED): u_explore,
    (Event.SHRINKAGE, Extremal.MAXIMAL, Reference.OLD_FIXED): _longest_only,
    (Event.SHRINKAGE, Extremal.MAXIMAL, Reference.NEW_FIXED): i_explore,
}


def explore(g: TemporalGraph, query: ExplorationQuery) -> ExplorationResult:
    """Dispatch a query to its pruned strategy (see the module docstring)."""
    return _DISPATCH[(query.event, query.extremal, query.reference)](g, query)


def brute_force_explore(g: TemporalGraph, query: ExplorationQuery) -> ExplorationResult:
    """Reference implementation: evaluate every (reference, length) cell and
    pick the extremal qualifying extension per reference. Quadratic in the
    number of time points; refuses large domains."""
    if g.time.n > 8:
        raise UsageError("brute-force exploration is limited to 8 time points")
    s = _Session(g, query)
    throughout = query.extremal is Extremal.MAXIMAL
    pairs = []
    for ref, max_len in s.refs():
        qualifying = []
        for length in range(1, max_len + 1):
            w = s.evaluate(ref, length, throughout=throughout)
            if w >= query.k:
                qualifying.append((length, w))
        if qualifying:
            length, w = (
                min(qualifying) if query.extremal is Extremal.MINIMAL else max(qualifying)
            )
            pairs.append(IntervalPair(ref, s.extension(ref, length), w))
    return s.result(pairs)


@dataclass
class ThresholdInit:
    """Suggested threshold range from the consecutive-pair weights."""

    w_min: int
    w_max: int
    start: int
    weights: list[int] = field(default_factory=list)


def init_threshold(g: TemporalGraph, event: Event, target: Target) -> ThresholdInit:
    """Seed k from the weights of all consecutive time-point pairs.

    Stability and growth searches start high (at the largest consecutive
    weight) and relax downward; shrinkage starts low and tightens upward.
    """
    base = _prepare(g, target)
    weights = [
        _event_weight_on(base, event, Interval(i, i), Interval(i + 1, i + 1), target)
        for i in range(g.time.n - 1)
    ]
    if not weights:
        return ThresholdInit(0, 0, 0, [])
    w_min, w_max = min(weights), max(weights)
    start = w_min if event is Event.SHRINKAGE else w_max
    return ThresholdInit(w_min, w_max, start, weights)
