"""Discrete, linearly ordered time domain plus intervals and interval sets.

Time points are addressed by dense indices 0..n-1; user-facing labels are
arbitrary strings whose order defines the linear order of the domain.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .errors import IntervalError, UsageError


@dataclass(frozen=True)
class TimeDomain:
    """Ordered collection of time-point labels."""

    labels: tuple[str, ...]

    def __post_init__(self):
        if len(self.labels) < 1:
            raise UsageError("time domain needs at least one time point")
        if len(set(self.labels)) != len(self.labels):
            raise UsageError("time-point labels must be unique")

    @property
    def n(self) -> int:
        return len(self.labels)

    def index(self, label: str) -> int:
        try:
            return self.labels.index(label)
        except ValueError:
            raise IntervalError(f"unknown time point {label!r}") from None

    def full_interval(self) -> Interval:
        return Interval(0, self.n - 1)

    def check(self, interval: Interval) -> None:
        if not (0 <= interval.start <= interval.end < self.n):
            raise IntervalError(
                f"interval [{interval.start}, {interval.end}] outside time domain of size {self.n}"
            )


@dataclass(frozen=True, order=True)
class Interval:
    """Inclusive run of consecutive time-point indices."""

    start: int
    end: int

    def __post_init__(self):
        if self.start < 0 or self.end < self.start:
            raise IntervalError(f"bad interval [{self.start}, {self.end}]")

    @property
    def length(self) -> int:
        return self.end - self.start + 1

    def points(self) -> range:
        return range(self.start, self.end + 1)

    def __contains__(self, t: int) -> bool:
        return self.start <= t <= self.end


class IntervalSet:
    """Normalized set of intervals: sorted, non-overlapping, non-adjacent."""

    __slots__ = ("intervals",)

    def __init__(self, intervals: Iterable[Interval] = ()):
        pts = set()
        for iv in intervals:
            pts.update(iv.points())
        self.intervals: tuple[Interval, ...] = tuple(_runs(pts))

    @classmethod
    def from_points(cls, points: Iterable[int]) -> IntervalSet:
        s = cls.__new__(cls)
        s.intervals = tuple(_runs(set(points)))
        return s

    @classmethod
    def single(cls, t: int) -> IntervalSet:
        return cls.from_points([t])

    @classmethod
    def of(cls, start: int, end: int) -> IntervalSet:
        return cls((Interval(start, end),))

    def points(self) -> list[int]:
        out: list[int] = []
        for iv in self.intervals:
            out.extend(iv.points())
        return out

    def is_empty(self) -> bool:
        return not self.intervals

    def __contains__(self, t: int) -> bool:
        return any(t in iv for iv in self.intervals)

    def __iter__(self) -> Iterator[Interval]:
        return iter(self.intervals)

    def __eq__(self, other) -> bool:
        return isinstance(other, IntervalSet) and self.intervals == other.intervals

    def __hash__(self) -> int:
        return hash(self.intervals)

    def __repr__(self) -> str:
        body = ", ".join(f"[{iv.start},{iv.end}]" for iv in self.intervals)
        return f"IntervalSet({body})"


def _runs(points: set[int]) -> Iterator[Interval]:
    run_start = None
    prev = None
    for p in sorted(points):
        if run_start is None:
            run_start = prev = p
        elif p == prev + 1:
            prev = p
        else:
            yield Interval(run_start, prev)
            run_start = prev = p
    if run_start is not None:
        yield Interval(run_start, prev)


def as_interval_set(value, domain: TimeDomain) -> IntervalSet:
    """Coerce an Interval, IntervalSet, index, or (start, end) pair; range-check."""
    if isinstance(value, IntervalSet):
        ivs = value
    elif isinstance(value, Interval):
        ivs = IntervalSet((value,))
    elif isinstance(value, int):
        ivs = IntervalSet.single(value)
    elif isinstance(value, Sequence) and len(value) == 2:
        ivs = IntervalSet.of(int(value[0]), int(value[1]))
    else:
        raise IntervalError(f"cannot interpret {value!r} as an interval set")
    for iv in ivs:
        domain.check(iv)
    return ivs
