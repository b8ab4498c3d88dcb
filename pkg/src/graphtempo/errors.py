"""Exception hierarchy shared by all graphtempo modules."""


class GraphTempoError(Exception):
    """Base class for all domain errors raised by this package."""


class ParseError(GraphTempoError):
    """A malformed row in an input file."""

    def __init__(self, path, line_no, message):
        self.path = str(path)
        self.line_no = line_no
        super().__init__(f"{self.path}:{line_no}: {message}")


class ConsistencyError(GraphTempoError):
    """Input files contradict each other (unknown node, value for absent node, ...)."""


class IntervalError(GraphTempoError):
    """An interval or interval set falls outside the graph's time domain."""


class EntityLookupError(GraphTempoError):
    """Unknown node, edge, or attribute name."""


class UsageError(GraphTempoError):
    """An operation was called with arguments outside its contract."""


class UnsupportedPatternError(UsageError):
    """Only the undirected closed triangle pattern is implemented."""


class UnsupportedRollupError(UsageError):
    """The requested rollup is not distributive (e.g. DIST over time union)."""


class CacheMissError(GraphTempoError):
    """A required cache entry is absent; callers fall back to direct computation."""
