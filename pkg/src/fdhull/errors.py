class FdhError(Exception):
    """Base class for all fdhull errors."""


class NotSorted(FdhError):
    """Input points are not sorted by increasing x."""


class DuplicateX(FdhError):
    """Two input points share an x-coordinate."""


class EmptyInput(FdhError):
    """An operation that needs at least one point received none."""


class QueryInsideHull(FdhError):
    """Tangents were requested for a point on or below the hull."""


class UnknownPoint(FdhError):
    """The point is not stored in the structure."""


class AlreadyDeleted(FdhError):
    """The point has already been deleted from the hull tree."""


class BucketOverflow(FdhError):
    """A merge produced more points than its target buckets can hold."""


class CoordinateOutOfRange(FdhError):
    """A coordinate exceeds the ingest bound."""


class InvalidDirection(FdhError):
    """Extreme point queries need a non-zero direction."""


class MalformedLine(FdhError):
    """A line of an input file could not be parsed."""

    def __init__(self, lineno: int, line: str = ""):
        self.lineno = lineno
        self.line = line
        super().__init__(f"malformed line {lineno}: {line!r}")


class MalformedWorkload(MalformedLine):
    """A workload file line could not be parsed."""


class TimeLimitExceeded(FdhError):
    """A run exceeded the configured time limit."""
