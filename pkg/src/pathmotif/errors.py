"""Exception types raised by pathmotif."""


class PathMotifError(Exception):
    """Base class for all errors raised by this package."""


class EdgeListParseError(PathMotifError, ValueError):
    def __init__(self, lineno, line, reason):
        self.lineno = lineno
        self.line = line
        self.reason = reason
        super().__init__(f"line {lineno}: {reason}: {line!r}")


class CountOverflowError(PathMotifError, OverflowError):
    """An exact count left the unsigned 64-bit range."""


class InconsistentCountsError(PathMotifError, ValueError):
    """Vanilla counts that no graph can produce (negative induced count)."""


class EmptyDistributionError(PathMotifError, ValueError):
    """Draw requested from a distribution whose weights are all zero."""


class NoPathsError(PathMotifError, ValueError):
    """The graph has no candidate 3-paths for the requested sampler."""


class BruteForceCapError(PathMotifError, ValueError):
    def __init__(self, n, cap):
        self.n = n
        self.cap = cap
        super().__init__(f"brute force refused: n={n} exceeds cap {cap}")


class ProvenanceError(PathMotifError, ValueError):
    """Intervals combined from different sampler runs."""
