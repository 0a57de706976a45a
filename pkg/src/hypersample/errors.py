"""Exception hierarchy for hypersample.

Outcomes that are part of normal algorithm flow (a bipartite graph that is
not H-simple, a configuration that projects to a non-simple hypergraph)
are *results*, see :class:`hypersample.simplicity.NotHSimple` and
:class:`hypersample.config_model.NotSimple`. Everything here is raised.
"""


class HypersampleError(Exception):
    """Base class for all errors raised by this package."""


class InvalidInstance(HypersampleError, ValueError):
    pass


class ZeroDegree(InvalidInstance):
    pass


class IndivisibleTotal(InvalidInstance):
    pass


class DegreeExceedsEdges(InvalidInstance):
    pass


class EdgeSizeTooSmall(InvalidInstance):
    pass


class DegreeSumMismatch(InvalidInstance):
    pass


class InvalidHypergraph(HypersampleError, ValueError):
    pass


class DuplicateEdge(InvalidHypergraph):
    pass


class RepeatedNodeInEdge(InvalidHypergraph):
    pass


class WrongEdgeSize(InvalidHypergraph):
    pass


class NonGraphical(HypersampleError):
    """No bipartite graph realizes the requested degree sequence."""


class InvalidRegion(HypersampleError, ValueError):
    """Parameters outside the region where a bound is defined (c0 + eps >= 1)."""


class SamplingFailure(HypersampleError):
    """Base for sampler give-ups; carries the number of attempts consumed."""

    def __init__(self, message, attempts):
        super().__init__(message)
        self.attempts = attempts


class Fail(SamplingFailure):
    """Rejection loop hit its iteration cap."""


class Exhausted(SamplingFailure):
    """Configuration model hit ``max_trials`` without a simple configuration."""


class TooLarge(HypersampleError):
    """Exhaustive computation would exceed the configured search limit."""


class EmptySpace(HypersampleError):
    """The enumerated space is empty, so there is nothing to sample."""


class PreconditionViolated(HypersampleError, ValueError):
    pass
