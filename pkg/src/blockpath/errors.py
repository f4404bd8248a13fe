"""Exception hierarchy shared across the package."""


class BlockPathError(Exception):
    """Base class for every error raised by blockpath."""


class DigraphError(BlockPathError, ValueError):
    pass


class LoopError(DigraphError):
    pass


class DuplicateArcError(DigraphError):
    pass


class DigonError(DigraphError):
    """A pair of opposite arcs in an oriented-mode digraph."""


class VertexRangeError(DigraphError, IndexError):
    pass


class CapExceeded(BlockPathError):
    """Requested size is beyond the configured desk-scale cap."""


class FormatError(BlockPathError, ValueError):
    """Malformed edge-list or digraph6 input."""


class PatternError(BlockPathError, ValueError):
    pass


class PreconditionError(BlockPathError, ValueError):
    """A finder was called on a host that does not meet its chromatic threshold."""


class InternalInconsistency(BlockPathError):
    """A proof step's guarantee failed to materialise.

    Carries the partial trace so the failing instance can be replayed.
    """

    def __init__(self, message, trace=None):
        super().__init__(message)
        self.trace = trace


class StoreError(BlockPathError):
    pass
