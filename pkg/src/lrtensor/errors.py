"""Exception hierarchy shared by every module in the package."""


class LRTensorError(Exception):
    """Base class for domain errors (bad input, out-of-range parameters)."""


class PartitionError(LRTensorError, ValueError):
    pass


class NotWeaklyDecreasing(PartitionError):
    pass


class TooManyParts(PartitionError):
    pass


class ParseError(PartitionError):
    pass


class RankMismatch(LRTensorError, ValueError):
    """Two partitions that must share an ambient rank do not."""


class SOutOfRange(LRTensorError, ValueError):
    pass


class DegreeMismatch(LRTensorError, ValueError):
    pass


class DecompositionFailure(RuntimeError):
    """Schur-basis decomposition hit a non-partition leading term or a
    negative coefficient. This is a bug, never a user error."""
