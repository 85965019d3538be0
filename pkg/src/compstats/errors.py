"""Exception types shared across the library.

Everything that signals a violated precondition derives from ValueError so
callers who do not care about the fine distinction can catch that.
"""


class CompstatsError(ValueError):
    """Base class for contract violations raised by this library."""


class CapVarMismatch(CompstatsError):
    """Arithmetic between truncated series with different cap variables."""


class NonConvergent(CompstatsError):
    """Geometric expansion of a monomial that never exceeds the cap."""


class InexactDivision(CompstatsError):
    """A division that must be exact left a remainder (implementation bug)."""


class OutOfRange(CompstatsError):
    pass


class EmptyPartition(CompstatsError):
    pass


class EmptyComposition(CompstatsError):
    pass


class LengthMismatch(CompstatsError):
    pass


class TooLarge(CompstatsError):
    """Input exceeds the documented enumeration scale."""


class CapTooSmall(CompstatsError):
    """Requested truncation cap cannot hold the leading term."""


class DenominatorNotUnit(CompstatsError):
    """Series division against a denominator whose constant term is not invertible."""


class BFileParseError(CompstatsError):
    pass


class UnknownSequence(CompstatsError):
    pass


class NetworkUnavailable(RuntimeError):
    """Remote b-file fetch failed; use a local file instead."""
