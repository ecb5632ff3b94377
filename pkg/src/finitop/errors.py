"""Exception hierarchy shared by every finitop module."""


class FinitopError(Exception):
    """Base class for all errors raised by finitop."""


class PointOutOfRange(FinitopError, IndexError):
    pass


class TransitivityViolation(FinitopError, ValueError):
    pass


class EmptySubspace(FinitopError, ValueError):
    pass


class SizeOverflow(FinitopError, ValueError):
    pass


class NotContinuous(FinitopError, ValueError):
    pass


class DomainMismatch(FinitopError, ValueError):
    pass


class NotARetraction(FinitopError, ValueError):
    pass


class NotT0(FinitopError, ValueError):
    pass


class NotNormal(FinitopError, ValueError):
    """Raised when a construction needs normality; ``witness`` holds the
    disjoint closed pair that cannot be separated."""

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class IndexMismatch(FinitopError, ValueError):
    pass


class NotACover(FinitopError, ValueError):
    pass


class CarrierMismatch(FinitopError, ValueError):
    pass


class UnsupportedCarrier(FinitopError, ValueError):
    pass


class NotDisjoint(FinitopError, ValueError):
    pass


class NotClosed(FinitopError, ValueError):
    pass


class UndecidedSeparation(FinitopError):
    pass


class WindowTooSmall(FinitopError, ValueError):
    pass


class BoundExceeded(FinitopError, ValueError):
    pass


class UnknownSuite(FinitopError, KeyError):
    pass


class UnknownClaim(FinitopError, KeyError):
    pass


class UnboundVariable(FinitopError, KeyError):
    pass


class QuerySyntaxError(FinitopError, SyntaxError):
    """Parse failure in the query language.

    ``position`` is the 1-based character column where parsing stopped and
    ``expected`` the set of tokens that would have been accepted there.
    """

    def __init__(self, position, expected, text=""):
        self.position = position
        self.expected = frozenset(expected)
        exp = ", ".join(sorted(repr(e) for e in self.expected))
        super().__init__(f"at column {position}: expected one of {exp}")
        self.text = text
