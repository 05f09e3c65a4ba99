"""Exception hierarchy shared by all twobridge modules."""


class TwoBridgeError(Exception):
    """Base class for all errors raised by this package."""


class NotationError(TwoBridgeError, ValueError):
    """A Conway notation string or tuple is outside the accepted normal form."""


class MalformedNotationError(NotationError):
    """Input text could not be parsed as a comma-separated integer list."""


class EmptyNotationError(NotationError):
    """The notation contains no entries."""


class EvenLengthError(NotationError):
    """The notation has an even number of entries (normal form needs odd)."""


class NonPositiveTwistError(NotationError):
    """Some twist count is zero or negative."""


class TooFewCrossingsError(TwoBridgeError, ValueError):
    """The crossing number is below the minimum a construction supports."""


class TubeTooThinError(TwoBridgeError, ValueError):
    """Tube-scale parameter h is below the clearance threshold."""


class DegenerateDirectionError(TwoBridgeError):
    """A projection direction is non-generic for the given polygon."""


class DisconnectedDiagramError(TwoBridgeError):
    """Diagram operation requires a connected underlying 4-valent graph."""


class TooManyCrossingsError(TwoBridgeError):
    """Brute-force state sum refused: crossing count above the configured cap."""


class StepTooCoarseError(TwoBridgeError, ValueError):
    """Thickness audit sampling step exceeds the supported maximum."""


class ConstructionError(TwoBridgeError):
    """An internal geometric invariant failed while building an embedding."""
