"""Exception types shared across the package.

Every error raised by the library derives from SchurHopfError so callers can
catch one type at the boundary.  The CLI maps subclasses to exit codes.
"""


class SchurHopfError(Exception):
    """Base class for all library errors."""


class PartitionError(SchurHopfError, ValueError):
    """Malformed partition text or an invalid part sequence."""


class WeightLimitError(PartitionError):
    """Partition weight exceeds the configured safety limit."""


class DegreeOverflowError(SchurHopfError):
    """A series term beyond the cutoff (or the global limit) was requested."""


class NotInvertibleError(SchurHopfError):
    """Series inversion was attempted on a series whose degree-0 term is not 1."""


class BasisMismatchError(SchurHopfError):
    """Arithmetic mixed character-ring elements written in different bases."""


class StableRangeError(SchurHopfError):
    """A character was evaluated outside the stable range of the group."""


class UnsupportedGroupError(SchurHopfError):
    """The eigenvalue specification names a group family that is not handled."""


class SingularDenominatorError(SchurHopfError, ZeroDivisionError):
    """Repeated evaluation points make the bialternant denominator vanish."""
