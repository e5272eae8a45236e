"""Exception types shared across the library."""


class BalanceError(ValueError):
    """A step word has unequal numbers of up and down steps."""


class CharError(ValueError):
    """A path string contains a character other than U or D."""


class ResourceError(RuntimeError):
    """An exhaustive enumeration would exceed its size cap."""


class DomainError(ValueError):
    """A counting formula was evaluated at a degenerate index."""


class OrderMismatchError(ValueError):
    """Two truncated series of different orders were combined."""


class NonUnitConstantTermError(ValueError):
    """A series whose constant term is not a nonzero constant was inverted."""


class ShapeError(ValueError):
    """A path or diagram lacks the structure an operation requires."""


class IrreducibilityError(ValueError):
    """A composition pair that must be irreducible is not."""
