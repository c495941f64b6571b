"""Exception types shared across the package."""


class InvalidArgument(ValueError):
    pass


class NotAWeight(ValueError):
    """A content vector that no standard tableau of the given shape realizes."""


class FieldMismatch(ValueError):
    """Arithmetic mixed two different quadratic extensions."""


class NotInQ(ValueError):
    """Operator does not commute with the odd involution."""


class Inconsistency(RuntimeError):
    """An identity that must hold exactly was violated."""
