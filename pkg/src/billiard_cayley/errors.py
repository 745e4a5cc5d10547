"""Exception hierarchy shared by all modules."""


class BilliardCayleyError(Exception):
    """Base class for errors raised by this package."""


class InvalidTripleError(BilliardCayleyError, ValueError):
    """An angle triple violates the validity rules."""


class InvalidOperandError(BilliardCayleyError, ValueError):
    """Group elements with different moduli were combined."""


class PreconditionError(BilliardCayleyError, ValueError):
    """An operation was called outside its domain."""


class ResourceError(BilliardCayleyError):
    """A combinatorial search would exceed its budget."""


class ConsistencyError(BilliardCayleyError):
    """An internal cross-check failed. Always indicates a bug."""
