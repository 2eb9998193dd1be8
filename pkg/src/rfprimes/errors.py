"""Exception types shared across the package."""


class OutOfRangeError(ValueError):
    """An argument lies outside the range an operation can handle."""


class ResourceLimitError(RuntimeError):
    """An operation would exceed a configured memory or size ceiling."""


class NumericInstabilityError(ArithmeticError):
    """A floating-point result failed an internal exactness check."""
