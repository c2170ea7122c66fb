"""Shared exception types."""


class SizeMismatchError(ValueError):
    """Two partitions (or class functions) that must have equal size do not."""


class DegreeCapError(ValueError):
    """A computation was requested beyond the configured degree cap."""


class InvariantViolationError(ArithmeticError):
    """An internal exact-arithmetic invariant failed (e.g. a structure
    coefficient that must be a nonnegative integer came out fractional).
    Never rounded over; always raised."""
