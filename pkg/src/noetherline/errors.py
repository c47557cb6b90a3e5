"""Exception hierarchy shared by every module."""

from __future__ import annotations


class NoetherLineError(Exception):
    """Base class for all library errors."""


class OutOfRange(NoetherLineError, ValueError):
    """A type (d, d0) violates one of the existence inequalities."""


class PGTooSmall(NoetherLineError, ValueError):
    pass


class DTooSmall(NoetherLineError, ValueError):
    pass


class EmptyModuli(NoetherLineError, ValueError):
    """The moduli space is empty for this geometric genus."""


class RangeInvalid(NoetherLineError, ValueError):
    pass


class IntegerOverflow(NoetherLineError, OverflowError):
    """A quantity left the signed 64-bit range."""
