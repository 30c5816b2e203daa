"""Exception types shared across the package."""


class PatternLabError(Exception):
    """Base class for all errors raised by patternlab."""


class DomainError(PatternLabError, ValueError):
    """An argument lies outside the domain of the operation."""


class LimitError(PatternLabError, RuntimeError):
    """A size bound (enumeration cap, series order cap) was exceeded."""


class ExpansionError(PatternLabError, ArithmeticError):
    """A rational function or series cannot be expanded at the origin."""
