"""Exception types shared across the package."""


class SchwarznormError(Exception):
    """Base class for all errors raised by this package."""


class DegenerateOrderError(SchwarznormError, ValueError):
    """A series is too short for the requested operation."""


class NonInvertibleError(SchwarznormError, ValueError):
    """Reciprocal of a series whose constant term vanishes."""


class BranchPointError(SchwarznormError, ValueError):
    """Logarithm or fractional power of a series with vanishing constant term."""


class CompositionDomainError(SchwarznormError, ValueError):
    """Series composition with an inner series whose constant term is nonzero."""


class CriticalPointError(SchwarznormError, ValueError):
    """Schwarzian derivative of a series with f'(0) = 0."""


class DomainError(SchwarznormError, ValueError):
    """An argument lies outside the mathematical domain of the operation."""


class NumericError(SchwarznormError, RuntimeError):
    """An iterative routine failed to converge within its iteration cap."""


class FileFormatError(SchwarznormError, ValueError):
    """A coefficient file does not follow the 're im' per-line format."""
