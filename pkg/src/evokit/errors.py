"""Domain errors shared by every evokit module."""


class EvokitError(Exception):
    """Base class for all domain errors raised by this package."""


class DimensionMismatchError(EvokitError):
    """Operands have incompatible dimensions."""


class SingularMatrixError(EvokitError):
    """A square matrix required to be invertible has determinant zero."""


class IndexRangeError(EvokitError):
    """A 1-based index lies outside 1..dim."""


class ZeroPointError(EvokitError):
    """A construction requires a nonzero scalar or point."""


class UnknownNameError(EvokitError):
    """No catalog entry with the requested name."""


class BadParamsError(EvokitError):
    """Catalog parameters violate the entry's constraints."""


class FormatError(EvokitError):
    """Malformed algebra or matrix document."""
