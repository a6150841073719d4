"""Exception hierarchy shared by the whole package."""


class DynnikovError(Exception):
    """Base class for every error raised by this package."""


class MalformedInputError(DynnikovError, ValueError):
    """Structurally bad input: wrong lengths, out-of-range indices, parity breaks."""


class InvalidCoordinatesError(DynnikovError, ValueError):
    """A coordinate vector that violates a multicurve invariant."""


class NotRelaxedError(InvalidCoordinatesError):
    """An operation that needs a relaxed multicurve was given an unrelaxed one."""


class NotDisjointError(DynnikovError, ValueError):
    """Two multicurves intersect, so their disjoint union does not exist."""


class IterationBudgetError(DynnikovError, RuntimeError):
    """Relaxation exceeded its iteration budget; the input coordinates are corrupt."""
