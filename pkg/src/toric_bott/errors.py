"""Exception types raised by the library."""


class ToricBottError(Exception):
    """Base class for all errors raised by this package."""


class Empty(ToricBottError):
    """No points were supplied."""


class LowDimensional(ToricBottError):
    """The affine hull of the input is smaller than the ambient space."""


class DimensionMismatch(ToricBottError):
    """Operands live in different ambient dimensions."""


class NonPositiveDilation(ToricBottError):
    """Dilation factors must be >= 1."""


class UnknownFace(ToricBottError):
    """The face does not belong to the polytope's face lattice."""


class NotSimple(ToricBottError):
    """The polytope is not simple; the requested formula needs simplicity."""


class InterpolationInconsistent(ToricBottError):
    """The interpolated polynomial failed its extra verification node."""


class RouteMismatch(ToricBottError):
    """Two independent evaluation routes disagree (implementation bug)."""


class NegativeEntry(ToricBottError):
    """A quantity that must be nonnegative came out negative."""


class EmptyPolytope(ToricBottError):
    """The defining constraint set has no solutions."""


class OutOfRange(ToricBottError):
    """A parameter is outside its admissible range."""


class InputError(ToricBottError):
    """Malformed input document (CLI/JSON layer)."""
