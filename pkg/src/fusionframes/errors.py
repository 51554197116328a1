"""Exception hierarchy.

Every error raised deliberately by the package derives from
:class:`FrameError`, so callers can catch the whole family at once.
"""


class FrameError(Exception):
    """Base class for all package errors."""


class DimensionMismatch(FrameError, ValueError):
    """Operands live in ambient spaces of different dimension."""


class ShapeMismatch(FrameError, ValueError):
    """Two families cannot be paired (different sizes or dimensions)."""


class ZeroSpan(FrameError, ValueError):
    """A spanning set or an operator image is numerically zero."""


class NotAFrame(FrameError):
    """The frame operator of a discrete family is singular."""


class NotAFusionFrame(FrameError):
    """The fusion frame operator of a family is singular."""


class NullMapViolation(FrameError, ValueError):
    """The operator handed to the dual parameterization is not annihilated
    by the synthesis matrix."""


class LocalSpanMismatch(FrameError, ValueError):
    """A local frame does not lie in, or does not span, its subspace."""


class NotLocalDual(FrameError, ValueError):
    """A proposed local dual does not reconstruct the local projection."""


class InvalidAugmentation(FrameError, ValueError):
    """An augmentation vector is not a unit vector orthogonal to the
    canonical dual subspace it extends."""


class UnsupportedWeights(FrameError, ValueError):
    """The construction is only defined for families with unit weights."""


class EnumerationCapExceeded(FrameError):
    """More dual families exist than the enumeration cap allows.

    The families generated before the cap was hit are available as
    ``partial``.
    """

    def __init__(self, msg, partial):
        super().__init__(msg)
        self.partial = partial


class ParseError(FrameError, ValueError):
    """A family document is not well-formed JSON or has the wrong layout."""


class ValidationError(FrameError, ValueError):
    """A family document is well-formed but violates a field constraint."""
