"""Exception types shared across the package."""


class AltloopError(Exception):
    """Base class for all domain errors raised by this package."""


class DivisionByZero(AltloopError):
    pass


class RadicandMismatch(AltloopError):
    """Arithmetic attempted between quadratic extensions of different radicands."""


class NotTotallyReal(AltloopError):
    pass


class AlgebraMismatch(AltloopError):
    """Elements of different algebras were combined."""


class NoUnit(AltloopError):
    """The algebra has no multiplicative identity."""


class NotInvertibleError(AltloopError):
    """Raised when an inverse is required but does not exist."""


class ZeroParameter(AltloopError):
    pass


class InvolutionBroken(AltloopError):
    """An involutive-algebra invariant failed to verify."""


class NormNotScalar(AltloopError):
    """a * conj(a) did not land in the span of the unit."""


class ParametersUnknown(AltloopError):
    """The algebra was not built by a constructor that records its parameters."""


class NotDefinite(AltloopError):
    pass


class NotTotallyDefinite(AltloopError):
    pass


class NotLatinSquare(AltloopError):
    pass


class NoIdentity(AltloopError):
    pass


class IdentityDisagreement(AltloopError):
    """Internal cross-check failure: equivalent identity scans disagreed."""


class OrderTooLarge(AltloopError):
    pass


class NotASubloop(AltloopError):
    pass


class PreconditionFailed(AltloopError):
    pass


class NonNilpotent(AltloopError):
    """An element expected to square to zero did not."""


class SearchSpaceTooLarge(AltloopError):
    pass


class NotRALoop(AltloopError):
    pass


class MalformedDescriptor(AltloopError):
    pass


class FormatError(AltloopError):
    """A file or literal could not be parsed."""
