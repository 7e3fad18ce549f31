"""Exception hierarchy shared across the package."""


class NormPlaneError(Exception):
    """Base class for all errors raised by this package."""


class ParseError(NormPlaneError, ValueError):
    """Bad expression text. Carries the byte offset and the expected tokens."""

    def __init__(self, message, offset, expected=()):
        super().__init__(f"{message} at byte offset {offset}")
        self.offset = offset
        self.expected = tuple(expected)


class DomainError(NormPlaneError, ArithmeticError):
    """Evaluation left the real domain (sqrt/log of a bad argument, zero division)."""


class ValidationError(NormPlaneError, ValueError):
    """A geometric object failed one of its construction invariants."""


class NotClosed(ValidationError):
    pass


class NotSymmetric(ValidationError):
    pass


class NotConvex(ValidationError):
    pass


class DegeneratePiece(ValidationError):
    pass


class DegenerateDual(ValidationError):
    pass


class UnknownBuiltin(NormPlaneError, KeyError):
    pass


class NotAdmissible(ValidationError):
    pass


class MismatchedBalls(NormPlaneError, ValueError):
    pass


class NoConvergence(NormPlaneError, RuntimeError):
    pass


class NotConvexInput(NormPlaneError, ValueError):
    pass


class DegenerateIntersection(ValidationError):
    pass


class EmbeddingFailed(NormPlaneError, RuntimeError):
    pass


class DecompositionResidual(NormPlaneError, RuntimeError):
    pass
