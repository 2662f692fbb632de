"""Exception types shared across the package."""


class BallgenError(Exception):
    """Base class for all errors raised by this package."""


class DimensionMismatch(BallgenError):
    """Operands live in different ambient dimensions."""


class DomainError(BallgenError):
    """A point lies outside the evaluation domain of a field or kernel."""

    def __init__(self, message, point=None):
        super().__init__(message)
        self.point = point


class NotSmoothAtE1(BallgenError):
    """A denominator vanishes at the distinguished boundary point."""


class EmptyRegion(BallgenError):
    """Sampling constraints admit no points."""


class DivergentLimit(BallgenError):
    """Extrapolants failed the Cauchy criterion."""


class NotANullPoint(BallgenError):
    """The field does not decay along the radius toward the vertex."""


class StepFailure(BallgenError):
    """Adaptive step size underflowed away from the boundary."""


class IllConditioned(BallgenError):
    """A least-squares system is numerically singular."""


class JetOrderTooLow(BallgenError):
    """A jet of higher order is required for this check."""


class NotShifted(BallgenError):
    """The jet still carries a nonzero leading rate; shift it first."""


class PreconditionFailed(BallgenError):
    """A check was invoked outside its stated precondition."""


class UnknownExample(BallgenError):
    """No built-in field with that name."""


class ParseError(BallgenError):
    """Malformed field-spec file."""

    def __init__(self, message, line=None, column=None):
        super().__init__(message)
        self.line = line
        self.column = column


class ValidationError(BallgenError):
    """Structurally valid file that violates the schema contract."""
