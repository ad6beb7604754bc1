"""Exception types raised by the colour algebra."""


class TripolarError(Exception):
    """Base class for every error raised by this package."""


class GridMismatch(TripolarError, ValueError):
    pass


class NonPositiveSigma(TripolarError, ValueError):
    pass


class MalformedCsv(TripolarError, ValueError):
    pass


class OutOfSpan(TripolarError, ValueError):
    pass


class NegativeRealPart(TripolarError, ValueError):
    pass


class DivisorRealZero(TripolarError, ZeroDivisionError):
    pass


class SquareMismatch(TripolarError, ValueError):
    pass


class PolarizationFailure(TripolarError, ArithmeticError):
    pass


class SingularDivisor(TripolarError, ZeroDivisionError):
    """Division by a colour whose real parts are all equal."""

    def __init__(self, message, expr=None):
        super().__init__(message)
        self.expr = expr


class NoPositivePeak(TripolarError, ValueError):
    pass


class ExprSyntaxError(TripolarError, ValueError):
    """Malformed colour expression; carries 1-based line and column."""

    def __init__(self, message, line=1, column=1):
        super().__init__(f"{message} (line {line}, column {column})")
        self.reason = message
        self.line = line
        self.column = column
