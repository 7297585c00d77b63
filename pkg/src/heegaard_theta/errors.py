"""Exception types shared across the package."""


class HeegaardThetaError(Exception):
    """Base class for all errors raised by this package."""


class PresentationError(HeegaardThetaError, ValueError):
    """Malformed or unbalanced presentation text."""

    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        if line is not None:
            where = f"line {line}" + (f", column {column}" if column is not None else "")
            message = f"{where}: {message}"
        super().__init__(message)


class UnsupportedInput(HeegaardThetaError):
    """The input lies outside the supported range (e.g. b1 = 0)."""


class NormalizationError(HeegaardThetaError):
    """The Alexander polynomial cannot be normalized so that A(1) = |Tors|."""


class GroupMismatch(HeegaardThetaError, ValueError):
    """Operands live over different groups."""
