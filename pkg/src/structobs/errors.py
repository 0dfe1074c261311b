"""Exception types raised across the package."""


class StructobsError(Exception):
    """Base class for all package errors."""


class ValidationError(StructobsError):
    pass


class DimensionMismatch(ValidationError):
    def __init__(self, mode, detail):
        self.mode = mode
        super().__init__(f"mode {mode}: {detail}")


class CoordinateOutOfRange(ValidationError):
    def __init__(self, coord, shape, where=""):
        self.coord = coord
        self.shape = shape
        prefix = f"{where}: " if where else ""
        super().__init__(f"{prefix}coordinate {coord} outside a {shape[0]}x{shape[1]} matrix")


class ZeroDisturbanceColumn(ValidationError):
    """Unknown input ``column`` (1-based) influences no state in any mode."""

    def __init__(self, column):
        self.column = column
        super().__init__(f"unknown input d{column} does not enter any state equation in any mode")


class WrongClass(StructobsError):
    pass


class InternalVerificationFailure(StructobsError):
    pass


class CapExceeded(StructobsError):
    pass


class DocumentError(StructobsError):
    """Malformed system or placement document."""

    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        if line is not None:
            message = f"line {line}, column {column}: {message}"
        super().__init__(message)
