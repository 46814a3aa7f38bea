"""Exception hierarchy shared by the package."""


class HexlatError(Exception):
    """Base class for every error raised by hexlat."""


class GeometryError(HexlatError):
    pass


class OverlapError(GeometryError):
    """Two segments share a sub-segment, or an overlay precondition fails."""


class NotClosedError(GeometryError):
    pass


class DiagramError(HexlatError):
    pass


class NotOrientableError(DiagramError):
    pass


class InconsistentError(DiagramError):
    pass


class NotLatticeError(DiagramError):
    """Carries the validation report of the offending diagram."""

    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report


class SlideConditionError(DiagramError):
    pass


class NotUnlinkError(DiagramError):
    pass


class DegenerateError(DiagramError):
    pass


class RangeError(HexlatError, ValueError):
    pass


class NumericError(HexlatError):
    pass


class ConvergenceError(NumericError):
    pass


class MismatchError(NumericError):
    pass


class SeparationError(NumericError):
    pass


class ParseError(HexlatError):
    def __init__(self, message, field=None, line=None):
        where = []
        if line is not None:
            where.append(f"line {line}")
        if field is not None:
            where.append(f"field {field}")
        if where:
            message = f"{message} ({', '.join(where)})"
        super().__init__(message)
        self.field = field
        self.line = line


class ValidationError(HexlatError):
    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report
