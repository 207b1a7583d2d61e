"""Exception hierarchy shared by the library and the command line."""


class IvifError(Exception):
    """Base class for every error raised by :mod:`ivifm`."""


class ValidationError(IvifError, ValueError):
    """A value, matrix or graph breaks one of its invariants."""


class ShapeError(IvifError, ValueError):
    """An operation received matrices of an unsuitable shape."""


class DimensionMismatch(ShapeError):
    pass


class NotSquare(ShapeError):
    pass


class OrderTooLarge(ShapeError):
    pass


class IndexOutOfRange(IvifError, IndexError):
    pass


class ParseError(IvifError, ValueError):
    """Malformed input document. ``line`` is 1-based when known."""

    def __init__(self, reason, line=None):
        self.reason = reason
        self.line = line
        msg = reason if line is None else f"line {line}: {reason}"
        super().__init__(msg)
