"""Exception hierarchy shared by every module of the package."""


class TantrixError(Exception):
    """Base class for all errors raised by this package."""


class TileError(TantrixError, ValueError):
    pass


class BadLength(TileError):
    pass


class BadColorMultiplicity(TileError):
    pass


class IllegalShape(TileError):
    pass


class ParseError(TantrixError, ValueError):
    """Malformed text input. ``lineno`` is 1-based, or None when not tied to a line."""

    def __init__(self, message, lineno=None):
        self.lineno = lineno
        if lineno is not None:
            message = f"line {lineno}: {message}"
        super().__init__(message)


class DuplicateCell(ParseError):
    pass


class InvalidTile(ParseError):
    pass


class DanglingClamp(ParseError):
    pass


class DomainMismatch(TantrixError, ValueError):
    pass


class TooLarge(TantrixError):
    """An input exceeds a brute-force size guard."""


class LengthMismatch(TantrixError, ValueError):
    pass


class HeaderMismatch(ParseError):
    pass


class EmptyClause(ParseError):
    pass


class CircuitError(TantrixError, ValueError):
    pass


class MissingGadget(TantrixError):
    pass


class StructuralError(TantrixError):
    pass


class LibraryUnverified(TantrixError):
    pass


class InvalidSolution(TantrixError, ValueError):
    pass
