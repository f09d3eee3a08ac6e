"""Exception types raised across the package."""


class GlptError(Exception):
    pass


class ParseError(GlptError, ValueError):
    """Malformed graph6 input. ``offset`` is the byte offset of the problem."""

    def __init__(self, message: str, offset: int | None = None):
        super().__init__(message if offset is None else f"{message} (byte offset {offset})")
        self.offset = offset


class DomainError(GlptError, ValueError):
    """An operation was called outside its domain (e.g. disconnected input)."""


class ResourceError(GlptError, RuntimeError):
    """A configured search budget was exceeded."""


class IntegrityError(GlptError, RuntimeError):
    """A constructed object failed its own consistency check."""
