class GarsideError(Exception):
    """Base class for library errors."""


class ParseError(GarsideError, ValueError):
    """Malformed braid word, family or JSON input."""


class PreconditionError(GarsideError, ValueError):
    """An operation was called outside its domain (e.g. a non-round image family)."""


class ResourceCapError(GarsideError):
    """A search exceeded its configured cap."""
