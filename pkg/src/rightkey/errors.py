"""Exception hierarchy shared by the library and the command line."""


class ParseError(ValueError):
    """Malformed text or JSON input."""


class ValidationError(ValueError):
    """Well-formed input that violates a mathematical precondition."""


class InvariantError(RuntimeError):
    """An internal consistency check failed; this indicates a bug."""
