"""Exception hierarchy shared by all modules."""


class HomocoverError(Exception):
    """Base class for every error raised by this package."""


class InvalidArgument(HomocoverError, ValueError):
    pass


class UnsupportedShape(HomocoverError, ValueError):
    pass


class UnsupportedDimension(HomocoverError, ValueError):
    pass


class WrongTheorem(HomocoverError, ValueError):
    """The body does not satisfy the hypothesis of the requested construction."""


class PreconditionViolation(HomocoverError, ValueError):
    """A documented precondition failed; ``witness`` carries the evidence."""

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class InternalError(HomocoverError, RuntimeError):
    """Raised when a result contradicts a proven statement (indicates a bug)."""


class ParseError(HomocoverError, ValueError):
    def __init__(self, message, field=None, line=None):
        loc = []
        if line is not None:
            loc.append(f"line {line}")
        if field is not None:
            loc.append(f"field {field!r}")
        super().__init__(f"{message} ({', '.join(loc)})" if loc else message)
        self.field = field
        self.line = line
