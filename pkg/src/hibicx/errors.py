"""Exception hierarchy shared by the library and the CLI."""


class HibiError(Exception):
    """Base class for all errors raised by hibicx."""


class InvalidPosetError(HibiError):
    """The cover data does not describe a finite poset (cycle, bad names, ...)."""


class NotComparableError(HibiError):
    """An operation that needs ``u <= v`` was given an incomparable pair."""


class PosetParseError(HibiError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class GuardExceededError(HibiError):
    """A configured size/resource guard would be exceeded."""


class InconclusiveError(HibiError):
    """A numerical procedure did not stabilise; carries the partial data."""

    def __init__(self, message: str, data=None):
        super().__init__(message)
        self.data = data


class PreconditionError(HibiError):
    """An argument violates the documented precondition of an operation."""


class WitnessUnavailableError(HibiError):
    """The non-splitting construction cannot be carried out for this input."""
