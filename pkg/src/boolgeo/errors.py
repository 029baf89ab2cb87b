"""Exception hierarchy shared across the package."""


class BoolgeoError(Exception):
    """Base class for all errors raised by this package."""


class RankMismatchError(BoolgeoError):
    """Operands belong to boolean algebras of different ranks."""


class ParseError(BoolgeoError):
    """Input text (equation system or JSON) is malformed.

    Carries a 1-based ``line`` and ``column`` when the input is positional
    text; both are ``None`` for structural errors in JSON documents.
    """

    def __init__(self, message, line=None, column=None):
        super().__init__(message)
        self.message = message
        self.line = line
        self.column = column

    def __str__(self):
        if self.line is None:
            return self.message
        return f"line {self.line}, column {self.column}: {self.message}"


class LimitExceededError(BoolgeoError):
    """A configured size limit (variable count, enumeration bound) was hit."""


class InconsistentSystemError(BoolgeoError):
    """The system has an empty solution set and the operation requires
    a nonempty one."""


class MissingVariableError(BoolgeoError):
    """A term mentions a variable that the point or variable list lacks."""


class SystemMismatchError(BoolgeoError):
    """Two systems that must share a variable count do not."""
