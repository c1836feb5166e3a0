"""Exception hierarchy shared by all layers.

Each library error maps to one CLI exit code (see cli.EXIT_CODES), so the
classes double as error categories.
"""


class CharclassError(Exception):
    """Base class for all library errors."""


class ParseError(CharclassError):
    """Problem file / expression syntax or semantic error."""

    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        if line is not None:
            message = f"{message} (line {line}, column {column})"
        super().__init__(message)


class DomainError(CharclassError):
    """Input outside an operation's domain (empty scheme, bad field, ...)."""


class GenericityError(CharclassError):
    """Random choices failed a genericity check even after bounded retries."""


class NumericBackendError(CharclassError):
    """The homotopy backend could not produce a trustworthy count."""


class ResourceError(CharclassError):
    """Computation refused or aborted for resource reasons."""
