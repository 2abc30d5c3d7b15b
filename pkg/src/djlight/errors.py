"""Shared exception types."""


class ContractError(ValueError):
    """An operation was called with arguments violating its contract."""


class ResourceError(RuntimeError):
    """A resource guard (register size, grid size) was exceeded."""


class ParseError(ValueError):
    """A text input (function file, program file) is malformed."""

    def __init__(self, message, line=None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line
