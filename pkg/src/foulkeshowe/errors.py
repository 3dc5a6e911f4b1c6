"""Shared exception types."""


class ResourceLimitError(RuntimeError):
    """A computation was refused or aborted because it exceeds a configured limit."""


class FormatError(ValueError):
    """A serialized matrix or result file is malformed."""

    def __init__(self, message, line=None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line
