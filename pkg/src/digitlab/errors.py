"""Shared exception types."""


class ResourceLimitError(RuntimeError):
    """A configured size cap was exceeded."""


class DigitFileError(ValueError):
    """A digit file could not be read or parsed.

    `offset` is the 0-based character offset of the offending byte when
    the failure is an illegal character, else None.
    """

    def __init__(self, message: str, offset: int | None = None):
        super().__init__(message)
        self.offset = offset
