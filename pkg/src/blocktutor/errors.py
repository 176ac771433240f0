"""Shared exception base for the blocktutor package."""


class BlockTutorError(Exception):
    """Base class for all typed errors raised by this package."""

    code = "error"

    def __init__(self, message, **details):
        super().__init__(message)
        self.message = message
        self.details = details

    def __str__(self):
        if self.details:
            extras = ", ".join(f"{k}={v!r}" for k, v in sorted(self.details.items()))
            return f"{self.message} ({extras})"
        return self.message
