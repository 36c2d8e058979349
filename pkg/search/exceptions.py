"""
Errors raised by the finite space search.
"""


class SearchError(ValueError):
    """Base class for search configuration and run errors."""


class BoundExceeded(SearchError):
    pass


class SearchTimeout(SearchError):
    """The wall-clock budget ran out before the space was exhausted."""

    def __init__(self, message, checkpoint=None, result=None):
        super().__init__(message)
        self.checkpoint = checkpoint
        self.result = result


class CheckpointMismatch(SearchError):
    """A checkpoint written for a different configuration or format version."""
