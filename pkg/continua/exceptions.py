"""
Errors raised by the exact models.
"""


class ModelError(ValueError):
    """Base class for model construction and query errors."""


class TooSmall(ModelError):
    pass


class NotOrdered(ModelError):
    pass


class SamePoint(ModelError):
    pass


class RouteDisagreement(ModelError):
    """The two ways of computing a big-circle crossing gave different answers."""

    def __init__(self, message, transcript=None):
        super().__init__(message)
        self.transcript = transcript or {}


class LexInvariantError(ModelError):
    """An internal cross-check on lexicographic points failed."""
