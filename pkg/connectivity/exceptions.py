"""
Errors raised by connectivity queries.

Axiom and lemma violations are returned as AxiomReport values; these
exceptions mark queries whose own preconditions fail.
"""
from orders.exceptions import DegeneratePoints


class ConnectivityError(ValueError):
    """Base class for connectivity query errors."""


class AxiomPrecondition(ConnectivityError):
    pass


class SampleRequired(ConnectivityError):
    pass


class ComponentCount(ConnectivityError):
    """A co-pair whose complement does not split into exactly two components."""

    def __init__(self, message, pair=None, count=None):
        super().__init__(message)
        self.pair = pair
        self.count = count


class NotConnected(ConnectivityError):
    pass


class NoFormMatches(ConnectivityError):
    """A connected set outside every form of the classification."""


class HypothesisFailed(ConnectivityError):
    pass


class PreconditionFailed(ConnectivityError):
    def __init__(self, message, membership=None):
        super().__init__(message)
        self.membership = membership


__all__ = [
    'AxiomPrecondition',
    'ComponentCount',
    'ConnectivityError',
    'DegeneratePoints',
    'HypothesisFailed',
    'NoFormMatches',
    'NotConnected',
    'PreconditionFailed',
    'SampleRequired',
]
