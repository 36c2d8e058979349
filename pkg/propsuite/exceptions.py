"""
Errors raised by the property suite.
"""


class SuiteError(ValueError):
    """Base class for suite configuration and replay errors."""


class UnknownProperty(SuiteError):
    pass


class NotFailing(SuiteError):
    """A counterexample handed to the shrinker passes its property."""


class GeneratorExhausted(SuiteError):
    """Rejection sampling hit its retry bound."""
