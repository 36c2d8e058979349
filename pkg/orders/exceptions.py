"""
Errors raised by the order structures.

All of them are input errors: a malformed structure or a query whose
preconditions do not hold. Axiom violations are reported as data
(see orders.reports.AxiomReport), never raised.
"""


class StructureError(ValueError):
    """Base class for malformed order structures and bad queries."""


class TooFewPoints(StructureError):
    pass


class DuplicatePoint(StructureError):
    pass


class CutIsEnd(StructureError):
    pass


class InvalidCyclicOrder(StructureError):
    """A ternary table that is not induced by any linear order."""


class InvalidRelation(StructureError):
    """A separation relation that violates one of S1-S4."""

    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report


class AnchorDegenerate(StructureError):
    pass


class DegeneratePoints(StructureError):
    pass


class NotAnInterval(StructureError):
    pass


class NotAChain(StructureError):
    pass
