"""
Deliberately broken models for fault-injection runs.

They exist so the suite and the shrinker can be shown to catch a wrong
oracle; nothing outside tests and `manage.py suite --fault` uses them.
"""
from fractions import Fraction

from continua.lexico import lex_midpoint
from continua.rational import RationalCircle

from .bundles import ModelBundle, default_bundle


def _length(group):
    return sum((span.hi - span.lo for span in group), Fraction(0))


class CorruptedRationalCircle(RationalCircle):
    """Reports a two-piece set as connected whenever one piece is longer than half the circle."""
    model = 'rational-circle-corrupted'

    def components(self, expr):
        groups = self.pieces(expr)
        if len(groups) == 2 and any(_length(group) > Fraction(1, 2) for group in groups):
            return [expr]
        return super().components(expr)

    def is_connected(self, expr):
        return len(self.components(expr)) <= 1

    def components_of_copair(self, x, y):
        return self.components(self.copair(x, y))


def stalled_midpoint(x, y):
    """Midpoint that gives up on points with more than one explicit entry."""
    if x.support > 1 or y.support > 1:
        return x
    return lex_midpoint(x, y)


def corrupted_bundle():
    return ModelBundle('corrupted-rational-circle', CorruptedRationalCircle(), default_bundle().big_circle)


def stalled_midpoint_bundle():
    return ModelBundle('stalled-midpoint', default_bundle().rational_circle, default_bundle().big_circle, stalled_midpoint)


FAULTS = {
    'corrupted-rational-circle': corrupted_bundle,
    'stalled-midpoint': stalled_midpoint_bundle,
}
