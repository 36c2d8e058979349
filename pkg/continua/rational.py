"""
The rational circle: Q/Z whose connected sets are the traces of arcs of
the real circle. Only rational endpoints are representable, so every
expression is a finite union of arcs and isolated points.
"""
from fractions import Fraction

from orders.exceptions import DegeneratePoints

from .arcs import Span, SpanOracle

ZERO = Fraction(0)
ONE = Fraction(1)


def rational_point(value):
    """Reduce a rational (int, Fraction or "p/q" string) into [0, 1)."""
    return Fraction(value) % 1


def format_rational(value):
    value = Fraction(value)
    return f'{value.numerator}/{value.denominator}'


class RationalCircle(SpanOracle):
    model = 'rational-circle'
    domain = Span(ZERO, ONE, True, False)
    wraps = True

    def canonical(self, value):
        return rational_point(value)

    def value_json(self, value):
        return format_rational(value)

    def arc(self, start, end, start_closed=False, end_closed=False):
        return self.interval(start, end, start_closed, end_closed)

    def open_arc(self, start, end):
        return self.interval(start, end)

    def components_of_copair(self, x, y):
        # the open arcs (x, y) and (y, x), ordered by start
        x, y = sorted((rational_point(x), rational_point(y)))
        if x == y:
            raise DegeneratePoints(f'A co-pair needs two distinct points, got {format_rational(x)} twice')
        return [self.open_arc(x, y), self.open_arc(y, x)]


def rational_circle():
    return RationalCircle()
