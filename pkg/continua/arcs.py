"""
Finite unions of intervals over a dense linear order, and the oracle that
treats them as connected-set expressions on a line or on a circle.

Values only need to be totally ordered and hashable (Fraction, LexPoint).
Because the orders are dense, a set is connected iff it is a single
interval; on a circle the last interval may continue through the origin
into the first one.
"""
from dataclasses import dataclass
from typing import Any, NamedTuple

from connectivity.spaces import ConnectivityOracle
from orders.exceptions import DegeneratePoints


class Span(NamedTuple):
    lo: Any
    hi: Any
    lo_closed: bool
    hi_closed: bool

    @property
    def is_empty(self):
        return self.hi < self.lo or (self.lo == self.hi and not (self.lo_closed and self.hi_closed))

    @property
    def is_point(self):
        return self.lo == self.hi and self.lo_closed and self.hi_closed

    def contains(self, value):
        if self.lo < value < self.hi:
            return True
        return (value == self.lo and self.lo_closed) or (value == self.hi and self.hi_closed)


def normalize(spans):
    """Sort, drop empty spans and merge overlapping or touching ones."""
    ordered = sorted(
        (span for span in spans if not span.is_empty),
        key=lambda span: (span.lo, not span.lo_closed),
    )
    merged = []
    for span in ordered:
        if merged:
            last = merged[-1]
            touching = span.lo < last.hi or (span.lo == last.hi and (last.hi_closed or span.lo_closed))
            if touching:
                if span.hi > last.hi:
                    merged[-1] = Span(last.lo, span.hi, last.lo_closed, span.hi_closed)
                elif span.hi == last.hi:
                    merged[-1] = Span(last.lo, last.hi, last.lo_closed, last.hi_closed or span.hi_closed)
                continue
        merged.append(span)
    return tuple(merged)


def intersect(first, second):
    pieces = []
    for a in first:
        for b in second:
            if a.lo > b.lo or (a.lo == b.lo and not a.lo_closed):
                lo, lo_closed = a.lo, a.lo_closed and (a.lo != b.lo or b.lo_closed)
            else:
                lo, lo_closed = b.lo, b.lo_closed
            if a.hi < b.hi or (a.hi == b.hi and not a.hi_closed):
                hi, hi_closed = a.hi, a.hi_closed and (a.hi != b.hi or b.hi_closed)
            else:
                hi, hi_closed = b.hi, b.hi_closed
            pieces.append(Span(lo, hi, lo_closed, hi_closed))
    return normalize(pieces)


def complement_within(spans, domain):
    gaps = []
    start, start_closed = domain.lo, domain.lo_closed
    for span in spans:
        gaps.append(Span(start, span.lo, start_closed, not span.lo_closed))
        start, start_closed = span.hi, not span.hi_closed
    gaps.append(Span(start, domain.hi, start_closed, domain.hi_closed))
    return normalize(gaps)


@dataclass(frozen=True)
class ArcSet:
    """A canonical finite union of spans; meaningful relative to its oracle's domain."""
    spans: tuple = ()

    def __bool__(self):
        return bool(self.spans)


class SpanOracle(ConnectivityOracle):
    """
    Connected sets are the single intervals of a dense order.

    ``domain`` is the span of all points. With ``wraps`` set the domain is a
    circle cut at its origin: ``domain.hi`` is excluded and glued to
    ``domain.lo``.
    """
    model = 'spans'
    domain = None
    wraps = False

    def canonical(self, value):
        """Representative of a point inside the domain."""
        return value

    def value_json(self, value):
        raise NotImplementedError

    def point_json(self, point):
        return self.value_json(point)

    @property
    def descriptor(self):
        return {'model': self.model}

    def make(self, spans):
        return ArcSet(normalize(spans))

    def whole(self):
        return ArcSet((self.domain,))

    def empty(self):
        return ArcSet()

    def _check_point(self, value):
        value = self.canonical(value)
        if not self.domain.contains(value):
            raise DegeneratePoints(f'{self.value_json(value)} lies outside the model')
        return value

    def point(self, value):
        value = self._check_point(value)
        return ArcSet((Span(value, value, True, True),))

    def from_points(self, points):
        return self.make(Span(value, value, True, True) for value in map(self._check_point, points))

    def interval(self, lo, hi, lo_closed=False, hi_closed=False):
        """The interval from lo to hi; on a circle it runs through the origin when hi <= lo."""
        lo, hi = self._check_point(lo), self._check_point(hi)
        if lo < hi:
            return self.make([Span(lo, hi, lo_closed, hi_closed)])
        if not self.wraps:
            raise DegeneratePoints(f'Empty interval from {self.value_json(lo)} to {self.value_json(hi)}')
        return self.make([
            Span(lo, self.domain.hi, lo_closed, False),
            Span(self.domain.lo, hi, True, hi_closed),
        ])

    def union(self, first, second):
        return self.make(first.spans + second.spans)

    def intersection(self, first, second):
        return ArcSet(intersect(first.spans, second.spans))

    def complement(self, expr):
        return ArcSet(complement_within(expr.spans, self.domain))

    def contains(self, expr, point):
        value = self.canonical(point)
        return any(span.contains(value) for span in expr.spans)

    def pieces(self, expr):
        """Maximal intervals of expr as span groups; a group of two runs through the origin."""
        spans = expr.spans
        if (
            self.wraps and len(spans) >= 2
            and spans[0].lo == self.domain.lo and spans[0].lo_closed
            and spans[-1].hi == self.domain.hi
        ):
            return [(spans[-1], spans[0])] + [(span,) for span in spans[1:-1]]
        return [(span,) for span in spans]

    def is_connected(self, expr):
        return len(self.pieces(expr)) <= 1

    def components(self, expr):
        return [ArcSet(normalize(group)) for group in self.pieces(expr)]

    def single_point(self, expr):
        if len(expr.spans) == 1 and expr.spans[0].is_point:
            return expr.spans[0].lo
        return None

    def ends(self, expr):
        """Start and end of a connected, non-full, non-point expr."""
        pieces = self.pieces(expr)
        if len(pieces) != 1:
            return None
        group = pieces[0]
        start, end = group[0].lo, group[-1].hi
        if self.wraps and end == self.domain.hi:
            end = self.domain.lo
        return start, end

    def boundary_pairs(self, expr):
        ends = self.ends(expr)
        if ends is None or ends[0] == ends[1]:
            return []
        return [ends]

    def serialize(self, expr):
        arcs, points = [], []
        full = expr.spans == (self.domain,)
        if not full:
            for group in self.pieces(expr):
                if len(group) == 1 and group[0].is_point:
                    points.append(self.value_json(group[0].lo))
                    continue
                first, last = group[0], group[-1]
                end = last.hi
                if self.wraps and end == self.domain.hi:
                    end = self.domain.lo
                arcs.append({
                    'start': self.value_json(first.lo),
                    'end': self.value_json(end),
                    'start_closed': first.lo_closed,
                    'end_closed': last.hi_closed,
                })
        return {'arcs': arcs, 'points': points, 'full': full}
