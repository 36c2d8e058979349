"""
The big circle obtained from the lexicographic interval by gluing its two
ends, and open intervals of the lexicographic interval seen as lines.
"""
import logging
from dataclasses import dataclass

from connectivity.axioms import is_n_flimsy
from orders.conversions import cyclic_to_seprel, linear_to_cyclic
from orders.reports import AxiomReport
from orders.structures import LinearOrderWithEnds

from .arcs import Span, SpanOracle
from .exceptions import ModelError, NotOrdered, RouteDisagreement, SamePoint
from .lexico import MAX_L, MIN_L, LexPoint, lex_midpoint

logger = logging.getLogger(__name__)

BETWEEN = 'between'
OUTSIDE = 'outside'


@dataclass(frozen=True, order=True)
class LexCirclePoint:
    """A point of the big circle; the glued end point is stored as min L."""
    representative: LexPoint

    def __post_init__(self):
        if self.representative == MAX_L:
            object.__setattr__(self, 'representative', MIN_L)

    @property
    def is_glued(self):
        return self.representative == MIN_L

    def to_json(self):
        return self.representative.to_json()


def project(x):
    if isinstance(x, LexCirclePoint):
        return x
    return LexCirclePoint(x)


class BigCircle(SpanOracle):
    """Connected sets are the arcs of the glued interval, with LexPoint endpoints."""
    model = 'big-circle'
    domain = Span(MIN_L, MAX_L, True, False)
    wraps = True

    def canonical(self, value):
        return project(value).representative

    def value_json(self, value):
        return value.to_json()


class LexLine(SpanOracle):
    """The open interval (a, b) of L; connected sets are its intervals."""
    model = 'lex-line'
    wraps = False

    def __init__(self, a, b):
        if not a < b:
            raise NotOrdered(f'A line needs a < b, got {a.to_json()} and {b.to_json()}')
        self.a = a
        self.b = b
        self.domain = Span(a, b, False, False)

    @property
    def descriptor(self):
        return {'model': self.model, 'a': self.a.to_json(), 'b': self.b.to_json()}

    def value_json(self, value):
        return value.to_json()


def big_circle():
    return BigCircle()


def lex_line(a, b):
    return LexLine(a, b)


def _check_chord(a, b):
    if a == b or (a == MIN_L and b == MAX_L):
        raise SamePoint(f'{a.to_json()} and {b.to_json()} are the same point of the circle')
    if not a < b:
        raise NotOrdered(f'Interval bounds need a < b, got {a.to_json()} and {b.to_json()}')


def big_circle_interval_membership(a, b, q, side):
    """
    Does q lie on the given side of the chord {pi(a), pi(b)}?

    'between' is the image of (a, b); 'outside' is everything off the image
    of [a, b]. The glued point is never between and is outside unless a or b
    is an end.
    """
    _check_chord(a, b)
    q = project(q)
    if side == BETWEEN:
        return a < q.representative < b
    if side == OUTSIDE:
        if q.is_glued:
            return not (a == MIN_L or b == MAX_L)
        return q.representative < a or q.representative > b
    raise ModelError(f'Unknown side {side!r}')


def _route_lifted(points):
    """Lift to L with the glued point at both ends, then read the glued order's relation."""
    interior = sorted(point.representative for point in points if not point.is_glued)
    label = {point: index + 1 for index, point in enumerate(interior)}
    label[MIN_L] = 0
    lin = LinearOrderWithEnds((0, *range(1, len(interior) + 1), 0))
    relation = cyclic_to_seprel(linear_to_cyclic(lin))
    return relation, label


def big_circle_seprel(first_chord, second_chord):
    """
    Do the chords cross? Computed from the glued linear order and again from
    interval membership; the two answers must agree.
    """
    a, b = (project(point) for point in first_chord)
    c, d = (project(point) for point in second_chord)
    if len({a, b, c, d}) < 4:
        return False

    relation, label = _route_lifted((a, b, c, d))
    lifted = relation.separates(*(label[point.representative] for point in (a, b, c, d)))

    lo, hi = sorted((a.representative, b.representative))
    membership = (
        big_circle_interval_membership(lo, hi, c, BETWEEN)
        != big_circle_interval_membership(lo, hi, d, BETWEEN)
    )

    if lifted != membership:
        transcript = {
            'chords': [[a.to_json(), b.to_json()], [c.to_json(), d.to_json()]],
            'labels': [[value.to_json(), index] for value, index in sorted(label.items(), key=lambda item: item[1])],
            'lifted': lifted,
            'membership': membership,
        }
        logger.error(f'Big circle routes disagree: {transcript}')
        raise RouteDisagreement('Lifted order and interval membership disagree', transcript)
    return lifted


def check_no_ends_one_flimsy(a, b, sample):
    """
    The open interval (a, b) is connected and falls apart into (a, x) and
    (x, b) when a sampled x is removed, both sides non-empty.
    """
    line = lex_line(a, b)
    sample = sorted(set(sample))
    for x in sample:
        if not a < x < b:
            raise ModelError(f'Sample point {x.to_json()} lies outside the interval')
    if not sample:
        return AxiomReport.vacuous('no-ends-one-flimsy')

    report = is_n_flimsy(line, 1, sample=sample)
    if not report.passed:
        return AxiomReport.fail('no-ends-one-flimsy', **report.witness)

    for x in sample:
        left, right = lex_midpoint(a, x), lex_midpoint(x, b)
        parts = line.components(line.without(line.whole(), x))
        expected = [line.make([Span(a, x, False, False)]), line.make([Span(x, b, False, False)])]
        if parts != expected or not (line.contains(parts[0], left) and line.contains(parts[1], right)):
            return AxiomReport.fail(
                'no-ends-one-flimsy',
                removed=x.to_json(),
                components=[line.serialize(part) for part in parts],
            )
    return AxiomReport.ok('no-ends-one-flimsy')
