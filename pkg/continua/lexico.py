"""
The lexicographic big interval: sequences in [0, 1] indexed by the naturals,
compared at their first differing coordinate.

Only eventually constant rational sequences are represented. They contain
the two ends and the reference points 1/3 and 2/3 (constant), and are closed
under everything used here: midpoints, finite suprema, truncation and the
reflection t -> 1 - t.
"""
import logging
from dataclasses import dataclass
from enum import StrEnum
from fractions import Fraction
from functools import total_ordering
from itertools import count

from .exceptions import LexInvariantError, ModelError, NotOrdered
from .rational import format_rational

logger = logging.getLogger(__name__)

ZERO = Fraction(0)
ONE = Fraction(1)


class Comparison(StrEnum):
    LESS = 'Less'
    EQUAL = 'Equal'
    GREATER = 'Greater'


def _coordinate_value(value):
    value = Fraction(value)
    if not ZERO <= value <= ONE:
        raise ModelError(f'Coordinates must lie in [0, 1], got {value}')
    return value


@total_ordering
@dataclass(frozen=True, eq=True)
class LexPoint:
    """
    An eventually constant sequence.

    Coordinate i is the explicit entry at i when there is one, otherwise the
    tail. Entries equal to the tail are dropped, so equal sequences have
    equal representations.
    """
    entries: tuple = ()
    tail: Fraction = ZERO

    def __post_init__(self):
        tail = _coordinate_value(self.tail)
        entries = {}
        for index, value in self.entries:
            if isinstance(index, bool) or not isinstance(index, int) or index < 0:
                raise ModelError(f'Entry indices must be natural numbers, got {index!r}')
            if index in entries:
                raise ModelError(f'Repeated entry index {index}')
            entries[index] = _coordinate_value(value)
        object.__setattr__(self, 'tail', tail)
        object.__setattr__(
            self,
            'entries',
            tuple(sorted((index, value) for index, value in entries.items() if value != tail)),
        )

    @classmethod
    def constant(cls, value):
        return cls((), value)

    @classmethod
    def from_prefix(cls, prefix, tail=ZERO):
        return cls(tuple(enumerate(prefix)), tail)

    @property
    def support(self):
        return len(self.entries)

    @property
    def horizon(self):
        """First index from which every coordinate equals the tail."""
        return self.entries[-1][0] + 1 if self.entries else 0

    def coordinate(self, index):
        for position, value in self.entries:
            if position == index:
                return value
        return self.tail

    def replace(self, index, value):
        entries = dict(self.entries)
        entries[index] = value
        return LexPoint(tuple(entries.items()), self.tail)

    def __lt__(self, other):
        if not isinstance(other, LexPoint):
            return NotImplemented
        return lex_compare(self, other) is Comparison.LESS

    def to_json(self):
        return {
            'entries': [[index, format_rational(value)] for index, value in self.entries],
            'tail': format_rational(self.tail),
        }


MIN_L = LexPoint.constant(ZERO)
MAX_L = LexPoint.constant(ONE)
ELL_1 = LexPoint.constant(Fraction(1, 3))
ELL_2 = LexPoint.constant(Fraction(2, 3))


def first_difference(x, y):
    """Smallest index where x and y differ, or None when they are equal."""
    explicit = sorted({index for index, _ in x.entries} | {index for index, _ in y.entries})
    gap = None
    if x.tail != y.tail:
        taken = set(explicit)
        gap = next(index for index in count() if index not in taken)
    for index in explicit:
        if gap is not None and index > gap:
            break
        if x.coordinate(index) != y.coordinate(index):
            return index
    return gap


def lex_compare(x, y):
    index = first_difference(x, y)
    if index is None:
        return Comparison.EQUAL
    if x.coordinate(index) < y.coordinate(index):
        return Comparison.LESS
    return Comparison.GREATER


def lex_sup(points):
    """
    Supremum by the coordinate recursion: m_0 is the largest first
    coordinate, m_(k+1) the largest (k+1)-th coordinate among the points
    agreeing with m up to k.

    Args:
        points: non-empty finite collection of LexPoint

    Returns:
        LexPoint, equal to the maximum of the points
    """
    points = list(points)
    if not points:
        raise ModelError('The supremum of an empty set is not defined here')
    horizon = max(point.horizon for point in points)
    candidates = points
    prefix = []
    for index in range(horizon + 1):
        top = max(point.coordinate(index) for point in candidates)
        prefix.append(top)
        candidates = [point for point in candidates if point.coordinate(index) == top]
    # past the horizon every candidate sits on its tail, all equal to prefix[-1]
    result = LexPoint.from_prefix(prefix, prefix[-1])
    if result != max(points):
        logger.error(f'Supremum recursion gave {result.to_json()}, maximum is {max(points).to_json()}')
        raise LexInvariantError('Supremum recursion disagrees with the maximum')
    return result


def lex_midpoint(x, y):
    """Coordinatewise average of x < y; lies strictly between them."""
    if not x < y:
        raise NotOrdered(f'Midpoint needs x < y, got {x.to_json()} and {y.to_json()}')
    indices = sorted({index for index, _ in x.entries} | {index for index, _ in y.entries})
    return LexPoint(
        tuple((index, (x.coordinate(index) + y.coordinate(index)) / 2) for index in indices),
        (x.tail + y.tail) / 2,
    )


def lex_reflect(x):
    """The order-reversing involution t -> 1 - t applied to every coordinate."""
    return LexPoint(tuple((index, ONE - value) for index, value in x.entries), ONE - x.tail)


def lex_truncate(x, k):
    """Keep coordinates before k, set the rest to 0."""
    return LexPoint(tuple((index, x.coordinate(index)) for index in range(k)), ZERO)


@dataclass(frozen=True)
class LexInterval:
    """Open interval of L; a missing bound stands for -inf or +inf."""
    lower: LexPoint | None
    upper: LexPoint | None

    def contains(self, point):
        return (self.lower is None or self.lower < point) and (self.upper is None or point < self.upper)

    def within(self, other):
        lower_ok = other.lower is None or (self.lower is not None and other.lower <= self.lower)
        upper_ok = other.upper is None or (self.upper is not None and self.upper <= other.upper)
        return lower_ok and upper_ok

    def to_json(self):
        return {
            'lower': '-inf' if self.lower is None else self.lower.to_json(),
            'upper': '+inf' if self.upper is None else self.upper.to_json(),
        }


def _lower_bound(x, k):
    if x == MIN_L:
        return None
    if x.tail == ZERO:
        # finitely many non-zero coordinates: shrink the last one
        last = max(index for index, value in x.entries if value != ZERO)
        return x.replace(last, x.coordinate(last) * (1 - Fraction(1, k)))
    return lex_truncate(x, k)


def lex_local_base(x, k):
    """
    The k-th member of a countable, nested neighbourhood base of x.

    Lower bound: if x has a last non-zero coordinate it is scaled by
    1 - 1/k, otherwise x is truncated after k coordinates. The upper bound
    is the same construction seen through the reflection.
    """
    if k < 1:
        raise ModelError(f'k must be a positive integer, got {k}')
    lower = _lower_bound(x, k)
    reflected = _lower_bound(lex_reflect(x), k)
    upper = None if reflected is None else lex_reflect(reflected)
    return LexInterval(lower, upper)


def lex_partition_class(x):
    """1 for [min, 1/3 const], 2 for the open middle part, 3 for [2/3 const, max]."""
    if x <= ELL_1:
        return 1
    if x < ELL_2:
        return 2
    return 3
