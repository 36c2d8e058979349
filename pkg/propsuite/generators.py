"""
Deterministic case generation.

Every property draws from its own stream, seeded from the suite seed and
the property id, so adding or removing a property never changes the cases
another property sees.
"""
import hashlib
import random
from fractions import Fraction
from math import gcd

from continua.bigcircle import project
from continua.lexico import LexPoint

from .exceptions import GeneratorExhausted


def stream_seed(seed, property_id):
    digest = hashlib.sha256(f'{seed}:{property_id}'.encode()).digest()
    return int.from_bytes(digest[:8], 'big')


class CaseStream:
    def __init__(self, seed, property_id, max_denominator=64, max_support=8, max_retries=100):
        self.property_id = property_id
        self.random = random.Random(stream_seed(seed, property_id))
        self.max_denominator = max_denominator
        self.max_support = max_support
        self.max_retries = max_retries

    @classmethod
    def for_property(cls, config, property_id):
        return cls(
            config.seed,
            property_id,
            max_denominator=config.max_denominator,
            max_support=config.max_support,
            max_retries=config.max_retries,
        )

    def integer(self, lo, hi):
        return self.random.randint(lo, hi)

    def choice(self, options):
        return self.random.choice(list(options))

    def chance(self, probability):
        return self.random.random() < probability

    def _fraction(self, closed_top):
        q = self.random.randint(1, self.max_denominator)
        p = self.random.randint(0, q if closed_top else q - 1)
        return Fraction(p, q)

    def rational(self):
        """A point of the rational circle, in [0, 1)."""
        return self._fraction(closed_top=False)

    def unit(self):
        """A coordinate value in [0, 1]."""
        return self._fraction(closed_top=True)

    def distinct(self, draw, k):
        for _ in range(self.max_retries):
            values = [draw() for _ in range(k)]
            if len(set(values)) == k:
                return values
        raise GeneratorExhausted(
            f'{self.property_id}: no {k} distinct values after {self.max_retries} attempts'
        )

    def rationals(self, k):
        return self.distinct(self.rational, k)

    def cyclic_rationals(self, k):
        """k distinct rationals in counterclockwise order, starting anywhere."""
        values = sorted(self.rationals(k))
        shift = self.random.randrange(k)
        return values[shift:] + values[:shift]

    def lex_point(self):
        support = self.random.randint(0, self.max_support)
        indices = self.random.sample(range(2 * self.max_support), support)
        return LexPoint(tuple((index, self.unit()) for index in indices), self.unit())

    def lex_points(self, k):
        return self.distinct(self.lex_point, k)

    def circle_points(self, k):
        """Distinct points of the big circle, as representatives."""
        return self.distinct(lambda: project(self.lex_point()).representative, k)

    def connected_arc(self, circle):
        """A connected subset of the rational circle of a random shape."""
        roll = self.random.random()
        if roll < 0.05:
            return circle.empty()
        if roll < 0.1:
            return circle.whole()
        if roll < 0.2:
            return circle.point(self.rational())
        if roll < 0.3:
            return circle.complement(circle.point(self.rational()))
        start, end = self.rationals(2)
        return circle.interval(start, end, self.chance(0.5), self.chance(0.5))


def simpler_rationals(value, closed_top=False):
    """
    Rationals strictly simpler than value: smaller denominator, or the same
    denominator and a smaller numerator. Ordered simplest first.
    """
    value = Fraction(value)
    for q in range(1, value.denominator + 1):
        for p in range(q + 1 if closed_top else q):
            if gcd(p, q) != 1:
                continue
            if (q, p) >= (value.denominator, value.numerator):
                return
            yield Fraction(p, q)
