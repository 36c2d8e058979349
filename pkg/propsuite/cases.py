"""
Serialized cases: how each kind of property argument is written to JSON,
read back, and made simpler while shrinking.

Decoding goes through the DRF serializers of the owning apps, so a
counterexample in a report replays exactly as it was checked.
"""
from dataclasses import dataclass
from fractions import Fraction

from rest_framework import serializers

from continua.rational import format_rational
from continua.serializers import ArcSetSerializer, LexPointSerializer, RationalField

from .generators import simpler_rationals

RATIONAL = 'rational'
RATIONALS = 'rationals'
LEX = 'lex'
LEXES = 'lexes'
CIRCLE_POINT = 'circle-point'
CIRCLE_POINTS = 'circle-points'
ARC_SET = 'arc-set'
INTEGER = 'integer'
INTEGERS = 'integers'


@dataclass(frozen=True)
class Field:
    kind: str
    minimum: int = 0

    @property
    def is_list(self):
        return self.kind in (RATIONALS, LEXES, CIRCLE_POINTS, INTEGERS)

    @property
    def item(self):
        return {
            RATIONALS: Field(RATIONAL),
            LEXES: Field(LEX),
            CIRCLE_POINTS: Field(CIRCLE_POINT),
            INTEGERS: Field(INTEGER),
        }[self.kind]

    def encode(self, value, bundle):
        if self.is_list:
            return [self.item.encode(item, bundle) for item in value]
        if self.kind == RATIONAL:
            return format_rational(value)
        if self.kind in (LEX, CIRCLE_POINT):
            return value.to_json()
        if self.kind == ARC_SET:
            return bundle.rational_circle.serialize(value)
        return value

    def decode(self, data, bundle):
        if self.is_list:
            if not isinstance(data, list) or len(data) < self.minimum:
                raise serializers.ValidationError(f'Expected a list of at least {self.minimum} items')
            return [self.item.decode(item, bundle) for item in data]
        if self.kind == RATIONAL:
            return RationalField().run_validation(data) % 1
        if self.kind in (LEX, CIRCLE_POINT):
            serializer = LexPointSerializer(data=data)
            serializer.is_valid(raise_exception=True)
            return serializer.save()
        if self.kind == ARC_SET:
            serializer = ArcSetSerializer(data=data, context={'oracle': bundle.rational_circle})
            serializer.is_valid(raise_exception=True)
            return serializer.save()
        if isinstance(data, bool) or not isinstance(data, int) or data < self.minimum:
            raise serializers.ValidationError(f'Expected an integer of at least {self.minimum}')
        return data

    def simpler(self, data):
        """Encoded candidates strictly simpler than data, most promising first."""
        if self.kind == INTEGERS:
            return
        if self.is_list:
            if len(data) > self.minimum:
                for index in range(len(data)):
                    yield data[:index] + data[index + 1:]
            for index, item in enumerate(data):
                for candidate in self.item.simpler(item):
                    yield data[:index] + [candidate] + data[index + 1:]
            return
        if self.kind == RATIONAL:
            for candidate in simpler_rationals(Fraction(data)):
                yield format_rational(candidate)
        elif self.kind in (LEX, CIRCLE_POINT):
            yield from _simpler_lex(data)
        elif self.kind == ARC_SET:
            yield from _simpler_arc_set(data)
        elif self.kind == INTEGER:
            yield from range(self.minimum, data)


def _simpler_lex(data):
    entries, tail = data['entries'], data['tail']
    for index in range(len(entries)):
        yield {'entries': entries[:index] + entries[index + 1:], 'tail': tail}
    for index, (position, value) in enumerate(entries):
        for candidate in simpler_rationals(Fraction(value), closed_top=True):
            replaced = [position, format_rational(candidate)]
            yield {'entries': entries[:index] + [replaced] + entries[index + 1:], 'tail': tail}
    for candidate in simpler_rationals(Fraction(tail), closed_top=True):
        yield {'entries': entries, 'tail': format_rational(candidate)}


def _simpler_arc_set(data):
    arcs, points = data.get('arcs', []), data.get('points', [])
    for index, arc in enumerate(arcs):
        for end in ('start', 'end'):
            for candidate in simpler_rationals(Fraction(arc[end])):
                changed = {**arc, end: format_rational(candidate)}
                yield {**data, 'arcs': arcs[:index] + [changed] + arcs[index + 1:]}
    for index, point in enumerate(points):
        for candidate in simpler_rationals(Fraction(point)):
            yield {**data, 'points': points[:index] + [format_rational(candidate)] + points[index + 1:]}

