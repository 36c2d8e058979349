from rest_framework import serializers

from .conversions import cyclic_order_from_ternary
from .exceptions import StructureError
from .reports import AxiomReport, Verdict
from .structures import CyclicOrder, LinearOrderWithEnds, RawRelation, SetFamily


def _dense_ground(n, points, field_name):
    outside = sorted(point for point in points if point >= n)
    if outside:
        raise serializers.ValidationError({field_name: f'Points {outside} are outside 0..{n - 1}'})


class ChordField(serializers.Field):
    """A chord as a two-element list of point ids."""
    default_error_messages = {
        'invalid': 'A chord is a list of two distinct non-negative integers.',
    }

    def to_internal_value(self, data):
        if not isinstance(data, (list, tuple)) or len(data) != 2:
            self.fail('invalid')
        a, b = data
        for point in (a, b):
            if isinstance(point, bool) or not isinstance(point, int) or point < 0:
                self.fail('invalid')
        if a == b:
            self.fail('invalid')
        return (min(a, b), max(a, b))

    def to_representation(self, value):
        return sorted(value)


class LinearOrderSerializer(serializers.Serializer):
    """Linear order with ends: {"n": int, "order": [ints]}"""
    n = serializers.IntegerField(min_value=2)
    order = serializers.ListField(child=serializers.IntegerField(min_value=0), min_length=2)

    def validate(self, attrs):
        n, order = attrs['n'], attrs['order']
        body = order[:-1] if len(order) > 2 and order[0] == order[-1] else order
        if sorted(body) != list(range(n)):
            raise serializers.ValidationError(
                {'order': f'Order must list each of 0..{n - 1} once (the ends may share an id)'}
            )
        return attrs

    def create(self, validated_data):
        try:
            return LinearOrderWithEnds(tuple(validated_data['order']))
        except StructureError as e:
            raise serializers.ValidationError({'order': str(e)})

    def to_representation(self, instance):
        return {'n': len(set(instance.points)), 'order': list(instance.points)}


class CyclicOrderSerializer(serializers.Serializer):
    """Cyclic order: {"n": int, "rotation": [ints]}"""
    n = serializers.IntegerField(min_value=3)
    rotation = serializers.ListField(child=serializers.IntegerField(min_value=0))

    def validate(self, attrs):
        if sorted(attrs['rotation']) != list(range(attrs['n'])):
            raise serializers.ValidationError(
                {'rotation': f'Rotation must be a permutation of 0..{attrs["n"] - 1}'}
            )
        return attrs

    def create(self, validated_data):
        return CyclicOrder(tuple(validated_data['rotation']))

    def to_representation(self, instance):
        return {'n': instance.n, 'rotation': list(instance.rotation)}


class TernaryTableSerializer(serializers.Serializer):
    """Raw ternary table: {"n": int, "triples": [[x, y, z], ...]}"""
    n = serializers.IntegerField(min_value=3)
    triples = serializers.ListField(
        child=serializers.ListField(child=serializers.IntegerField(min_value=0), min_length=3, max_length=3)
    )

    def validate(self, attrs):
        _dense_ground(attrs['n'], [point for triple in attrs['triples'] for point in triple], 'triples')
        return attrs

    def create(self, validated_data):
        try:
            return cyclic_order_from_ternary(range(validated_data['n']), validated_data['triples'])
        except StructureError as e:
            raise serializers.ValidationError({'triples': str(e)})


class SeparationRelationSerializer(serializers.Serializer):
    """
    Separation relation: {"n": int, "separated": [[[a, b], [c, d]], ...]}

    Reading yields an unchecked RawRelation; S1-S4 are the validator's job.
    """
    n = serializers.IntegerField(min_value=0)
    separated = serializers.ListField(
        child=serializers.ListField(child=ChordField(), min_length=2, max_length=2)
    )
    directed = serializers.BooleanField(required=False, default=False)

    def validate(self, attrs):
        _dense_ground(
            attrs['n'],
            [point for pair in attrs['separated'] for chord in pair for point in chord],
            'separated',
        )
        return attrs

    def create(self, validated_data):
        return RawRelation(
            frozenset(range(validated_data['n'])),
            tuple((first, second) for first, second in validated_data['separated']),
            validated_data.get('directed', False),
        )

    def to_representation(self, instance):
        if isinstance(instance, RawRelation):
            instance = instance.to_relation()
        return {
            'n': instance.n,
            'separated': [[first.as_list(), second.as_list()] for first, second in instance.sorted_pairs()],
        }


class SetFamilySerializer(serializers.Serializer):
    """Family of subsets: {"n": int, "family": [[ints], ...]}"""
    n = serializers.IntegerField(min_value=0)
    family = serializers.ListField(child=serializers.ListField(child=serializers.IntegerField(min_value=0)))

    def validate(self, attrs):
        _dense_ground(attrs['n'], [point for member in attrs['family'] for point in member], 'family')
        for member in attrs['family']:
            if len(set(member)) != len(member):
                raise serializers.ValidationError({'family': f'Repeated point in member {member}'})
        return attrs

    def create(self, validated_data):
        return SetFamily.from_sets(range(validated_data['n']), validated_data['family'])

    def to_representation(self, instance):
        return {'n': instance.size, 'family': instance.as_sets()}


class AxiomReportSerializer(serializers.Serializer):
    axiom = serializers.CharField()
    verdict = serializers.ChoiceField(choices=[verdict.value for verdict in Verdict])
    witness = serializers.DictField(required=False, default=dict)

    def create(self, validated_data):
        return AxiomReport(
            validated_data['axiom'],
            Verdict(validated_data['verdict']),
            validated_data.get('witness', {}),
        )

    def to_representation(self, instance):
        return instance.to_dict()
