from fractions import Fraction

from rest_framework import serializers

from .bigcircle import BETWEEN, OUTSIDE, BigCircle
from .exceptions import ModelError
from .lexico import LexPoint
from .rational import RationalCircle, format_rational, rational_circle


class RationalField(serializers.Field):
    """An exact rational written "p/q" (a bare integer is accepted too)."""
    default_error_messages = {
        'invalid': 'A rational is a string "p/q" or an integer.',
    }

    def __init__(self, *args, **kwargs):
        self.unit = kwargs.pop('unit', False)
        super().__init__(*args, **kwargs)

    def to_internal_value(self, data):
        if isinstance(data, bool) or not isinstance(data, (str, int)):
            self.fail('invalid')
        try:
            value = Fraction(data)
        except (ValueError, ZeroDivisionError):
            self.fail('invalid')
        if self.unit and not 0 <= value <= 1:
            raise serializers.ValidationError(f'{format_rational(value)} is outside [0, 1]')
        return value

    def to_representation(self, value):
        return format_rational(value)


class LexPointSerializer(serializers.Serializer):
    """LexPoint: {"entries": [[index, "p/q"], ...], "tail": "p/q"}"""
    entries = serializers.ListField(
        child=serializers.ListField(min_length=2, max_length=2),
        required=False,
        default=list,
    )
    tail = RationalField(unit=True)

    def validate_entries(self, value):
        field = RationalField(unit=True)
        entries = []
        for index, raw in value:
            if isinstance(index, bool) or not isinstance(index, int) or index < 0:
                raise serializers.ValidationError(f'Entry index {index!r} is not a natural number')
            entries.append((index, field.run_validation(raw)))
        indices = [index for index, _ in entries]
        if len(set(indices)) != len(indices):
            raise serializers.ValidationError('Entry indices must be distinct')
        return entries

    def create(self, validated_data):
        try:
            return LexPoint(tuple(validated_data.get('entries', ())), validated_data['tail'])
        except ModelError as e:
            raise serializers.ValidationError({'entries': str(e)})

    def to_representation(self, instance):
        return instance.to_json()


class LexPointField(serializers.Field):
    default_error_messages = {
        'invalid': 'A LexPoint is an object {"entries": [...], "tail": "p/q"}.',
    }

    def to_internal_value(self, data):
        if not isinstance(data, dict):
            self.fail('invalid')
        serializer = LexPointSerializer(data=data)
        serializer.is_valid(raise_exception=True)
        return serializer.save()

    def to_representation(self, value):
        return value.to_json()


class LexPointListSerializer(serializers.Serializer):
    """A finite set of LexPoints: {"points": [LexPoint, ...]}"""
    points = serializers.ListField(child=LexPointField(), min_length=1)

    def create(self, validated_data):
        return validated_data['points']


def point_field(oracle):
    if isinstance(oracle, RationalCircle):
        return RationalField()
    return LexPointField()


class ArcSerializer(serializers.Serializer):
    start = serializers.JSONField()
    end = serializers.JSONField()
    start_closed = serializers.BooleanField(default=False)
    end_closed = serializers.BooleanField(default=False)


class ArcSetSerializer(serializers.Serializer):
    """
    Subset of a circle model: {"arcs": [...], "points": [...], "full": bool}

    Arcs run counterclockwise from start to end and may pass the origin.
    The model is taken from context['oracle'] (rational circle by default).
    """
    arcs = ArcSerializer(many=True, required=False, default=list)
    points = serializers.ListField(child=serializers.JSONField(), required=False, default=list)
    full = serializers.BooleanField(required=False, default=False)

    @property
    def oracle(self):
        return self.context.get('oracle') or rational_circle()

    def create(self, validated_data):
        oracle = self.oracle
        if validated_data.get('full'):
            return oracle.whole()
        field = point_field(oracle)
        result = oracle.from_points(field.run_validation(raw) for raw in validated_data.get('points', []))
        for arc in validated_data.get('arcs', []):
            start, end = field.run_validation(arc['start']), field.run_validation(arc['end'])
            try:
                piece = oracle.interval(start, end, arc['start_closed'], arc['end_closed'])
            except ValueError as e:
                raise serializers.ValidationError({'arcs': str(e)})
            result = oracle.union(result, piece)
        return result

    def to_representation(self, instance):
        return self.oracle.serialize(instance)


class LexIntervalSerializer(serializers.Serializer):
    """Open interval of L with "-inf"/"+inf" for missing bounds (output only)."""

    def to_representation(self, instance):
        return instance.to_json()


class BigCircleMembershipSerializer(serializers.Serializer):
    """{"a": LexPoint, "b": LexPoint, "q": LexPoint, "side": "between"|"outside"}"""
    a = LexPointField()
    b = LexPointField()
    q = LexPointField()
    side = serializers.ChoiceField(choices=[BETWEEN, OUTSIDE])


class BigCircleChordsSerializer(serializers.Serializer):
    """{"chords": [[LexPoint, LexPoint], [LexPoint, LexPoint]]}"""
    chords = serializers.ListField(
        child=serializers.ListField(child=LexPointField(), min_length=2, max_length=2),
        min_length=2,
        max_length=2,
    )


def circle_oracle(model):
    """Oracle for a model name used in payloads."""
    if model == RationalCircle.model:
        return rational_circle()
    if model == BigCircle.model:
        return BigCircle()
    raise serializers.ValidationError({'model': f'Unknown circle model {model!r}'})
