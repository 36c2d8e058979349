from rest_framework import serializers

from orders.serializers import SetFamilySerializer
from orders.structures import SetFamily

from .axioms import ALL_AXIOMS
from .spaces import FiniteConnectivity


class ConnectivitySerializer(SetFamilySerializer):
    """
    Finite connectivity space: {"n": int, "family": [[ints], ...]}

    Only the shape is validated here; C1-C4 are reported by the checkers.
    """

    def create(self, validated_data):
        return FiniteConnectivity(SetFamily.from_sets(range(validated_data['n']), validated_data['family']))

    def to_representation(self, instance):
        return {'n': instance.size, 'family': instance.members_as_sets()}


class AxiomSelectionField(serializers.MultipleChoiceField):
    def __init__(self, **kwargs):
        kwargs.setdefault('choices', ALL_AXIOMS)
        super().__init__(**kwargs)

    def to_internal_value(self, data):
        if isinstance(data, str):
            data = [part.strip() for part in data.split(',') if part.strip()]
        chosen = super().to_internal_value(data)
        return tuple(axiom for axiom in ALL_AXIOMS if axiom in chosen)

    def to_representation(self, value):
        return [axiom for axiom in ALL_AXIOMS if axiom in value]
