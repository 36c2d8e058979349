from rest_framework import serializers

from connectivity.serializers import ConnectivitySerializer
from continua.serializers import ArcSetSerializer, circle_oracle

from cli.utils import PASSED, ReportCommand, deserialize


def read_space_and_subset(payload):
    """
    (oracle, subset) from either a circle query {"model", "set"} or a
    finite query {"n", "family", "subset"}.
    """
    if not isinstance(payload, dict):
        raise serializers.ValidationError('Expected a JSON object')
    if 'model' in payload:
        oracle = circle_oracle(payload['model'])
        return oracle, deserialize(ArcSetSerializer, payload.get('set', {}), oracle=oracle)
    space = deserialize(ConnectivitySerializer, payload)
    subset = payload.get('subset', list(range(space.size)))
    if not isinstance(subset, list) or any(
        isinstance(point, bool) or not isinstance(point, int) or not 0 <= point < space.size for point in subset
    ):
        raise serializers.ValidationError({'subset': f'Expected point ids in 0..{space.size - 1}'})
    return space, space.from_points(subset)


class Command(ReportCommand):
    help = 'Connected components of a subset of a finite connectivity space or a circle model'
    schema_hint = '{"n", "family", "subset"} or {"model": "rational-circle"|"big-circle", "set": arc set}'

    def evaluate(self, payload, args):
        space, subset = read_space_and_subset(payload)
        parts = space.components(subset)
        return {
            'model': space.descriptor['model'],
            'subset': space.serialize(subset),
            'connected': space.is_connected(subset),
            'components': [space.serialize(part) for part in parts],
        }, PASSED
