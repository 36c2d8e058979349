from rest_framework import serializers

from connectivity.axioms import derive_seprel
from connectivity.exceptions import ComponentCount
from orders.conversions import validate_seprel
from orders.reports import AxiomReport
from orders.serializers import SeparationRelationSerializer

from cli.utils import ReportCommand, read_space_and_sample, verdict_code


class Command(ReportCommand):
    help = 'Separation relation induced by co-pair components on a sample (points are relabelled 0..k-1)'
    schema_hint = '{"n", "family", "sample"?} or {"model": "rational-circle"|"big-circle", "sample": [points]}'

    def evaluate(self, payload, args):
        space, sample = read_space_and_sample(payload)
        if sample is None:
            sample = payload.get('sample', sorted(space.points))
            if not isinstance(sample, list) or any(point not in space.points for point in sample):
                raise serializers.ValidationError({'sample': 'Sample points must belong to the space'})
        labels = [space.point_json(point) for point in sample]
        try:
            relation = derive_seprel(space, sample)
        except ComponentCount as e:
            report = AxiomReport.fail('two-components', pair=e.pair, count=e.count)
            return {'labels': labels, 'relation': None, 'validity': report.to_dict()}, verdict_code(False)
        validity = validate_seprel(relation)
        return {
            'labels': labels,
            'relation': SeparationRelationSerializer(relation).data,
            'validity': validity.to_dict(),
        }, verdict_code(validity.passed)
