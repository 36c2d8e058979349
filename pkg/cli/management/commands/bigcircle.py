from continua.bigcircle import big_circle_interval_membership, big_circle_seprel
from continua.exceptions import RouteDisagreement
from continua.serializers import BigCircleChordsSerializer, BigCircleMembershipSerializer
from orders.reports import AxiomReport

from cli.utils import PASSED, VIOLATION, ReportCommand

OPERATIONS = ('membership', 'seprel')


class Command(ReportCommand):
    help = 'Interval membership and chord crossing on the circle obtained by gluing the ends of L'
    schema_hint = (
        '{"a", "b", "q": LexPoint, "side": "between"|"outside"} for membership, '
        '{"chords": [[LexPoint, LexPoint], [LexPoint, LexPoint]]} for seprel'
    )

    def add_options(self, parser):
        parser.add_argument('--operation', choices=OPERATIONS, required=True, help='Query to answer.')

    def arguments(self, options):
        return {'operation': options['operation']}

    def evaluate(self, payload, args):
        if args['operation'] == 'membership':
            serializer = BigCircleMembershipSerializer(data=payload)
            serializer.is_valid(raise_exception=True)
            data = serializer.validated_data
            member = big_circle_interval_membership(data['a'], data['b'], data['q'], data['side'])
            return {'side': data['side'], 'member': member}, PASSED

        serializer = BigCircleChordsSerializer(data=payload)
        serializer.is_valid(raise_exception=True)
        first, second = serializer.validated_data['chords']
        try:
            separated = big_circle_seprel(tuple(first), tuple(second))
        except RouteDisagreement as e:
            report = AxiomReport.fail('route-agreement', **e.transcript)
            return {'separated': None, 'agreement': report.to_dict()}, VIOLATION
        return {'separated': separated, 'agreement': AxiomReport.ok('route-agreement').to_dict()}, PASSED
