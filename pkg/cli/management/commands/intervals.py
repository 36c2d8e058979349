from orders.conversions import validate_seprel
from orders.exceptions import InvalidRelation
from orders.intervals import is_dense, open_interval, order_topology_basis
from orders.serializers import SeparationRelationSerializer

from cli.utils import PASSED, ReportCommand, deserialize


class Command(ReportCommand):
    help = 'Open intervals of a separation relation: both sides of the chord {a, b} relative to c'
    schema_hint = '{"n": int, "separated": [[[a, b], [c, d]], ...]}'

    def add_options(self, parser):
        parser.add_argument('--a', type=int, required=True, help='First endpoint of the chord.')
        parser.add_argument('--b', type=int, required=True, help='Second endpoint of the chord.')
        parser.add_argument('--c', type=int, required=True, help='Reference point off the chord.')
        parser.add_argument('--basis', action='store_true', help='Also list every open interval of the relation.')

    def arguments(self, options):
        return {'a': options['a'], 'b': options['b'], 'c': options['c'], 'basis': options['basis']}

    def evaluate(self, payload, args):
        raw = deserialize(SeparationRelationSerializer, payload)
        validity = validate_seprel(raw)
        if not validity.passed:
            raise InvalidRelation(f'Relation violates {validity.axiom}: {validity.witness}', validity)
        relation = raw.to_relation()
        a, b, c = args['a'], args['b'], args['c']
        report = {
            'chord': sorted((a, b)),
            'reference': c,
            'away_from_c': sorted(open_interval(relation, a, b, c, False)),
            'containing_c': sorted(open_interval(relation, a, b, c, True)),
            'dense': is_dense(relation).to_dict(),
        }
        if args.get('basis'):
            report['basis'] = order_topology_basis(relation).as_sets()
        return report, PASSED
