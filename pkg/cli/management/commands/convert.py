from orders.conversions import cyclic_to_seprel, linear_to_cyclic, seprel_to_cyclic
from orders.serializers import (
    CyclicOrderSerializer,
    LinearOrderSerializer,
    SeparationRelationSerializer,
    TernaryTableSerializer,
)

from cli.utils import PASSED, ReportCommand, deserialize, usage_error

SOURCES = ('linear', 'cyclic', 'ternary', 'seprel')
TARGETS = ('cyclic', 'seprel', 'ternary')


def to_cyclic(kind, payload, anchor=None):
    if kind == 'linear':
        return linear_to_cyclic(deserialize(LinearOrderSerializer, payload))
    if kind == 'cyclic':
        return deserialize(CyclicOrderSerializer, payload)
    if kind == 'ternary':
        return deserialize(TernaryTableSerializer, payload)
    relation = deserialize(SeparationRelationSerializer, payload).to_relation()
    if anchor is None:
        anchor = tuple(sorted(relation.points)[:3])
    return seprel_to_cyclic(relation, anchor)


def render(order, target):
    if target == 'cyclic':
        return CyclicOrderSerializer(order).data
    if target == 'seprel':
        return SeparationRelationSerializer(cyclic_to_seprel(order)).data
    return {'n': order.n, 'triples': [list(triple) for triple in order.triples()]}


class Command(ReportCommand):
    help = 'Converts between linear orders, cyclic orders, ternary tables and separation relations'
    schema_hint = 'the structure format named by --from (see JSON_SCHEMAS.md)'

    def add_options(self, parser):
        parser.add_argument('--from', dest='source', choices=SOURCES, required=True, help='Input structure kind.')
        parser.add_argument('--to', dest='target', choices=TARGETS, required=True, help='Output structure kind.')
        parser.add_argument(
            '--anchor',
            help='Three point ids a,b,c fixing the orientation when reading a separation relation; '
                 '[a, b, c] holds in the result. Defaults to the three smallest ids.',
        )

    def arguments(self, options):
        anchor = None
        if options['anchor']:
            try:
                anchor = [int(part) for part in options['anchor'].split(',')]
            except ValueError:
                raise usage_error(f'--anchor takes three integers, got {options["anchor"]!r}')
            if len(anchor) != 3:
                raise usage_error(f'--anchor takes three integers, got {options["anchor"]!r}')
        return {'from': options['source'], 'to': options['target'], 'anchor': anchor}

    def evaluate(self, payload, args):
        anchor = tuple(args['anchor']) if args.get('anchor') else None
        order = to_cyclic(args['from'], payload, anchor)
        return render(order, args['to']), PASSED

    def handle(self, *args, **options):
        # the bare structure, not an envelope: it feeds straight into other commands
        payload = self.read_payload(options)
        structure, _ = self.run_evaluation(payload, self.guarded(self.arguments, options))
        self.write(structure, options)
