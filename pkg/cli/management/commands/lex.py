from rest_framework import serializers

from continua.lexico import (
    lex_compare,
    lex_local_base,
    lex_midpoint,
    lex_partition_class,
    lex_reflect,
    lex_sup,
    lex_truncate,
)
from continua.serializers import LexIntervalSerializer, LexPointListSerializer, LexPointSerializer

from cli.utils import PASSED, ReportCommand, deserialize, read_json

# operation -> number of LexPoint inputs
OPERATIONS = {
    'compare': 2,
    'sup': 1,
    'midpoint': 2,
    'base': 1,
    'class': 1,
    'reflect': 1,
    'truncate': 1,
}


def read_point(data):
    return deserialize(LexPointSerializer, data)


class Command(ReportCommand):
    help = 'Operations on eventually constant sequences of the lexicographic interval'
    takes_input = False
    schema_hint = 'LexPoint {"entries": [[index, "p/q"], ...], "tail": "p/q"} (sup takes {"points": [...]})'

    def add_options(self, parser):
        parser.add_argument('operation', choices=sorted(OPERATIONS), help='Operation to run.')
        parser.add_argument('inputs', nargs='+', help='LexPoint JSON files, - for stdin.')
        parser.add_argument('--k', type=int, default=1, help='Index of the base interval, or truncation length.')

    def read_payload(self, options):
        return [read_json(path) for path in options['inputs']]

    def arguments(self, options):
        return {'operation': options['operation'], 'k': options['k']}

    def evaluate(self, payload, args):
        operation = args['operation']
        if len(payload) != OPERATIONS[operation]:
            raise serializers.ValidationError(f'{operation} takes {OPERATIONS[operation]} input(s), got {len(payload)}')

        if operation == 'sup':
            points = deserialize(LexPointListSerializer, payload[0])
            return {'sup': lex_sup(points).to_json()}, PASSED
        points = [read_point(data) for data in payload]
        if operation == 'compare':
            return {'comparison': lex_compare(*points).value}, PASSED
        if operation == 'midpoint':
            return {'midpoint': lex_midpoint(*points).to_json()}, PASSED
        x = points[0]
        if operation == 'base':
            if args['k'] < 1:
                raise serializers.ValidationError({'k': 'k must be a positive integer'})
            return {'k': args['k'], 'interval': LexIntervalSerializer(lex_local_base(x, args['k'])).data}, PASSED
        if operation == 'class':
            return {'class': lex_partition_class(x)}, PASSED
        if operation == 'reflect':
            return {'reflection': lex_reflect(x).to_json()}, PASSED
        return {'truncation': lex_truncate(x, args['k']).to_json()}, PASSED
