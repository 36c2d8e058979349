"""
Shared plumbing for the JSON management commands.

Every command reads its payload (a file path or "-" for stdin), evaluates
it, and prints an envelope

    {"command": name, "args": {...}, "input": payload, "report": {...}}

that `manage.py replay` can re-evaluate. Exit codes: 0 pass, 1 violation,
failure or found counterexample, 2 input or usage error, 3 budget exhausted.
"""
import io
import logging
import sys
from pathlib import Path

from django.core.management.base import BaseCommand, CommandError
from rest_framework import serializers
from rest_framework.exceptions import ParseError
from rest_framework.parsers import JSONParser
from rest_framework.renderers import JSONRenderer

from connectivity.axioms import ALL_AXIOMS, check_axioms
from connectivity.exceptions import ConnectivityError
from connectivity.serializers import AxiomSelectionField, ConnectivitySerializer
from continua.exceptions import ModelError
from continua.serializers import circle_oracle, point_field
from orders.conversions import cyclic_order_from_ternary, validate_seprel
from orders.exceptions import InvalidCyclicOrder, StructureError
from orders.reports import AxiomReport
from orders.serializers import (
    CyclicOrderSerializer,
    LinearOrderSerializer,
    SeparationRelationSerializer,
    TernaryTableSerializer,
)
from propsuite.exceptions import SuiteError
from search.exceptions import SearchError

logger = logging.getLogger(__name__)

PASSED = 0
VIOLATION = 1
INPUT_ERROR = 2
BUDGET_EXHAUSTED = 3

INPUT_ERRORS = (StructureError, ConnectivityError, ModelError, SearchError, SuiteError)


def parse_json(raw):
    try:
        return JSONParser().parse(io.BytesIO(raw))
    except ParseError as e:
        raise CommandError(f'Input is not valid JSON: {e.detail}', returncode=INPUT_ERROR)


def read_json(path):
    if path == '-':
        return parse_json(sys.stdin.buffer.read())
    try:
        return parse_json(Path(path).read_bytes())
    except OSError as e:
        raise CommandError(f'Cannot read {path}: {e.strerror}', returncode=INPUT_ERROR)


def render_json(data, pretty=False):
    context = {'indent': 2} if pretty else {}
    return JSONRenderer().render(data, renderer_context=context).decode()


def deserialize(serializer_class, data, **context):
    """Validate a payload with a DRF serializer and return the saved object."""
    serializer = serializer_class(data=data, context=context)
    serializer.is_valid(raise_exception=True)
    return serializer.save()


def verdict_code(passed):
    return PASSED if passed else VIOLATION


class ReportCommand(BaseCommand):
    """
    Base class for the JSON commands.

    Subclasses set `takes_input`, add their own options in `add_options`,
    turn options into JSON-ready `arguments`, and implement
    `evaluate(payload, args) -> (report, exit_code)`. evaluate must depend
    on nothing but its two arguments so that replay re-derives the verdict.
    """
    takes_input = True
    schema_hint = ''

    @property
    def name(self):
        return self.__module__.rsplit('.', 1)[-1]

    def add_arguments(self, parser):
        if self.takes_input:
            parser.add_argument(
                'input',
                nargs='?',
                default='-',
                help='JSON payload file, or - for stdin (default).',
            )
        parser.add_argument('--pretty', action='store_true', help='Indent the JSON output.')
        parser.add_argument('--output', help='Write the report to this file instead of stdout.')
        self.add_options(parser)

    def add_options(self, parser):
        pass

    def arguments(self, options):
        return {}

    def read_payload(self, options):
        return read_json(options['input']) if self.takes_input else None

    def evaluate(self, payload, args):
        raise NotImplementedError

    def guarded(self, function, *args):
        """Call function with library errors mapped to CommandError."""
        try:
            return function(*args)
        except serializers.ValidationError as e:
            hint = f' Expected {self.schema_hint}.' if self.schema_hint else ''
            raise CommandError(f'Invalid input: {e.detail}.{hint}', returncode=INPUT_ERROR)
        except INPUT_ERRORS as e:
            raise CommandError(f'{type(e).__name__}: {e}', returncode=INPUT_ERROR)

    def run_evaluation(self, payload, args):
        return self.guarded(self.evaluate, payload, args)

    def write(self, data, options):
        text = render_json(data, options.get('pretty', False))
        if options.get('output'):
            Path(options['output']).write_text(text + '\n')
        else:
            self.stdout.write(text)

    def handle(self, *args, **options):
        payload = self.read_payload(options)
        arguments = self.guarded(self.arguments, options)
        report, code = self.run_evaluation(payload, arguments)
        self.write({'command': self.name, 'args': arguments, 'input': payload, 'report': report}, options)
        if code != PASSED:
            logger.info(f'{self.name} finished with exit code {code}')
            raise CommandError(f'{self.name}: {self.failure_message(code)}', returncode=code)

    def failure_message(self, code):
        if code == BUDGET_EXHAUSTED:
            return 'budget exhausted before the search space was covered'
        return 'verdict is a violation'


def usage_error(message):
    return CommandError(message, returncode=INPUT_ERROR)


def parse_axioms(text):
    try:
        return list(AxiomSelectionField().run_validation(text))
    except serializers.ValidationError as e:
        raise usage_error(f'Invalid axioms: {" ".join(map(str, e.detail))} Choose from {", ".join(ALL_AXIOMS)}.')


def read_space_and_sample(payload):
    """(oracle, sample) for a finite space, or a circle model with an explicit sample."""
    if isinstance(payload, dict) and 'model' in payload:
        oracle = circle_oracle(payload['model'])
        raw = payload.get('sample')
        if not isinstance(raw, list):
            raise serializers.ValidationError({'sample': 'Infinite models need a list of sample points'})
        field = point_field(oracle)
        return oracle, [field.run_validation(point) for point in raw]
    return deserialize(ConnectivitySerializer, payload), None


KINDS = ('linear', 'cyclic', 'ternary', 'seprel', 'connectivity')


def validate_structure(kind, payload, axioms=ALL_AXIOMS):
    """Reports for one structure payload of the given kind."""
    if kind == 'linear':
        deserialize(LinearOrderSerializer, payload)
        return [AxiomReport.ok('linear-order')]
    if kind == 'cyclic':
        deserialize(CyclicOrderSerializer, payload)
        return [AxiomReport.ok('cyclic-order')]
    if kind == 'ternary':
        # shape first, then whether a linear order induces the table
        table = TernaryTableSerializer(data=payload)
        table.is_valid(raise_exception=True)
        try:
            cyclic_order_from_ternary(range(table.validated_data['n']), table.validated_data['triples'])
        except InvalidCyclicOrder as e:
            return [AxiomReport.fail('cyclic-order', reason=str(e))]
        return [AxiomReport.ok('cyclic-order')]
    if kind == 'seprel':
        return [validate_seprel(deserialize(SeparationRelationSerializer, payload))]
    return check_axioms(deserialize(ConnectivitySerializer, payload), axioms)


def guess_kind(payload):
    """Kind of a bare structure payload, read from its keys."""
    if not isinstance(payload, dict):
        return None
    for key, kind in (('order', 'linear'), ('rotation', 'cyclic'), ('triples', 'ternary'),
                      ('separated', 'seprel'), ('family', 'connectivity')):
        if key in payload:
            return kind
    return None


