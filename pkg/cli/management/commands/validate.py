from connectivity.axioms import ALL_AXIOMS

from cli.utils import KINDS, ReportCommand, guess_kind, parse_axioms, usage_error, validate_structure, verdict_code


class Command(ReportCommand):
    help = 'Validates a structure: linear or cyclic order, ternary table, separation relation or connectivity space'
    schema_hint = 'one of the structure formats in JSON_SCHEMAS.md'

    def add_options(self, parser):
        parser.add_argument(
            '--kind',
            choices=KINDS,
            help='Structure kind. Guessed from the payload keys when omitted.',
        )
        parser.add_argument(
            '--axioms',
            default=','.join(ALL_AXIOMS),
            help='Comma-separated axioms checked on a connectivity space (default C1,C2,C3,C4).',
        )

    def arguments(self, options):
        return {
            'kind': options['kind'],
            'axioms': parse_axioms(options['axioms']),
        }

    def evaluate(self, payload, args):
        kind = args['kind'] or guess_kind(payload)
        if kind is None:
            raise usage_error(f'Cannot tell the structure kind; pass --kind with one of {", ".join(KINDS)}')
        reports = validate_structure(kind, payload, tuple(args['axioms']))
        valid = all(report.passed for report in reports)
        return {'kind': kind, 'valid': valid, 'reports': [report.to_dict() for report in reports]}, verdict_code(valid)
