from propsuite.faults import FAULTS
from propsuite.properties import REGISTRY
from propsuite.runner import SuiteConfig, run_suite

from cli.utils import ReportCommand, verdict_code


class Command(ReportCommand):
    help = 'Runs the seeded property suite against the exact models (or a fault-injected bundle)'
    takes_input = False

    def add_options(self, parser):
        parser.add_argument('--seed', type=int, help='Suite seed (default FLIMSY_SEED). Fully determines the report.')
        parser.add_argument('--cases', type=int, help='Cases per property (default SUITE_CASES_PER_PROPERTY).')
        parser.add_argument(
            '--property',
            action='append',
            dest='properties',
            default=[],
            help='Run only this property id; repeat for several.',
        )
        parser.add_argument('--jobs', type=int, help='Worker threads (default FLIMSY_JOBS).')
        parser.add_argument('--no-shrink', action='store_true', help='Report counterexamples unshrunk.')
        parser.add_argument('--fault', choices=sorted(FAULTS), help='Run against a deliberately broken model.')
        parser.add_argument('--list', action='store_true', help='List the registered properties and exit.')

    def arguments(self, options):
        overrides = {'properties': tuple(options['properties']), 'shrink': not options['no_shrink']}
        for key, option in (('seed', 'seed'), ('cases_per_property', 'cases'), ('jobs', 'jobs')):
            if options[option] is not None:
                overrides[key] = options[option]
        config = SuiteConfig.from_settings(**overrides)
        return {**config.to_dict(), 'fault': options['fault'], 'list': options['list']}

    def evaluate(self, payload, args):
        if args.get('list'):
            return {'properties': [prop.to_dict() for prop in REGISTRY.select()]}, verdict_code(True)
        settings_keys = ('seed', 'cases_per_property', 'max_denominator', 'max_support', 'max_retries', 'jobs', 'shrink')
        config = SuiteConfig(properties=tuple(args['properties']), **{key: args[key] for key in settings_keys})
        bundle = FAULTS[args['fault']]() if args.get('fault') else None
        report = run_suite(config, bundle)
        return report.to_dict(), verdict_code(report.passed)
