from rest_framework import serializers

from connectivity.axioms import is_n_flimsy, is_T1

from cli.utils import ReportCommand, read_space_and_sample, verdict_code


class Command(ReportCommand):
    help = 'Checks whether a space is n-flimsy (and T1); exits 1 with the removal witness when it is not'
    schema_hint = '{"n", "family"} or {"model": "rational-circle"|"big-circle", "sample": [points]}'

    def add_options(self, parser):
        parser.add_argument('--n', type=int, required=True, help='Number of removed points that must disconnect.')

    def arguments(self, options):
        return {'n': options['n']}

    def evaluate(self, payload, args):
        space, sample = read_space_and_sample(payload)
        if args['n'] < 1:
            raise serializers.ValidationError({'n': 'n must be a positive integer'})
        flimsy = is_n_flimsy(space, args['n'], sample=sample)
        t1 = is_T1(space, sample=sample)
        report = {
            'model': space.descriptor['model'],
            'n': args['n'],
            'flimsy': flimsy.to_dict(),
            't1': t1.to_dict(),
        }
        return report, verdict_code(flimsy.passed)
