import re
from pathlib import Path

from django.conf import settings
from django.db.models import Q

from connectivity.axioms import ALL_AXIOMS
from search.engine import DEFINITIONAL, PRUNING_MODES, RAW, SearchConfig, find_n_flimsy
from search.exceptions import SearchTimeout
from search.models import SearchRun

from cli.utils import BUDGET_EXHAUSTED, PASSED, VIOLATION, ReportCommand, parse_axioms, usage_error

BUDGET_UNITS = {'s': 1, 'm': 60, 'h': 3600}


def parse_budget(text):
    """Seconds from "90", "90s", "10m" or "1h"."""
    if text is None:
        return None
    match = re.fullmatch(r'(\d+(?:\.\d+)?)([smh]?)', text.strip())
    if not match:
        raise usage_error(f'Budget must look like 90s, 10m or 1h, got {text!r}')
    return float(match.group(1)) * BUDGET_UNITS[match.group(2) or 's']


def checkpoint_path(name):
    if not name or Path(name).parent != Path('.'):
        return name
    return str(Path(getattr(settings, 'SEARCH_CHECKPOINT_DIR', '.')) / name)


def result_code(report):
    return VIOLATION if report['found'] is not None else PASSED


class Command(ReportCommand):
    help = 'Searches the finite connectivity spaces on --points points for an n-flimsy one'
    takes_input = False

    def add_options(self, parser):
        parser.add_argument('--flimsy', type=int, required=True, help='n of the n-flimsy property.')
        parser.add_argument('--points', type=int, required=True, help='Size of the ground set.')
        parser.add_argument(
            '--pruning',
            choices=PRUNING_MODES,
            help='raw, definitional or theorem-assisted. Defaults to raw up to SEARCH_RAW_LIMIT points, '
                 'definitional above.',
        )
        parser.add_argument(
            '--axioms',
            default=','.join(ALL_AXIOMS),
            help='Comma-separated axioms the space must satisfy (default C1,C2,C3,C4).',
        )
        parser.add_argument('--jobs', type=int, help='Worker processes (default FLIMSY_JOBS).')
        parser.add_argument('--budget', help='Wall-clock budget such as 30s, 10m or 1h.')
        parser.add_argument(
            '--checkpoint',
            help='Checkpoint file to resume from and write to. A bare file name lives in SEARCH_CHECKPOINT_DIR.',
        )
        parser.add_argument(
            '--force',
            action='store_true',
            help='Run even if the ledger already holds a conclusive run of this configuration.',
        )

    def arguments(self, options):
        pruning = options['pruning']
        if pruning is None:
            pruning = RAW if options['points'] <= getattr(settings, 'SEARCH_RAW_LIMIT', 4) else DEFINITIONAL
        return {
            'points': options['points'],
            'flimsy': options['flimsy'],
            'pruning': pruning,
            'axioms': parse_axioms(options['axioms']),
            'jobs': options['jobs'] or getattr(settings, 'FLIMSY_JOBS', 1),
            'budget': parse_budget(options['budget']),
            'checkpoint': checkpoint_path(options['checkpoint']),
            'force': options['force'],
        }

    def evaluate(self, payload, args):
        config = SearchConfig.from_settings(
            args['points'],
            args['flimsy'],
            axioms=tuple(args['axioms']),
            pruning=args['pruning'],
            jobs=args['jobs'],
            budget=args['budget'],
            checkpoint=args['checkpoint'],
        )
        if not args['force']:
            previous = SearchRun.for_config(config).filter(Q(exhausted=True) | Q(found__isnull=False)).first()
            if previous is not None:
                self.stderr.write(self.style.WARNING(
                    f'Answered from the ledger run of {previous.created_at:%Y-%m-%d %H:%M:%S}. '
                    f'Use --force to search again.'
                ))
                report = {**previous.to_dict(), 'from_ledger': True}
                return report, result_code(report)

        try:
            result = find_n_flimsy(config.ground_size, config.flimsy_n, config)
        except SearchTimeout as e:
            report = {**e.result.to_dict(), 'timeout': True, 'checkpoint': e.checkpoint}
            return report, BUDGET_EXHAUSTED
        SearchRun.record(result)
        report = result.to_dict()
        return report, result_code(report)
