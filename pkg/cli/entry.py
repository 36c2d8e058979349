"""
Process entry point: runs a management command and returns its exit code.
"""
import os
import sys

# the report commands plus the Django commands needed to run the project
COMMANDS = {
    'bigcircle',
    'components',
    'convert',
    'derive_seprel',
    'flimsy_check',
    'intervals',
    'lex',
    'replay',
    'search',
    'suite',
    'validate',
    'help',
    'check',
    'migrate',
    'showmigrations',
    'makemigrations',
    'test',
    'shell',
}


def main(argv=None):
    """Run argv (program name first) and return 0, 1, 2 or 3."""
    os.environ.setdefault('DJANGO_SETTINGS_MODULE', 'flimsy_lab.settings')
    from django.core.management import execute_from_command_line

    from cli.utils import INPUT_ERROR, PASSED

    argv = list(sys.argv if argv is None else argv)
    if len(argv) > 1 and not argv[1].startswith('-') and argv[1] not in COMMANDS:
        sys.stderr.write(f'Unknown command {argv[1]!r}. Available: {", ".join(sorted(COMMANDS))}\n')
        return INPUT_ERROR
    try:
        execute_from_command_line(argv)
    except SystemExit as e:
        if e.code is None:
            return PASSED
        if isinstance(e.code, int):
            return e.code
        sys.stderr.write(f'{e.code}\n')
        return INPUT_ERROR
    return PASSED
