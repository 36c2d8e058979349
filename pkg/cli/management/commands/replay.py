import logging

from django.core.management import get_commands, load_command_class
from rest_framework import serializers

from cli.utils import ReportCommand, guess_kind, parse_json, render_json, validate_structure, verdict_code

logger = logging.getLogger(__name__)

# keys that depend on whether a search report came from the ledger
PROVENANCE_KEYS = ('from_ledger', 'pruning_log')


def normalized(report):
    """A report as it reads after a JSON round trip, provenance keys dropped."""
    data = parse_json(render_json(report).encode())
    if isinstance(data, dict):
        for key in PROVENANCE_KEYS:
            data.pop(key, None)
    return data


def report_command(name):
    if name == 'replay' or get_commands().get(name) != 'cli':
        raise serializers.ValidationError({'command': f'{name!r} is not a replayable command'})
    command = load_command_class('cli', name)
    if not isinstance(command, ReportCommand):
        raise serializers.ValidationError({'command': f'{name!r} is not a replayable command'})
    return command


class Command(ReportCommand):
    help = 'Re-evaluates a report envelope (or validates a bare structure) and re-derives its verdict'
    schema_hint = '{"command", "args", "input", "report"} as printed by the other commands, or a bare structure'

    def evaluate(self, payload, args):
        if not isinstance(payload, dict) or 'command' not in payload:
            kind = guess_kind(payload)
            if kind is None:
                raise serializers.ValidationError('Neither a report envelope nor a known structure')
            reports = validate_structure(kind, payload)
            valid = all(report.passed for report in reports)
            return {
                'command': 'validate',
                'kind': kind,
                'valid': valid,
                'reports': [report.to_dict() for report in reports],
            }, verdict_code(valid)

        missing = [key for key in ('args', 'input', 'report') if key not in payload]
        if missing:
            raise serializers.ValidationError({key: 'This field is required.' for key in missing})
        command = report_command(payload['command'])
        command.stderr = self.stderr
        report, code = command.run_evaluation(payload['input'], payload['args'])
        matches = normalized(report) == normalized(payload['report'])
        if not matches:
            logger.warning(f'Replayed {payload["command"]} report differs from the recorded one')
            self.stderr.write(self.style.WARNING('The replayed report differs from the recorded one.'))
        return {
            'command': payload['command'],
            'exit_code': code,
            'matches': matches,
            'report': report,
        }, code
