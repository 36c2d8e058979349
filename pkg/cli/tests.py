import io
import json
import tempfile
from pathlib import Path
from unittest import mock

from django.conf import settings
from django.core.management import call_command
from django.core.management.base import CommandError
from django.test import SimpleTestCase, TestCase, override_settings

from continua.serializers import LexPointSerializer
from propsuite.properties import REGISTRY

from .entry import main
from .management.commands.search import checkpoint_path
from .utils import INPUT_ERROR, VIOLATION, guess_kind


def fixture(name):
    return str(settings.FIXTURES_DIR / name)


def run(*args):
    """(envelope, exit code) of a management command."""
    out = io.StringIO()
    try:
        call_command(*args, stdout=out, stderr=io.StringIO())
        code = 0
    except CommandError as e:
        code = e.returncode
    text = out.getvalue()
    return (json.loads(text) if text.strip() else None), code


def chord_pairs(relation):
    return {frozenset((tuple(first), tuple(second))) for first, second in relation['separated']}


class ValidateCommandTests(SimpleTestCase):
    def test_square_relation_is_valid(self):
        envelope, code = run('validate', '--kind', 'seprel', fixture('square_seprel.json'))
        self.assertEqual(code, 0)
        self.assertEqual(envelope['command'], 'validate')
        self.assertTrue(envelope['report']['valid'])

    def test_kind_is_guessed(self):
        envelope, code = run('validate', fixture('discrete6.json'))
        self.assertEqual(code, 0)
        self.assertEqual(envelope['report']['kind'], 'connectivity')
        self.assertEqual(len(envelope['report']['reports']), 4)

    def test_broken_ternary_table_is_a_violation(self):
        with tempfile.TemporaryDirectory() as directory:
            path = Path(directory) / 'table.json'
            path.write_text(json.dumps({'n': 3, 'triples': [[0, 1, 2], [0, 2, 1]]}))
            envelope, code = run('validate', '--kind', 'ternary', str(path))
        self.assertEqual(code, VIOLATION)
        self.assertFalse(envelope['report']['valid'])

    def test_unknown_axiom_is_a_usage_error(self):
        _, code = run('validate', '--axioms', 'C9', fixture('discrete6.json'))
        self.assertEqual(code, INPUT_ERROR)

    def test_axioms_are_read_in_canonical_order(self):
        envelope, code = run('validate', '--axioms', 'C3, C1', fixture('discrete6.json'))
        self.assertEqual(code, 0)
        self.assertEqual(envelope['args']['axioms'], ['C1', 'C3'])
        self.assertEqual([report['axiom'] for report in envelope['report']['reports']], ['C1', 'C3'])

    def test_guess_kind(self):
        self.assertEqual(guess_kind({'n': 4, 'rotation': [0, 1, 2, 3]}), 'cyclic')
        self.assertIsNone(guess_kind([1, 2]))


class ConvertCommandTests(SimpleTestCase):
    def test_hexagon_to_relation(self):
        structure, code = run('convert', '--from', 'cyclic', '--to', 'seprel', fixture('hexagon.json'))
        self.assertEqual(code, 0)
        expected = json.loads(Path(fixture('hexagon_seprel.json')).read_text())
        self.assertEqual(structure['n'], 6)
        self.assertEqual(chord_pairs(structure), chord_pairs(expected))

    def test_relation_back_to_cyclic_order(self):
        structure, _ = run('convert', '--from', 'seprel', '--to', 'cyclic', fixture('hexagon_seprel.json'))
        rotation = structure['rotation']
        self.assertEqual(sorted(rotation), list(range(6)))
        # anchored at 0, 1, 2 in that orientation
        start = rotation.index(0)
        self.assertEqual(rotation[start:] + rotation[:start], [0, 1, 2, 3, 4, 5])

    def test_bad_anchor(self):
        _, code = run('convert', '--from', 'seprel', '--to', 'cyclic', '--anchor', '0,1', fixture('square_seprel.json'))
        self.assertEqual(code, INPUT_ERROR)


class QueryCommandTests(SimpleTestCase):
    def test_hexagon_intervals(self):
        envelope, code = run('intervals', '--a', '1', '--b', '3', '--c', '2', fixture('hexagon_seprel.json'))
        self.assertEqual(code, 0)
        self.assertEqual(envelope['report']['away_from_c'], [0, 4, 5])
        self.assertEqual(envelope['report']['containing_c'], [2])

    def test_rational_arcs_fall_into_components(self):
        envelope, code = run('components', fixture('rational_arcs.json'))
        self.assertEqual(code, 0)
        self.assertFalse(envelope['report']['connected'])
        self.assertEqual(len(envelope['report']['components']), 4)

    def test_discrete_circle_is_not_two_flimsy(self):
        envelope, code = run('flimsy_check', '--n', '2', fixture('discrete6.json'))
        self.assertEqual(code, VIOLATION)
        flimsy = envelope['report']['flimsy']
        self.assertEqual(flimsy['verdict'], 'fail')
        self.assertEqual(flimsy['witness']['removed'], [0, 1])
        self.assertEqual(envelope['report']['t1']['verdict'], 'fail')

    def test_flimsy_check_needs_a_sample_on_a_circle(self):
        with tempfile.TemporaryDirectory() as directory:
            path = Path(directory) / 'circle.json'
            path.write_text(json.dumps({'model': 'rational-circle'}))
            _, code = run('flimsy_check', '--n', '2', str(path))
        self.assertEqual(code, INPUT_ERROR)

    def test_rational_circle_relation_on_four_points(self):
        envelope, code = run('derive_seprel', fixture('rational_sample.json'))
        self.assertEqual(code, 0)
        self.assertEqual(envelope['report']['labels'], ['0/1', '1/4', '1/2', '3/4'])
        self.assertEqual(chord_pairs(envelope['report']['relation']), {frozenset(((0, 2), (1, 3)))})

    def test_missing_file(self):
        _, code = run('components', fixture('no_such_file.json'))
        self.assertEqual(code, INPUT_ERROR)


class LexCommandTests(SimpleTestCase):
    def test_compare(self):
        envelope, code = run('lex', 'compare', fixture('l1.json'), fixture('l2.json'))
        self.assertEqual(code, 0)
        self.assertEqual(envelope['report']['comparison'], 'Less')

    def test_sup_of_the_minimum(self):
        envelope, _ = run('lex', 'sup', fixture('min_l_points.json'))
        self.assertEqual(envelope['report']['sup'], {'entries': [], 'tail': '0/1'})

    def test_sup_of_several_points(self):
        points = [json.loads(Path(fixture(name)).read_text()) for name in ('l1.json', 'lex_x.json', 'l2.json')]
        with tempfile.TemporaryDirectory() as directory:
            path = Path(directory) / 'points.json'
            path.write_text(json.dumps({'points': points}))
            envelope, code = run('lex', 'sup', str(path))
        self.assertEqual(code, 0)
        self.assertEqual(envelope['report']['sup'], {'entries': [], 'tail': '2/3'})

    def test_sup_of_no_points(self):
        with tempfile.TemporaryDirectory() as directory:
            path = Path(directory) / 'points.json'
            path.write_text(json.dumps({'points': []}))
            _, code = run('lex', 'sup', str(path))
        self.assertEqual(code, INPUT_ERROR)

    def test_local_base_contains_the_point(self):
        envelope, code = run('lex', 'base', '--k', '3', fixture('lex_x.json'))
        self.assertEqual(code, 0)
        x = read_lex(json.loads(Path(fixture('lex_x.json')).read_text()))
        interval = envelope['report']['interval']
        self.assertLess(read_lex(interval['lower']), x)
        self.assertLess(x, read_lex(interval['upper']))

    def test_partition_class(self):
        envelope, _ = run('lex', 'class', fixture('l1.json'))
        self.assertEqual(envelope['report']['class'], 1)

    def test_wrong_number_of_inputs(self):
        _, code = run('lex', 'compare', fixture('l1.json'))
        self.assertEqual(code, INPUT_ERROR)


def read_lex(data):
    serializer = LexPointSerializer(data=data)
    serializer.is_valid(raise_exception=True)
    return serializer.save()


class BigCircleCommandTests(SimpleTestCase):
    def write(self, directory, payload):
        path = Path(directory) / 'payload.json'
        path.write_text(json.dumps(payload))
        return str(path)

    def test_membership(self):
        payload = {
            'a': {'tail': '1/3'},
            'b': {'tail': '2/3'},
            'q': {'tail': '1/2'},
            'side': 'between',
        }
        with tempfile.TemporaryDirectory() as directory:
            envelope, code = run('bigcircle', '--operation', 'membership', self.write(directory, payload))
        self.assertEqual(code, 0)
        self.assertTrue(envelope['report']['member'])

    def test_crossing_chords(self):
        point = {value: {'tail': value} for value in ('1/4', '1/2', '3/4', '7/8')}
        payload = {'chords': [[point['1/4'], point['3/4']], [point['1/2'], point['7/8']]]}
        with tempfile.TemporaryDirectory() as directory:
            envelope, code = run('bigcircle', '--operation', 'seprel', self.write(directory, payload))
        self.assertEqual(code, 0)
        self.assertTrue(envelope['report']['separated'])
        self.assertEqual(envelope['report']['agreement']['verdict'], 'pass')

    def test_unordered_bounds(self):
        payload = {'a': {'tail': '2/3'}, 'b': {'tail': '1/3'}, 'q': {'tail': '1/2'}, 'side': 'outside'}
        with tempfile.TemporaryDirectory() as directory:
            _, code = run('bigcircle', '--operation', 'membership', self.write(directory, payload))
        self.assertEqual(code, INPUT_ERROR)


class SearchCommandTests(TestCase):
    def test_no_three_flimsy_space_on_four_points(self):
        envelope, code = run('search', '--flimsy', '3', '--points', '4', '--pruning', 'definitional')
        self.assertEqual(code, 0)
        self.assertIsNone(envelope['report']['found'])
        self.assertTrue(envelope['report']['exhausted'])
        self.assertNotIn('from_ledger', envelope['report'])

    def test_repeated_search_is_answered_from_the_ledger(self):
        run('search', '--flimsy', '2', '--points', '3', '--pruning', 'definitional')
        envelope, code = run('search', '--flimsy', '2', '--points', '3', '--pruning', 'definitional')
        self.assertEqual(code, 0)
        self.assertTrue(envelope['report']['from_ledger'])
        envelope, _ = run('search', '--flimsy', '2', '--points', '3', '--pruning', 'definitional', '--force')
        self.assertNotIn('from_ledger', envelope['report'])

    def test_bad_budget(self):
        _, code = run('search', '--flimsy', '2', '--points', '3', '--budget', 'soon')
        self.assertEqual(code, INPUT_ERROR)


class SuiteCommandTests(SimpleTestCase):
    def test_small_run_passes(self):
        envelope, code = run('suite', '--cases', '5', '--property', 'lex.total-order', '--seed', '7')
        self.assertEqual(code, 0)
        report = envelope['report']
        self.assertTrue(report['passed'])
        self.assertEqual(report['seed'], 7)
        self.assertEqual(envelope['args']['properties'], ['lex.total-order'])

    def test_seed_determines_the_output(self):
        first, _ = run('suite', '--cases', '5', '--property', 'rc.four-points', '--seed', '11')
        second, _ = run('suite', '--cases', '5', '--property', 'rc.four-points', '--seed', '11')
        self.assertEqual(first, second)

    def test_list(self):
        envelope, code = run('suite', '--list')
        self.assertEqual(code, 0)
        self.assertEqual(len(envelope['report']['properties']), len(REGISTRY))

    def test_unknown_property(self):
        _, code = run('suite', '--cases', '1', '--property', 'no.such-property')
        self.assertEqual(code, INPUT_ERROR)

    def test_zero_cases(self):
        _, code = run('suite', '--cases', '0')
        self.assertEqual(code, INPUT_ERROR)


class ReplayCommandTests(SimpleTestCase):
    def setUp(self):
        self.directory = tempfile.TemporaryDirectory()
        self.addCleanup(self.directory.cleanup)

    def replay(self, payload):
        path = Path(self.directory.name) / 'envelope.json'
        path.write_text(json.dumps(payload))
        return run('replay', str(path))

    def test_violation_replays_as_a_violation(self):
        envelope, code = run('flimsy_check', '--n', '2', fixture('discrete6.json'))
        self.assertEqual(code, VIOLATION)
        replayed, code = self.replay(envelope)
        self.assertEqual(code, VIOLATION)
        self.assertEqual(replayed['report']['exit_code'], VIOLATION)
        self.assertTrue(replayed['report']['matches'])

    def test_lex_envelope_replays(self):
        envelope, _ = run('lex', 'compare', fixture('l2.json'), fixture('l1.json'))
        replayed, code = self.replay(envelope)
        self.assertEqual(code, 0)
        self.assertEqual(replayed['report']['report']['comparison'], 'Greater')
        self.assertTrue(replayed['report']['matches'])

    def test_edited_report_does_not_match(self):
        envelope, _ = run('validate', fixture('square_seprel.json'))
        envelope['report']['valid'] = False
        replayed, code = self.replay(envelope)
        self.assertEqual(code, 0)
        self.assertFalse(replayed['report']['matches'])

    def test_bare_structure_is_validated(self):
        structure, _ = run('convert', '--from', 'cyclic', '--to', 'seprel', fixture('square.json'))
        replayed, code = self.replay(structure)
        self.assertEqual(code, 0)
        self.assertEqual(replayed['report']['kind'], 'seprel')
        self.assertTrue(replayed['report']['valid'])

    def test_unknown_command(self):
        _, code = self.replay({'command': 'migrate', 'args': {}, 'input': None, 'report': {}})
        self.assertEqual(code, INPUT_ERROR)

    def test_incomplete_envelope(self):
        _, code = self.replay({'command': 'validate'})
        self.assertEqual(code, INPUT_ERROR)


class EntryPointTests(SimpleTestCase):
    def main(self, *args):
        with mock.patch('sys.stdout', new_callable=io.StringIO) as out, \
                mock.patch('sys.stderr', new_callable=io.StringIO):
            code = main(['manage.py', *args])
        return code, out.getvalue()

    def test_pass(self):
        code, out = self.main('validate', '--kind', 'seprel', fixture('square_seprel.json'))
        self.assertEqual(code, 0)
        self.assertTrue(json.loads(out)['report']['valid'])

    def test_violation(self):
        code, _ = self.main('flimsy_check', '--n', '2', fixture('discrete6.json'))
        self.assertEqual(code, 1)

    def test_missing_option(self):
        code, _ = self.main('flimsy_check', fixture('discrete6.json'))
        self.assertEqual(code, 2)

    def test_unknown_command(self):
        code, _ = self.main('frobnicate')
        self.assertEqual(code, 2)

    def test_invalid_json(self):
        with tempfile.TemporaryDirectory() as directory:
            path = Path(directory) / 'broken.json'
            path.write_text('{"n": 4,')
            code, _ = self.main('validate', str(path))
        self.assertEqual(code, 2)

    def test_pretty_output(self):
        code, out = self.main('lex', 'compare', fixture('l1.json'), fixture('l2.json'), '--pretty')
        self.assertEqual(code, 0)
        self.assertIn('\n  "command"', out)


class CheckpointPathTests(SimpleTestCase):
    @override_settings(SEARCH_CHECKPOINT_DIR=Path('/tmp/flimsy-checkpoints'))
    def test_bare_names_live_in_the_checkpoint_directory(self):
        self.assertEqual(checkpoint_path('g6.json'), '/tmp/flimsy-checkpoints/g6.json')
        self.assertEqual(checkpoint_path('runs/g6.json'), 'runs/g6.json')
        self.assertIsNone(checkpoint_path(None))
