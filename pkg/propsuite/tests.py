from fractions import Fraction as F

from django.test import SimpleTestCase, override_settings

from continua.lexico import LexPoint

from .bundles import default_bundle
from .exceptions import GeneratorExhausted, NotFailing, SuiteError, UnknownProperty
from .faults import corrupted_bundle, stalled_midpoint_bundle
from .generators import CaseStream, simpler_rationals, stream_seed
from .properties import REGISTRY
from .registry import Registry
from .runner import NOT_SELECTED, SuiteConfig, replay, run_suite, shrink

RATIONAL_CIRCLE_PROPERTIES = tuple(property_id for property_id in REGISTRY.ids() if property_id.startswith('rc.'))


def denominator(text):
    return F(text).denominator


class RegistryTests(SimpleTestCase):
    def test_every_model_is_covered(self):
        models = {REGISTRY.get(property_id).model for property_id in REGISTRY.ids()}
        self.assertEqual(models, {'rational-circle', 'lex', 'big-circle', 'discrete-circle', 'orders'})

    def test_unknown_property(self):
        with self.assertRaises(UnknownProperty):
            REGISTRY.get('rc.no-such-property')
        with self.assertRaises(UnknownProperty):
            run_suite(SuiteConfig(properties=('rc.no-such-property',)))

    def test_duplicate_registration(self):
        registry = Registry()
        registry.property('p', 'orders', {}, lambda stream, bundle: {})(lambda bundle: None)
        with self.assertRaises(ValueError):
            registry.property('p', 'orders', {}, lambda stream, bundle: {})(lambda bundle: None)

    def test_description_comes_from_the_check(self):
        self.assertEqual(
            REGISTRY.get('rc.only-two-components').to_dict()['description'],
            'The complement of two points has exactly two components.',
        )

    def test_decode_needs_every_field(self):
        with self.assertRaises(SuiteError):
            REGISTRY.get('rc.four-points').decode({'a': '0/1'}, default_bundle())


class GeneratorTests(SimpleTestCase):
    def test_streams_are_seeded_per_property(self):
        self.assertEqual(stream_seed(1, 'rc.four-points'), stream_seed(1, 'rc.four-points'))
        self.assertNotEqual(stream_seed(1, 'rc.four-points'), stream_seed(1, 'rc.open-avoids-edges'))
        self.assertNotEqual(stream_seed(1, 'rc.four-points'), stream_seed(2, 'rc.four-points'))

    def test_same_seed_same_cases(self):
        first, second = CaseStream(5, 'p'), CaseStream(5, 'p')
        self.assertEqual([first.rational() for _ in range(20)], [second.rational() for _ in range(20)])

    def test_rationals_respect_the_denominator_bound(self):
        stream = CaseStream(7, 'soundness', max_denominator=16)
        for _ in range(200):
            value = stream.rational()
            self.assertLessEqual(value.denominator, 16)
            self.assertTrue(0 <= value < 1)
            self.assertTrue(0 <= stream.unit() <= 1)

    def test_lex_points_respect_the_support_bound(self):
        stream = CaseStream(7, 'soundness', max_support=3)
        for _ in range(200):
            self.assertLessEqual(stream.lex_point().support, 3)

    def test_point_tuples_are_distinct(self):
        stream = CaseStream(11, 'soundness', max_denominator=6)
        for _ in range(50):
            self.assertEqual(len(set(stream.rationals(5))), 5)
            self.assertEqual(len(set(stream.circle_points(4))), 4)

    def test_cyclic_rationals_run_counterclockwise(self):
        stream = CaseStream(3, 'soundness')
        for _ in range(50):
            values = stream.cyclic_rationals(5)
            descents = sum(values[i] > values[i + 1] for i in range(4))
            self.assertLessEqual(descents, 1)

    def test_complement_outside_points_fall_on_both_sides_of_xi(self):
        prop = REGISTRY.get('rc.complement-representation')
        stream = CaseStream(4, prop.id)
        for _ in range(100):
            case = prop.generate(stream, default_bundle())
            xi, reach = case['xi'], (case['a'] - case['xi']) % 1
            offsets = [(point - xi) % 1 for point in case['outside_points']]
            self.assertTrue(any(offset < reach for offset in offsets), case)
            self.assertTrue(any(offset > reach for offset in offsets), case)

    def test_retry_bound(self):
        stream = CaseStream(1, 'tiny', max_denominator=1, max_retries=5)
        with self.assertRaises(GeneratorExhausted):
            stream.rationals(2)

    def test_simpler_rationals(self):
        self.assertEqual(list(simpler_rationals(F(2, 3))), [F(0), F(1, 2), F(1, 3)])
        self.assertEqual(list(simpler_rationals(F(0))), [])
        self.assertEqual(list(simpler_rationals(F(1, 2), closed_top=True)), [F(0), F(1)])


class SuiteConfigTests(SimpleTestCase):
    def test_bounds_must_be_positive(self):
        with self.assertRaises(SuiteError):
            SuiteConfig(cases_per_property=0)
        with self.assertRaises(SuiteError):
            SuiteConfig(seed=-1)
        with self.assertRaises(SuiteError):
            SuiteConfig(seed=2 ** 64)

    @override_settings(FLIMSY_SEED=99, SUITE_CASES_PER_PROPERTY=3)
    def test_from_settings(self):
        config = SuiteConfig.from_settings()
        self.assertEqual(config.seed, 99)
        self.assertEqual(config.cases_per_property, 3)


class RunSuiteTests(SimpleTestCase):
    def test_every_property_passes_on_the_exact_models(self):
        report = run_suite(SuiteConfig(seed=1, cases_per_property=25))
        failing = [result.to_dict() for result in report.results if not result.passed]
        self.assertEqual(failing, [])
        self.assertTrue(report.passed)
        self.assertEqual([result.id for result in report.results], REGISTRY.ids())
        for result in report.results:
            self.assertEqual(result.cases_run, 25, result.id)

    def test_rational_circle_properties_at_full_strength(self):
        report = run_suite(SuiteConfig(properties=RATIONAL_CIRCLE_PROPERTIES))
        self.assertTrue(report.passed)
        for property_id in RATIONAL_CIRCLE_PROPERTIES:
            self.assertGreaterEqual(report.result(property_id).cases_run, 1000)

    def test_same_seed_same_report(self):
        config = SuiteConfig(seed=42, cases_per_property=10)
        self.assertEqual(run_suite(config).to_dict(), run_suite(config).to_dict())

    def test_worker_count_does_not_change_the_report(self):
        alone = run_suite(SuiteConfig(seed=3, cases_per_property=10), corrupted_bundle())
        pooled = run_suite(SuiteConfig(seed=3, cases_per_property=10, jobs=4), corrupted_bundle())
        self.assertEqual(alone.to_dict()['properties'], pooled.to_dict()['properties'])

    def test_unselected_properties_are_listed(self):
        report = run_suite(SuiteConfig(cases_per_property=5, properties=('lex.sup',)))
        self.assertEqual(len(report.results), len(REGISTRY))
        for result in report.results:
            if result.id == 'lex.sup':
                self.assertEqual(result.cases_run, 5)
            else:
                self.assertEqual(result.skipped, NOT_SELECTED)

    def test_selection_does_not_perturb_other_streams(self):
        config = SuiteConfig(seed=8, cases_per_property=10)
        alone = run_suite(SuiteConfig(seed=8, cases_per_property=10, properties=('rc.only-two-components',)), corrupted_bundle())
        together = run_suite(config, corrupted_bundle())
        self.assertEqual(
            alone.result('rc.only-two-components').counterexample,
            together.result('rc.only-two-components').counterexample,
        )

    def test_corrupted_circle_is_caught(self):
        report = run_suite(
            SuiteConfig(seed=5, cases_per_property=50, properties=('rc.only-two-components',)),
            corrupted_bundle(),
        )
        self.assertFalse(report.passed)
        result = report.result('rc.only-two-components')
        self.assertGreater(result.failures, 0)
        self.assertEqual(result.witness['verdict'], 'fail')
        minimal = result.minimal_counterexample
        self.assertEqual(set(minimal), {'x', 'y'})
        self.assertLessEqual(max(denominator(minimal['x']), denominator(minimal['y'])), 4)
        self.assertFalse(replay('rc.only-two-components', minimal, corrupted_bundle()).passed)
        self.assertEqual(report.to_dict()['bundle'], 'corrupted-rational-circle')


class ShrinkTests(SimpleTestCase):
    def test_shrinks_the_corrupted_circle_witness(self):
        minimal = shrink({'x': '3/17', 'y': '11/13'}, 'rc.only-two-components', corrupted_bundle())
        self.assertEqual(minimal, {'x': '0/1', 'y': '1/3'})

    def test_minimal_witness_is_a_fixpoint(self):
        minimal = {'x': '0/1', 'y': '1/3'}
        self.assertEqual(shrink(minimal, 'rc.only-two-components', corrupted_bundle()), minimal)

    def test_passing_case_is_rejected(self):
        with self.assertRaises(NotFailing):
            shrink({'x': '0/1', 'y': '1/3'}, 'rc.only-two-components')

    def test_shortens_a_long_lex_witness(self):
        long_point = LexPoint(tuple((index, F(1, 2)) for index in range(12)), 0)
        case = {'x': long_point.to_json(), 'y': {'entries': [], 'tail': '1/1'}}
        self.assertFalse(replay('lex.midpoint', case, stalled_midpoint_bundle()).passed)

        minimal = shrink(case, 'lex.midpoint', stalled_midpoint_bundle())
        self.assertLessEqual(len(minimal['x']['entries']), 3)
        self.assertFalse(replay('lex.midpoint', minimal, stalled_midpoint_bundle()).passed)


class ReplayTests(SimpleTestCase):
    def test_replay_on_the_exact_circle(self):
        report = replay('rc.four-points', {'a': '0/1', 'b': '1/4', 'c': '1/2', 'd': '3/4'})
        self.assertTrue(report.passed)

    def test_corrupted_circle_breaks_intersect_intervals(self):
        case = {'a': '0/1', 'b': '1/4', 'c': '1/2'}
        self.assertTrue(replay('rc.intersect-intervals', case).passed)
        self.assertFalse(replay('rc.intersect-intervals', case, corrupted_bundle()).passed)

    def test_discrete_characterization(self):
        self.assertTrue(replay('dc.flimsy-characterization', {'n': 6}).passed)

    def test_rearrangement(self):
        self.assertTrue(replay('orders.rearrangement', {'order': [3, 0, 2, 1, 4], 'cut': 2}).passed)

    def test_complement_representation_points_on_both_sides(self):
        case = {
            'A': {'arcs': [{'start': '0/1', 'end': '1/4', 'start_closed': True, 'end_closed': True}]},
            'a': '1/8',
            'xi': '1/2',
            'outside_points': ['3/8', '3/4'],
        }
        self.assertTrue(replay('rc.complement-representation', case).passed)

    def test_trimmed_side_is_refused(self):
        for side in (0, 1):
            for trim in (1, 2):
                case = {'x': '1/4', 'y': '3/4', 'side': side, 'trim': trim}
                self.assertTrue(replay('rc.touch-edges', case).passed, case)

    def test_full_side_is_a_component(self):
        self.assertTrue(replay('rc.touch-edges', {'x': '1/4', 'y': '3/4', 'side': 1, 'trim': 0}).passed)
