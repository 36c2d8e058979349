import json
import tempfile
from pathlib import Path

from django.test import SimpleTestCase, TestCase, override_settings

from connectivity.axioms import ALL_AXIOMS, check_axioms
from connectivity.spaces import FiniteConnectivity
from continua.discrete import discrete_circle

from . import families
from .canonical import canonical_form, is_canonical
from .engine import (
    DEFINITIONAL,
    RAW,
    THEOREM_ASSISTED,
    SearchConfig,
    count_spaces,
    enumerate_spaces,
    find_n_flimsy,
)
from .exceptions import BoundExceeded, CheckpointMismatch, SearchError, SearchTimeout
from .models import SearchRun

AXIOM_SUBSETS = (('C1', 'C2'), ('C1', 'C2', 'C3'), ALL_AXIOMS)


class FamilyTests(SimpleTestCase):
    def test_fast_checks_agree_with_the_checkers(self):
        for space in enumerate_spaces(3, ('C1', 'C2')):
            family = families.from_space(space)
            for axiom in ALL_AXIOMS:
                expected = check_axioms(space, (axiom,))[0].passed
                self.assertEqual(families.CHECKS[axiom](family, 3), expected, (axiom, space.members_as_sets()))

    def test_fast_checks_on_a_discrete_circle(self):
        family = families.from_space(discrete_circle(5).connectivity)
        self.assertTrue(families.satisfies(family, 5, ALL_AXIOMS))
        self.assertFalse(families.is_flimsy(family, 5, 2))

    def test_closure_adds_overlapping_unions(self):
        family = 1 | 1 << 0b011
        closed = families.close_under_unions(family, 0, 0b110)
        self.assertTrue(families.has(closed, 0b110))
        self.assertTrue(families.has(closed, 0b111))
        self.assertIsNone(families.close_under_unions(family, 1 << 0b111, 0b110))

    def test_disjoint_sets_force_nothing(self):
        family = families.close_under_unions(1 << 0b001, 0, 0b010)
        self.assertEqual(families.member_masks(family), [0b001, 0b010])

    def test_flimsy_masks(self):
        required, forbidden = families.flimsy_masks(3, 1)
        self.assertEqual(families.member_masks(required), [0b111])
        self.assertEqual(families.member_masks(forbidden), [0b011, 0b101, 0b110])

    def test_round_trip_through_spaces(self):
        space = discrete_circle(4).connectivity
        self.assertEqual(families.to_space(families.from_space(space), 4), space)


class EnumerationTests(SimpleTestCase):
    def test_one_point(self):
        spaces = list(enumerate_spaces(1, ('C1', 'C2')))
        self.assertEqual([space.members_as_sets() for space in spaces], [[[], [0]]])

    def test_golden_counts(self):
        self.assertEqual(count_spaces(2, ALL_AXIOMS), 2)
        self.assertEqual(count_spaces(3, ('C1', 'C2')), 12)
        self.assertEqual(count_spaces(3, ('C1', 'C2', 'C3')), 8)
        self.assertEqual(count_spaces(3, ALL_AXIOMS), 8)

    def test_all_subsets_family_is_included(self):
        powerset = FiniteConnectivity.from_sets(3, [[], [0], [1], [2], [0, 1], [0, 2], [1, 2], [0, 1, 2]])
        self.assertIn(powerset, list(enumerate_spaces(3, ALL_AXIOMS)))

    def test_pruned_and_raw_enumeration_agree(self):
        for ground_size in (1, 2, 3):
            for axioms in AXIOM_SUBSETS:
                raw = list(enumerate_spaces(ground_size, axioms))
                pruned = list(enumerate_spaces(ground_size, axioms, pruning=True))
                self.assertEqual(raw, pruned, (ground_size, axioms))

    def test_pruned_and_raw_counts_agree_on_four_points(self):
        for axioms in AXIOM_SUBSETS:
            self.assertEqual(
                count_spaces(4, axioms),
                count_spaces(4, axioms, pruning=True),
                axioms,
            )

    def test_yielded_spaces_pass_the_checkers(self):
        for space in enumerate_spaces(3, ALL_AXIOMS):
            self.assertTrue(all(report.passed for report in check_axioms(space)))

    def test_isomorph_rejection(self):
        self.assertEqual(count_spaces(2, ALL_AXIOMS, canonical=True), 2)
        self.assertEqual(count_spaces(3, ALL_AXIOMS, canonical=True), 4)

    def test_bounds(self):
        with self.assertRaises(BoundExceeded):
            list(enumerate_spaces(5, ALL_AXIOMS))
        with self.assertRaises(BoundExceeded):
            list(enumerate_spaces(6, ALL_AXIOMS, pruning=True))


class CanonicalFormTests(SimpleTestCase):
    def test_relabelled_twins(self):
        first = FiniteConnectivity.from_sets(2, [[], [0]])
        second = FiniteConnectivity.from_sets(2, [[], [1]])
        self.assertEqual(canonical_form(first), canonical_form(second))
        self.assertEqual(canonical_form(second).members_as_sets(), [[], [0]])

    def test_idempotent(self):
        for space in enumerate_spaces(3, ('C1', 'C2')):
            canonical = canonical_form(space)
            self.assertEqual(canonical_form(canonical), canonical)
            self.assertTrue(is_canonical(canonical))

    def test_discrete_circle_is_stable_under_relabelling(self):
        circle = discrete_circle(4).connectivity
        shuffled = FiniteConnectivity.from_sets(
            4,
            [[(1, 0, 2, 3)[point] for point in members] for members in circle.members_as_sets()],
        )
        self.assertEqual(canonical_form(circle), canonical_form(shuffled))


class SearchConfigTests(SimpleTestCase):
    def test_raw_bound(self):
        with self.assertRaises(BoundExceeded):
            SearchConfig(5, 2, pruning=RAW)

    def test_ground_size_bound(self):
        with self.assertRaises(BoundExceeded):
            SearchConfig(7, 2)

    def test_unknown_pruning(self):
        with self.assertRaises(SearchError):
            SearchConfig(4, 2, pruning='aggressive')

    def test_axioms_are_ordered(self):
        self.assertEqual(SearchConfig(4, 2, axioms=('C3', 'C1')).axioms, ('C1', 'C3'))

    @override_settings(SEARCH_RAW_LIMIT=3)
    def test_limits_from_settings(self):
        with self.assertRaises(BoundExceeded):
            SearchConfig.from_settings(4, 3, pruning=RAW)


class FindFlimsyTests(SimpleTestCase):
    def test_no_three_flimsy_space_on_four_points(self):
        result = find_n_flimsy(4, 3, pruning=RAW)
        self.assertIsNone(result.found)
        self.assertTrue(result.exhausted)
        self.assertEqual(result.examined, 65536)
        self.assertEqual(result.checked, 65536)

    def test_definitional_forcing_contradicts_for_three_points_removed(self):
        result = find_n_flimsy(4, 3, pruning=DEFINITIONAL)
        self.assertIsNone(result.found)
        self.assertTrue(result.exhausted)
        self.assertEqual(result.examined, 0)
        self.assertEqual(result.pruning_log[-1]['constraint'], 'contradiction')

    def test_no_two_flimsy_space_on_four_points(self):
        result = find_n_flimsy(4, 2)
        self.assertIsNone(result.found)
        self.assertTrue(result.exhausted)
        self.assertEqual(result.examined, 1)

    def test_no_two_flimsy_space_on_five_points(self):
        result = find_n_flimsy(5, 2)
        self.assertIsNone(result.found)
        self.assertTrue(result.exhausted)
        self.assertEqual(result.examined, 1024)

    def test_theorem_assisted_is_cross_checked(self):
        result = find_n_flimsy(5, 2, pruning=THEOREM_ASSISTED)
        self.assertIsNone(result.found)
        self.assertTrue(result.exhausted)
        self.assertEqual(result.pruning_log[-1]['constraint'], 'cross-check')
        self.assertIn('{x, y} ∉ 𝒞 for x ≠ y', [entry['constraint'] for entry in result.pruning_log])

    def test_raw_and_definitional_agree_on_small_cases(self):
        for ground_size in (2, 3, 4):
            for n in (1, 2, 3):
                raw = find_n_flimsy(ground_size, n, pruning=RAW)
                definitional = find_n_flimsy(ground_size, n, pruning=DEFINITIONAL)
                self.assertEqual(raw.found, definitional.found, (ground_size, n))

    def test_one_flimsy_family_without_c3(self):
        result = find_n_flimsy(3, 1, axioms=('C1', 'C2'))
        self.assertEqual(result.found.members_as_sets(), [[], [0], [0, 1, 2], [1], [2]])
        self.assertFalse(result.exhausted)
        self.assertEqual(result.to_dict()['found'], {'n': 3, 'family': [[], [0], [0, 1, 2], [1], [2]]})

    def test_more_axioms_never_create_a_witness(self):
        self.assertIsNotNone(find_n_flimsy(3, 1, axioms=('C1', 'C2')).found)
        self.assertIsNone(find_n_flimsy(3, 1, axioms=ALL_AXIOMS).found)

    def test_ground_set_too_small(self):
        result = find_n_flimsy(2, 2)
        self.assertIsNone(result.found)
        self.assertTrue(result.exhausted)
        self.assertEqual(result.examined, 0)

    def test_worker_count_does_not_change_the_result(self):
        for ground_size, n, options in ((5, 2, {}), (3, 1, {'axioms': ('C1', 'C2'), 'pruning': RAW})):
            alone = find_n_flimsy(ground_size, n, jobs=1, **options)
            pooled = find_n_flimsy(ground_size, n, jobs=2, **options)
            self.assertEqual(alone.to_dict(), pooled.to_dict())

    def test_budget_exhaustion(self):
        with tempfile.TemporaryDirectory() as tmp:
            path = str(Path(tmp) / 'run.json')
            with self.assertRaises(SearchTimeout) as caught:
                find_n_flimsy(4, 3, pruning=RAW, budget=1e-9, checkpoint=path)
        self.assertEqual(caught.exception.checkpoint, path)
        self.assertFalse(caught.exception.result.exhausted)
        self.assertLess(caught.exception.result.examined, 65536)


class CheckpointTests(SimpleTestCase):
    def test_resume_skips_recorded_units(self):
        with tempfile.TemporaryDirectory() as tmp:
            path = Path(tmp) / 'run.json'
            first = find_n_flimsy(5, 2, checkpoint=str(path))
            document = json.loads(path.read_text())
            self.assertEqual(document['version'], 1)
            self.assertEqual(len(document['units']), 16)
            self.assertEqual(sum(unit['examined'] for unit in document['units'].values()), 1024)

            for index in ('3', '7', '15'):
                del document['units'][index]
            path.write_text(json.dumps(document))
            resumed = find_n_flimsy(5, 2, checkpoint=str(path))
            self.assertEqual(resumed.to_dict(), first.to_dict())
            self.assertEqual(len(json.loads(path.read_text())['units']), 16)

    def test_mismatched_configuration(self):
        with tempfile.TemporaryDirectory() as tmp:
            path = str(Path(tmp) / 'run.json')
            find_n_flimsy(5, 2, checkpoint=path)
            with self.assertRaises(CheckpointMismatch):
                find_n_flimsy(5, 2, axioms=('C1', 'C2', 'C3'), checkpoint=path)

    def test_unknown_version(self):
        with tempfile.TemporaryDirectory() as tmp:
            path = Path(tmp) / 'run.json'
            path.write_text(json.dumps({'version': 99, 'config': {}, 'units': {}}))
            with self.assertRaises(CheckpointMismatch):
                find_n_flimsy(5, 2, checkpoint=str(path))

    def test_unreadable_checkpoint(self):
        with tempfile.TemporaryDirectory() as tmp:
            path = Path(tmp) / 'run.json'
            for content in (b'{"version": 1, "units": {', b'[1, 2, 3]'):
                path.write_bytes(content)
                with self.assertRaises(CheckpointMismatch):
                    find_n_flimsy(5, 2, checkpoint=str(path))


class SearchRunLedgerTests(TestCase):
    def test_record_and_lookup(self):
        config = SearchConfig(5, 2)
        result = find_n_flimsy(5, 2, config)
        run = SearchRun.record(result)
        self.assertTrue(SearchRun.for_config(config).filter(exhausted=True).exists())
        self.assertFalse(SearchRun.for_config(SearchConfig(5, 2, pruning=THEOREM_ASSISTED)).exists())
        self.assertEqual(run.to_dict()['examined'], 1024)
        self.assertIsNone(run.to_dict()['found'])
        self.assertIn('none', str(run))
