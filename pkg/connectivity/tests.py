from fractions import Fraction as F

from django.test import SimpleTestCase
from rest_framework.exceptions import ValidationError

from continua.discrete import discrete_circle
from continua.rational import rational_circle
from orders.conversions import cyclic_to_seprel
from orders.exceptions import DegeneratePoints
from orders.reports import Verdict
from orders.structures import Chord, CyclicOrder, crossing

from .axioms import (
    ConnectedForm,
    check_axioms,
    classify_connected_subset,
    components,
    derive_seprel,
    is_n_flimsy,
    is_T1,
)
from .exceptions import (
    AxiomPrecondition,
    ComponentCount,
    HypothesisFailed,
    NotConnected,
    PreconditionFailed,
    SampleRequired,
)
from .lemmas import (
    check_complement_closure,
    check_complement_representation,
    check_component_extensions,
    check_component_not_containing,
    check_component_restriction,
    check_flimsy_characterization,
    check_four_points,
    check_intersect_intervals,
    check_intersection_connected,
    check_only_two_components,
    check_open_avoids_edges,
    check_touch_edges,
)
from .serializers import AxiomSelectionField, ConnectivitySerializer
from .spaces import FiniteConnectivity, remove_point


def small_rationals(max_denominator):
    return sorted({F(p, q) for q in range(1, max_denominator + 1) for p in range(q)})


def powerset_space(n):
    return FiniteConnectivity.from_sets(n, [
        [point for point in range(n) if mask >> point & 1] for mask in range(1 << n)
    ])


def coarse_space(n):
    """Empty set, singletons and the whole set."""
    return FiniteConnectivity.from_sets(n, [[], *([point] for point in range(n)), list(range(n))])


class AxiomTests(SimpleTestCase):
    def test_discrete_circle_passes_all_axioms(self):
        space = discrete_circle(6).connectivity
        self.assertTrue(all(report.passed for report in check_axioms(space)))

    def test_coarse_family_fails_c3(self):
        (report,) = check_axioms(coarse_space(3), ('C3',))
        self.assertEqual(report.verdict, Verdict.FAIL)
        self.assertEqual(report.witness, {'Y': [0, 1, 2], 'x': 0, 'y': 1, 'complement': [0, 2]})

    def test_powerset_passes_all_axioms(self):
        reports = check_axioms(powerset_space(4))
        self.assertEqual([report.axiom for report in reports], ['C1', 'C2', 'C3', 'C4'])
        self.assertTrue(all(report.passed for report in reports))

    def test_missing_singleton_fails_c1(self):
        space = FiniteConnectivity.from_sets(2, [[], [0], [0, 1]])
        (report,) = check_axioms(space, ('C1',))
        self.assertEqual(report.witness, {'point': 1})

    def test_missing_empty_set_fails_c2(self):
        space = FiniteConnectivity.from_sets(2, [[0], [1], [0, 1]])
        (report,) = check_axioms(space, ('C2',))
        self.assertFalse(report.passed)

    def test_unknown_axiom(self):
        with self.assertRaises(ValueError):
            check_axioms(coarse_space(3), ('C9',))


class ComponentTests(SimpleTestCase):
    def test_discrete_copair_splits_into_arcs(self):
        space = discrete_circle(6).connectivity
        parts = components(space, space.copair(0, 3))
        self.assertEqual([space.serialize(part) for part in parts], [[1, 2], [4, 5]])

    def test_empty_set_has_no_components(self):
        space = discrete_circle(6).connectivity
        self.assertEqual(components(space, space.empty()), [])

    def test_components_need_unions(self):
        space = FiniteConnectivity.from_sets(3, [[], [0], [1], [2], [0, 1], [1, 2]])
        with self.assertRaises(AxiomPrecondition):
            space.components(space.whole())

    def test_rational_copair(self):
        circle = rational_circle()
        parts = components(circle, circle.copair(0, F(1, 2)))
        self.assertEqual(parts, [circle.open_arc(0, F(1, 2)), circle.open_arc(F(1, 2), 0)])

    def test_remove_point(self):
        space = remove_point(discrete_circle(5).connectivity, 0)
        self.assertEqual(space.points, (1, 2, 3, 4))
        self.assertIn([1, 2, 3, 4], space.members_as_sets())
        self.assertNotIn([1, 4], space.members_as_sets())


class SeparationAxiomTests(SimpleTestCase):
    def test_discrete_circle_is_not_t1(self):
        report = is_T1(discrete_circle(6).connectivity)
        self.assertEqual(report.witness, {'pair': [0, 1]})

    def test_rational_circle_is_t1_on_samples(self):
        self.assertTrue(is_T1(rational_circle(), sample=small_rationals(8)).passed)

    def test_coarse_family_is_t1(self):
        self.assertTrue(is_T1(coarse_space(4)).passed)

    def test_discrete_circle_is_not_two_flimsy(self):
        report = is_n_flimsy(discrete_circle(6).connectivity, 2)
        self.assertFalse(report.passed)
        self.assertEqual(report.witness['removed'], [0, 1])

    def test_rational_circle_is_two_flimsy_on_samples(self):
        self.assertTrue(is_n_flimsy(rational_circle(), 2, sample=small_rationals(8)).passed)

    def test_too_few_points(self):
        report = is_n_flimsy(powerset_space(2), 2)
        self.assertEqual(report.witness, {'cardinality': 2})

    def test_infinite_model_needs_sample(self):
        with self.assertRaises(SampleRequired):
            is_n_flimsy(rational_circle(), 2)

    def test_discrete_circles_negative_controls(self):
        for n in range(3, 13):
            space = discrete_circle(n).connectivity
            self.assertEqual(len(space.family), n * (n - 1) + 2)
            self.assertTrue(all(report.passed for report in check_axioms(space)))
            self.assertEqual(is_T1(space).witness, {'pair': [0, 1]})
            self.assertFalse(is_n_flimsy(space, 2).passed)


class DerivedRelationTests(SimpleTestCase):
    def test_rational_square(self):
        relation = derive_seprel(rational_circle(), [0, F(1, 4), F(1, 2), F(3, 4)])
        self.assertEqual(relation.separated, {crossing(Chord(0, 2), Chord(1, 3))})

    def test_matches_circular_order(self):
        sample = [F(1, 7), F(5, 8), F(1, 3), F(0), F(7, 8), F(1, 2)]
        relation = derive_seprel(rational_circle(), sample)
        rotation = sorted(range(len(sample)), key=lambda index: sample[index])
        self.assertEqual(relation, cyclic_to_seprel(CyclicOrder(tuple(rotation))))

    def test_three_points_give_empty_relation(self):
        relation = derive_seprel(rational_circle(), [0, F(1, 3), F(2, 3)])
        self.assertEqual(relation.separated, frozenset())

    def test_component_count(self):
        with self.assertRaises(ComponentCount) as caught:
            derive_seprel(discrete_circle(6).connectivity, [0, 1, 2, 3])
        self.assertEqual(caught.exception.count, 1)


class ClassificationTests(SimpleTestCase):
    def setUp(self):
        self.circle = rational_circle()

    def test_open_arc(self):
        result = classify_connected_subset(self.circle, self.circle.open_arc(F(1, 4), F(1, 2)))
        self.assertEqual(result.form, ConnectedForm.COMPONENT)
        self.assertEqual(result.to_dict(self.circle)['pair'], ['1/4', '1/2'])

    def test_closed_arc(self):
        closed = self.circle.arc(F(1, 4), F(1, 2), True, True)
        self.assertEqual(classify_connected_subset(self.circle, closed).form, ConnectedForm.COMPONENT_PLUS_TWO)

    def test_half_open_arc(self):
        result = classify_connected_subset(self.circle, self.circle.arc(F(1, 4), F(1, 2), False, True))
        self.assertEqual(result.form, ConnectedForm.COMPONENT_PLUS_ONE)
        self.assertEqual(result.added, (F(1, 2),))

    def test_whole_point_and_copoint(self):
        circle = self.circle
        self.assertEqual(classify_connected_subset(circle, circle.whole()).form, ConnectedForm.WHOLE)
        self.assertEqual(classify_connected_subset(circle, circle.empty()).form, ConnectedForm.EMPTY)
        self.assertEqual(classify_connected_subset(circle, circle.point(F(1, 3))).form, ConnectedForm.SINGLETON)
        copoint = circle.without(circle.whole(), F(1, 3))
        self.assertEqual(classify_connected_subset(circle, copoint).form, ConnectedForm.CO_SINGLETON)

    def test_disconnected_input(self):
        split = self.circle.union(self.circle.open_arc(0, F(1, 2)), self.circle.point(F(3, 4)))
        with self.assertRaises(NotConnected):
            classify_connected_subset(self.circle, split)


class LemmaTests(SimpleTestCase):
    def setUp(self):
        self.circle = rational_circle()

    def test_only_two_components(self):
        report = check_only_two_components(self.circle, 0, F(1, 3))
        self.assertTrue(report.passed)
        self.assertEqual(len(report.witness['components']), 2)
        self.assertFalse(check_only_two_components(discrete_circle(6).connectivity, 0, 1).passed)
        with self.assertRaises(DegeneratePoints):
            check_only_two_components(self.circle, 0, 0)

    def test_component_extensions(self):
        self.assertEqual(check_component_extensions(self.circle, 0, F(1, 2)).verdict, Verdict.PASS)

    def test_complement_closure(self):
        closed = self.circle.arc(F(1, 3), F(2, 3), True, True)
        self.assertTrue(check_complement_closure(self.circle, closed).passed)

    def test_intersection(self):
        first = self.circle.arc(0, F(1, 2), True, True)
        second = self.circle.arc(F(1, 4), F(3, 4), True, True)
        report = check_intersection_connected(self.circle, first, second)
        self.assertTrue(report.passed)
        with self.assertRaises(HypothesisFailed):
            check_intersection_connected(self.circle, first, self.circle.arc(F(1, 2), 0, True, True))

    def test_touch_edges(self):
        x, y = 0, F(1, 2)
        self.assertTrue(check_touch_edges(self.circle, x, y, self.circle.open_arc(x, y)).passed)
        with self.assertRaises(PreconditionFailed) as caught:
            check_touch_edges(self.circle, x, y, self.circle.open_arc(F(1, 8), F(1, 4)))
        self.assertEqual(caught.exception.membership, 'C∪{x,y} ∈ 𝒞')

    def test_intersect_intervals(self):
        report = check_intersect_intervals(self.circle, 0, F(1, 4), F(1, 2))
        self.assertTrue(report.passed)
        self.assertEqual(report.witness['interval']['arcs'][0]['start'], '1/4')

    def test_four_points(self):
        points = (0, F(1, 4), F(1, 2), F(3, 4))
        self.assertTrue(check_four_points(self.circle, *points).passed)
        self.assertTrue(check_four_points(cyclic_to_seprel(CyclicOrder((0, 1, 2, 3))), 0, 1, 2, 3).passed)

    def test_open_avoids_edges(self):
        circle = self.circle
        report = check_open_avoids_edges(circle, F(1, 3), F(1, 4), F(1, 2), F(1, 8), F(5, 8))
        self.assertEqual(report.verdict, Verdict.PASS)
        report = check_open_avoids_edges(circle, F(1, 3), 0, F(1, 2), F(1, 4), F(5, 8))
        self.assertEqual(report.verdict, Verdict.VACUOUS)

    def test_complement_representation(self):
        subset = self.circle.arc(F(1, 4), F(1, 2), True, True)
        report = check_complement_representation(self.circle, subset, F(1, 3), F(3, 4), [0, F(7, 8), F(5, 8)])
        self.assertTrue(report.passed)
        with self.assertRaises(PreconditionFailed):
            check_complement_representation(self.circle, subset, F(1, 3), F(3, 4), [F(1, 3)])

    def test_component_restriction(self):
        space = discrete_circle(6).connectivity
        outer, inner = space.from_points([1, 2, 4, 5]), space.from_points([1, 2, 4])
        self.assertTrue(check_component_restriction(space, outer, inner).passed)
        with self.assertRaises(PreconditionFailed):
            check_component_restriction(space, inner, outer)

    def test_component_not_containing(self):
        report = check_component_not_containing(self.circle, 0, F(1, 2), F(1, 4))
        self.assertTrue(report.passed)

    def test_flimsy_characterization(self):
        self.assertTrue(check_flimsy_characterization(discrete_circle(6).connectivity).passed)
        self.assertEqual(check_flimsy_characterization(powerset_space(2)).verdict, Verdict.VACUOUS)
        self.assertTrue(check_flimsy_characterization(powerset_space(3)).passed)


class SerializerTests(SimpleTestCase):
    def test_read_connectivity(self):
        serializer = ConnectivitySerializer(data={'n': 3, 'family': [[], [0], [1], [2], [0, 1, 2]]})
        serializer.is_valid(raise_exception=True)
        space = serializer.save()
        self.assertEqual(space, coarse_space(3))
        self.assertEqual(ConnectivitySerializer(space).data['family'], [[], [0], [0, 1, 2], [1], [2]])

    def test_axiom_selection(self):
        self.assertEqual(AxiomSelectionField().to_internal_value('C3,C1'), ('C1', 'C3'))

    def test_axiom_selection_rejects_unknown_axioms(self):
        with self.assertRaises(ValidationError):
            AxiomSelectionField().run_validation(['C1', 'C5'])
