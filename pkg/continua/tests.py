from fractions import Fraction as F
from unittest import mock

from django.test import SimpleTestCase

from connectivity.axioms import check_axioms, derive_seprel, is_n_flimsy, is_T1
from orders.conversions import cyclic_to_seprel
from orders.reports import Verdict
from orders.structures import CyclicOrder

from .arcs import Span
from .bigcircle import (
    BETWEEN,
    OUTSIDE,
    LexCirclePoint,
    big_circle,
    big_circle_interval_membership,
    big_circle_seprel,
    check_no_ends_one_flimsy,
)
from .discrete import discrete_circle
from .exceptions import ModelError, NotOrdered, RouteDisagreement, SamePoint, TooSmall
from .lexico import (
    ELL_1,
    ELL_2,
    MAX_L,
    MIN_L,
    Comparison,
    LexPoint,
    first_difference,
    lex_compare,
    lex_local_base,
    lex_midpoint,
    lex_partition_class,
    lex_reflect,
    lex_sup,
    lex_truncate,
)
from .rational import rational_circle
from .serializers import ArcSetSerializer, LexPointSerializer

HALF = LexPoint.constant(F(1, 2))
X = LexPoint(((0, F(1, 2)),), 0)
Y = LexPoint(((0, F(1, 2)), (1, F(9, 10))), 0)

SAMPLES = [
    MIN_L,
    MAX_L,
    ELL_1,
    ELL_2,
    HALF,
    X,
    Y,
    LexPoint(((0, F(1, 3)), (2, F(1, 5))), F(1, 3)),
    LexPoint(((1, F(1)),), 0),
    LexPoint(((0, F(2, 3)), (3, F(0))), 1),
    LexPoint(((4, F(7, 9)),), F(1, 2)),
]


class DiscreteCircleTests(SimpleTestCase):
    def test_family_size(self):
        self.assertEqual(len(discrete_circle(6).connectivity.family), 32)

    def test_triangle_has_every_subset(self):
        self.assertEqual(len(discrete_circle(3).connectivity.family), 8)

    def test_natural_rotation(self):
        self.assertEqual(discrete_circle(5).order.rotation, (0, 1, 2, 3, 4))

    def test_axioms_but_not_flimsy(self):
        space = discrete_circle(6).connectivity
        self.assertTrue(all(report.passed for report in check_axioms(space)))
        self.assertFalse(is_n_flimsy(space, 2).passed)
        self.assertFalse(is_T1(space).passed)

    def test_too_small(self):
        with self.assertRaises(TooSmall):
            discrete_circle(2)


class RationalCircleTests(SimpleTestCase):
    def setUp(self):
        self.circle = rational_circle()

    def test_arc_with_isolated_point_is_not_connected(self):
        expr = self.circle.union(self.circle.open_arc(0, F(1, 2)), self.circle.point(F(3, 4)))
        self.assertFalse(self.circle.is_connected(expr))

    def test_closed_arc_is_connected(self):
        self.assertTrue(self.circle.is_connected(self.circle.arc(F(1, 3), F(2, 3), True, True)))

    def test_copair_components(self):
        parts = self.circle.components_of_copair(0, F(1, 2))
        self.assertEqual(
            [self.circle.serialize(part)['arcs'] for part in parts],
            [
                [{'start': '0/1', 'end': '1/2', 'start_closed': False, 'end_closed': False}],
                [{'start': '1/2', 'end': '0/1', 'start_closed': False, 'end_closed': False}],
            ],
        )

    def test_points_are_reduced_mod_one(self):
        self.assertEqual(self.circle.point(F(5, 4)), self.circle.point(F(1, 4)))

    def test_arc_through_the_origin(self):
        expr = self.circle.arc(F(3, 4), F(1, 4))
        self.assertTrue(self.circle.is_connected(expr))
        self.assertTrue(self.circle.contains(expr, 0))
        self.assertFalse(self.circle.contains(expr, F(1, 2)))
        self.assertEqual(self.circle.serialize(expr)['arcs'][0]['start'], '3/4')

    def test_complements_of_connected_sets_are_connected(self):
        circle = self.circle
        values = [F(0), F(1, 5), F(1, 3), F(1, 2), F(4, 7), F(5, 6)]
        for start in values:
            for end in values:
                for flags in ((False, False), (True, False), (False, True), (True, True)):
                    expr = circle.arc(start, end, *flags)
                    self.assertTrue(circle.is_connected(expr))
                    self.assertTrue(circle.is_connected(circle.complement(expr)))

    def test_normalization_is_canonical(self):
        circle = self.circle
        pieces = [Span(F(1, 4), F(1, 2), True, False), Span(F(1, 3), F(3, 4), False, True), Span(F(1, 2), F(1, 2), True, True)]
        once = circle.make(pieces)
        self.assertEqual(circle.make(once.spans), once)
        self.assertEqual(once, circle.arc(F(1, 4), F(3, 4), True, True))

    def test_full_circle(self):
        self.assertEqual(self.circle.serialize(self.circle.whole()), {'arcs': [], 'points': [], 'full': True})


class LexOrderTests(SimpleTestCase):
    def test_reference_points(self):
        self.assertEqual(lex_compare(ELL_1, ELL_2), Comparison.LESS)
        self.assertEqual(first_difference(ELL_1, ELL_2), 0)

    def test_second_coordinate_decides(self):
        self.assertEqual(lex_compare(X, Y), Comparison.LESS)
        self.assertEqual(first_difference(X, Y), 1)
        self.assertEqual(lex_compare(Y, X), Comparison.GREATER)

    def test_equal(self):
        self.assertEqual(lex_compare(X, X), Comparison.EQUAL)
        self.assertIsNone(first_difference(X, X))

    def test_canonical_form(self):
        self.assertEqual(LexPoint(((0, F(1, 3)), (3, F(1, 3))), F(1, 3)), ELL_1)
        with self.assertRaises(ModelError):
            LexPoint(((0, F(3, 2)),), 0)

    def test_tails_compared_after_entries(self):
        early = LexPoint(((0, F(1, 2)), (1, F(1, 2))), 0)
        late = LexPoint(((0, F(1, 2)),), F(1, 4))
        self.assertEqual(first_difference(early, late), 1)
        self.assertEqual(lex_compare(early, late), Comparison.GREATER)

    def test_total_order(self):
        for x in SAMPLES:
            for y in SAMPLES:
                forward, backward = lex_compare(x, y), lex_compare(y, x)
                self.assertEqual(forward == Comparison.EQUAL, x == y)
                if forward == Comparison.LESS:
                    self.assertEqual(backward, Comparison.GREATER)
                for z in SAMPLES:
                    if x < y and y < z:
                        self.assertLess(x, z)

    def test_sup(self):
        self.assertEqual(lex_sup([X, Y]), Y)
        self.assertEqual(lex_sup([MIN_L]), MIN_L)
        self.assertEqual(lex_sup([ELL_1, ELL_2]), ELL_2)
        self.assertEqual(lex_sup(SAMPLES), MAX_L)
        self.assertEqual(lex_sup(SAMPLES[2:]), max(SAMPLES[2:]))

    def test_sup_of_nothing(self):
        with self.assertRaises(ModelError):
            lex_sup([])

    def test_midpoint(self):
        self.assertEqual(lex_midpoint(MIN_L, MAX_L), HALF)
        self.assertEqual(lex_midpoint(ELL_1, ELL_2), HALF)
        for x in SAMPLES:
            for y in SAMPLES:
                if x < y:
                    self.assertTrue(x < lex_midpoint(x, y) < y)

    def test_midpoint_needs_order(self):
        with self.assertRaises(NotOrdered):
            lex_midpoint(ELL_2, ELL_1)
        with self.assertRaises(NotOrdered):
            lex_midpoint(X, X)

    def test_reflection_reverses_order(self):
        for x in SAMPLES:
            self.assertEqual(lex_reflect(lex_reflect(x)), x)
            for y in SAMPLES:
                if x < y:
                    self.assertLess(lex_reflect(y), lex_reflect(x))

    def test_truncation(self):
        self.assertEqual(lex_truncate(ELL_1, 2), LexPoint(((0, F(1, 3)), (1, F(1, 3))), 0))
        self.assertEqual(lex_truncate(Y, 1), X)

    def test_partition_classes(self):
        self.assertEqual(lex_partition_class(ELL_1), 1)
        self.assertEqual(lex_partition_class(MIN_L), 1)
        self.assertEqual(lex_partition_class(HALF), 2)
        self.assertEqual(lex_partition_class(ELL_2), 3)
        self.assertEqual(lex_partition_class(MAX_L), 3)


class LocalBaseTests(SimpleTestCase):
    def test_truncation_case(self):
        base = lex_local_base(ELL_1, 2)
        self.assertEqual(base.lower, LexPoint(((0, F(1, 3)), (1, F(1, 3))), 0))
        self.assertEqual(base.upper, LexPoint(((0, F(1, 3)), (1, F(1, 3))), 1))

    def test_last_nonzero_coordinate_case(self):
        base = lex_local_base(Y, 3)
        self.assertEqual(base.lower, LexPoint(((0, F(1, 2)), (1, F(3, 5))), 0))

    def test_minimum_has_no_lower_bound(self):
        for k in range(1, 6):
            self.assertIsNone(lex_local_base(MIN_L, k).lower)
            self.assertIsNone(lex_local_base(MAX_L, k).upper)

    def test_nested_and_containing(self):
        for x in SAMPLES:
            for k in range(1, 11):
                base = lex_local_base(x, k)
                self.assertTrue(base.contains(x))
                self.assertTrue(lex_local_base(x, k + 1).within(base))

    def test_json(self):
        self.assertEqual(lex_local_base(MIN_L, 1).to_json()['lower'], '-inf')


class BigCircleTests(SimpleTestCase):
    def test_glued_point(self):
        self.assertEqual(LexCirclePoint(MAX_L), LexCirclePoint(MIN_L))
        self.assertTrue(LexCirclePoint(MAX_L).is_glued)

    def test_membership(self):
        middle = lex_midpoint(ELL_1, ELL_2)
        self.assertTrue(big_circle_interval_membership(ELL_1, ELL_2, middle, BETWEEN))
        self.assertFalse(big_circle_interval_membership(ELL_1, ELL_2, ELL_1, BETWEEN))
        self.assertFalse(big_circle_interval_membership(ELL_1, ELL_2, ELL_1, OUTSIDE))
        self.assertTrue(big_circle_interval_membership(MIN_L, ELL_1, ELL_2, OUTSIDE))

    def test_glued_point_membership(self):
        self.assertTrue(big_circle_interval_membership(ELL_1, ELL_2, MAX_L, OUTSIDE))
        self.assertFalse(big_circle_interval_membership(MIN_L, ELL_2, MAX_L, OUTSIDE))
        self.assertFalse(big_circle_interval_membership(ELL_1, MAX_L, MIN_L, BETWEEN))

    def test_sides_partition_the_circle(self):
        for a in SAMPLES:
            for b in SAMPLES:
                if not a < b or (a == MIN_L and b == MAX_L):
                    continue
                for q in SAMPLES:
                    if LexCirclePoint(q) in (LexCirclePoint(a), LexCirclePoint(b)):
                        continue
                    sides = [big_circle_interval_membership(a, b, q, side) for side in (BETWEEN, OUTSIDE)]
                    self.assertEqual(sorted(sides), [False, True])

    def test_ends_are_the_same_point(self):
        with self.assertRaises(SamePoint):
            big_circle_interval_membership(MIN_L, MAX_L, HALF, BETWEEN)
        with self.assertRaises(NotOrdered):
            big_circle_interval_membership(ELL_2, ELL_1, HALF, BETWEEN)

    def test_crossing(self):
        self.assertTrue(big_circle_seprel((MIN_L, HALF), (ELL_1, ELL_2)))
        self.assertTrue(big_circle_seprel((MAX_L, HALF), (ELL_2, ELL_1)))
        self.assertFalse(big_circle_seprel((MIN_L, ELL_1), (HALF, ELL_2)))
        self.assertFalse(big_circle_seprel((MIN_L, HALF), (MAX_L, ELL_2)))

    def test_routes_agree_on_samples(self):
        points = [point for point in SAMPLES if point != MAX_L]
        for a in points:
            for b in points:
                for c in points:
                    for d in points:
                        big_circle_seprel((a, b), (c, d))

    def test_route_disagreement_is_reported(self):
        with mock.patch('continua.bigcircle.big_circle_interval_membership', return_value=True):
            with self.assertRaises(RouteDisagreement) as caught:
                big_circle_seprel((MIN_L, HALF), (ELL_1, ELL_2))
        self.assertTrue(caught.exception.transcript['lifted'])
        self.assertFalse(caught.exception.transcript['membership'])

    def test_derived_relation_matches_the_order(self):
        sample = [ELL_2, MIN_L, Y, ELL_1, X]
        relation = derive_seprel(big_circle(), sample)
        rotation = sorted(range(len(sample)), key=lambda index: sample[index])
        self.assertEqual(relation, cyclic_to_seprel(CyclicOrder(tuple(rotation))))

    def test_big_circle_is_two_flimsy_on_samples(self):
        sample = [point for point in SAMPLES if point != MAX_L]
        self.assertTrue(is_n_flimsy(big_circle(), 2, sample=sample).passed)


class LineTests(SimpleTestCase):
    def test_one_point_disconnects(self):
        self.assertTrue(check_no_ends_one_flimsy(ELL_1, ELL_2, [HALF]).passed)

    def test_empty_sample(self):
        self.assertEqual(check_no_ends_one_flimsy(ELL_1, ELL_2, []).verdict, Verdict.VACUOUS)

    def test_whole_interval_with_midpoint_sample(self):
        sample = [HALF]
        for _ in range(4):
            sample.append(lex_midpoint(MIN_L, sample[-1]))
        self.assertTrue(check_no_ends_one_flimsy(MIN_L, MAX_L, sample).passed)

    def test_sample_outside_interval(self):
        with self.assertRaises(ModelError):
            check_no_ends_one_flimsy(ELL_1, ELL_2, [MIN_L])


class SerializerTests(SimpleTestCase):
    def test_lex_point(self):
        serializer = LexPointSerializer(data={'entries': [[0, '1/2'], [1, '9/10']], 'tail': '0'})
        serializer.is_valid(raise_exception=True)
        self.assertEqual(serializer.save(), Y)
        self.assertEqual(LexPointSerializer(Y).data, {'entries': [[0, '1/2'], [1, '9/10']], 'tail': '0/1'})

    def test_lex_point_out_of_range(self):
        self.assertFalse(LexPointSerializer(data={'entries': [[0, '3/2']], 'tail': '0'}).is_valid())

    def test_arc_set(self):
        payload = {
            'arcs': [{'start': '3/4', 'end': '1/4', 'start_closed': False, 'end_closed': False}],
            'points': ['1/2'],
            'full': False,
        }
        serializer = ArcSetSerializer(data=payload)
        serializer.is_valid(raise_exception=True)
        expr = serializer.save()
        self.assertEqual(ArcSetSerializer(expr).data, payload)

    def test_big_circle_arc_set(self):
        circle = big_circle()
        payload = {
            'arcs': [{'start': ELL_1.to_json(), 'end': ELL_2.to_json(), 'start_closed': True, 'end_closed': False}],
            'points': [],
            'full': False,
        }
        serializer = ArcSetSerializer(data=payload, context={'oracle': circle})
        serializer.is_valid(raise_exception=True)
        expr = serializer.save()
        self.assertTrue(circle.contains(expr, ELL_1))
        self.assertFalse(circle.contains(expr, ELL_2))
        self.assertEqual(ArcSetSerializer(expr, context={'oracle': circle}).data, payload)
