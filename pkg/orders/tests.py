from itertools import combinations, permutations

from django.test import SimpleTestCase

from .conversions import (
    cyclic_order_from_ternary,
    cyclic_rearrangement,
    cyclic_to_seprel,
    linear_to_cyclic,
    opposite,
    seprel_to_cyclic,
    validate_seprel,
)
from .exceptions import (
    AnchorDegenerate,
    CutIsEnd,
    DegeneratePoints,
    DuplicatePoint,
    InvalidCyclicOrder,
    InvalidRelation,
    NotAChain,
    TooFewPoints,
)
from .intervals import (
    check_interval_transfer,
    finite_chain_union_is_interval,
    is_dense,
    open_interval,
    order_topology_basis,
)
from .reports import Verdict
from .serializers import CyclicOrderSerializer, LinearOrderSerializer, SeparationRelationSerializer
from .structures import Chord, CyclicOrder, LinearOrderWithEnds, RawRelation, SeparationRelation, crossing


def all_cyclic_orders(n):
    return [CyclicOrder((0, *rest)) for rest in permutations(range(1, n))]


def polygon(n):
    return cyclic_to_seprel(CyclicOrder(tuple(range(n))))


class LinearOrderTests(SimpleTestCase):
    def test_gluing_drops_the_maximum(self):
        lin = LinearOrderWithEnds((0, 1, 2, 3, 4))
        self.assertEqual(linear_to_cyclic(lin).rotation, (0, 1, 2, 3))

    def test_gluing_needs_four_points(self):
        with self.assertRaises(TooFewPoints):
            linear_to_cyclic(LinearOrderWithEnds((0, 1, 2)))

    def test_repeated_interior_point_rejected(self):
        with self.assertRaises(DuplicatePoint):
            LinearOrderWithEnds((0, 1, 1, 2))

    def test_glued_ends_allowed(self):
        lin = LinearOrderWithEnds((2, 3, 0, 1, 2))
        self.assertTrue(lin.glued)
        self.assertEqual(lin.interior, (3, 0, 1))

    def test_rearrangement_at_interior_point(self):
        lin = LinearOrderWithEnds((0, 1, 2, 3, 4))
        self.assertEqual(cyclic_rearrangement(lin, 2).points, (2, 3, 0, 1, 2))

    def test_cut_at_end_rejected(self):
        with self.assertRaises(CutIsEnd):
            cyclic_rearrangement(LinearOrderWithEnds((0, 1, 2, 3)), 0)

    def test_rearrangement_keeps_the_cyclic_order(self):
        for n in range(4, 8):
            for order in permutations(range(n)):
                lin = LinearOrderWithEnds(order)
                expected = linear_to_cyclic(lin)
                for cut in lin.interior:
                    self.assertEqual(linear_to_cyclic(cyclic_rearrangement(lin, cut)), expected)


class CyclicOrderTests(SimpleTestCase):
    def test_rotation_is_normalized(self):
        self.assertEqual(CyclicOrder((2, 3, 0, 1)).rotation, (0, 1, 2, 3))

    def test_opposite(self):
        self.assertEqual(opposite(CyclicOrder((0, 1, 2, 3))).rotation, (0, 3, 2, 1))

    def test_ternary_predicate_laws(self):
        for n in range(3, 7):
            for order in all_cyclic_orders(n):
                for x, y, z in permutations(range(n), 3):
                    self.assertNotEqual(order.holds(x, y, z), order.holds(x, z, y))
                    if order.holds(x, y, z):
                        self.assertTrue(order.holds(y, z, x))

    def test_holds_is_false_on_repeated_points(self):
        self.assertFalse(CyclicOrder((0, 1, 2)).holds(0, 0, 1))

    def test_ternary_table_round_trip(self):
        order = CyclicOrder((0, 2, 1, 3, 4))
        self.assertEqual(cyclic_order_from_ternary(range(5), order.triples()), order)

    def test_ternary_table_not_induced_by_an_order(self):
        triples = set(CyclicOrder((0, 1, 2, 3)).triples())
        triples.discard((1, 2, 3))
        with self.assertRaises(InvalidCyclicOrder):
            cyclic_order_from_ternary(range(4), triples)


class SeparationRelationTests(SimpleTestCase):
    def test_square(self):
        relation = polygon(4)
        self.assertEqual(relation.separated, {crossing(Chord(0, 2), Chord(1, 3))})
        self.assertTrue(relation.separates(1, 3, 2, 0))
        self.assertFalse(relation.separates(0, 1, 2, 3))

    def test_distinct_relation_counts(self):
        for n, expected in ((4, 3), (5, 12), (6, 60)):
            relations = {cyclic_to_seprel(order) for order in all_cyclic_orders(n)}
            self.assertEqual(len(relations), expected)

    def test_induced_relations_are_valid(self):
        for n in range(4, 7):
            for order in all_cyclic_orders(n):
                self.assertEqual(validate_seprel(cyclic_to_seprel(order)).verdict, Verdict.PASS)

    def test_equal_relations_iff_equal_or_opposite(self):
        for n in range(4, 7):
            orders = all_cyclic_orders(n)
            relations = {order: cyclic_to_seprel(order) for order in orders}
            for first in orders:
                for second in orders:
                    same = relations[first] == relations[second]
                    self.assertEqual(same, second in (first, opposite(first)))

    def test_round_trip_with_consistent_anchor(self):
        for n in range(4, 7):
            for order in all_cyclic_orders(n):
                anchor = order.rotation[:3]
                self.assertEqual(seprel_to_cyclic(cyclic_to_seprel(order), anchor), order)

    def test_anchor_picks_orientation(self):
        relation = polygon(4)
        self.assertEqual(seprel_to_cyclic(relation, (0, 1, 2)).rotation, (0, 1, 2, 3))
        self.assertEqual(seprel_to_cyclic(relation, (0, 3, 2)).rotation, (0, 3, 2, 1))

    def test_degenerate_anchor(self):
        with self.assertRaises(AnchorDegenerate):
            seprel_to_cyclic(polygon(4), (0, 0, 2))

    def test_invalid_relation_is_not_converted(self):
        relation = SeparationRelation(frozenset(range(4)), frozenset())
        with self.assertRaises(InvalidRelation) as caught:
            seprel_to_cyclic(relation, (0, 1, 2))
        self.assertEqual(caught.exception.report.axiom, 'S3')

    def test_shared_point_is_rejected(self):
        with self.assertRaises(InvalidRelation):
            SeparationRelation(frozenset(range(4)), frozenset({((0, 1), (1, 2))}))

    def test_two_separations_on_one_quadruple(self):
        raw = RawRelation(frozenset(range(4)), (((0, 2), (1, 3)), ((0, 1), (2, 3))))
        report = validate_seprel(raw)
        self.assertEqual(report.axiom, 'S3')
        self.assertEqual(report.witness['points'], [0, 1, 2, 3])
        self.assertEqual(report.witness['holding'], 2)

    def test_five_point_violation(self):
        pentagon = polygon(5)
        separated = set(pentagon.separated)
        separated.discard(crossing(Chord(0, 2), Chord(1, 3)))
        separated.add(crossing(Chord(0, 1), Chord(2, 3)))
        report = validate_seprel(SeparationRelation(pentagon.points, frozenset(separated)))
        self.assertEqual(report.axiom, 'S4')
        self.assertEqual(len(report.witness['points']), 5)

    def test_directed_table_must_be_symmetric(self):
        raw = RawRelation(frozenset(range(4)), (((0, 2), (1, 3)),), directed=True)
        self.assertEqual(validate_seprel(raw).axiom, 'S1')


class IntervalTests(SimpleTestCase):
    def test_hexagon_intervals(self):
        hexagon = polygon(6)
        self.assertEqual(open_interval(hexagon, 1, 3, 2, False), {0, 4, 5})
        self.assertEqual(open_interval(hexagon, 1, 3, 2, True), {2})

    def test_sides_partition_the_rest(self):
        hexagon = polygon(6)
        for a, b, c in permutations(range(6), 3):
            away = open_interval(hexagon, a, b, c, False)
            near = open_interval(hexagon, a, b, c, True)
            self.assertFalse(away & near)
            self.assertEqual(away | near | {a, b}, hexagon.points)
            for d in away:
                self.assertEqual(near, open_interval(hexagon, a, b, d, False))

    def test_degenerate_interval_query(self):
        with self.assertRaises(DegeneratePoints):
            open_interval(polygon(4), 0, 0, 1, False)

    def test_finite_relations_are_not_dense(self):
        report = is_dense(polygon(4))
        self.assertFalse(report.passed)
        self.assertEqual(report.witness['chord'], [0, 1])
        for order in all_cyclic_orders(5):
            self.assertFalse(is_dense(cyclic_to_seprel(order)).passed)

    def test_basis(self):
        hexagon_basis = order_topology_basis(polygon(6))
        self.assertTrue(hexagon_basis.contains_set({0, 4, 5}))
        self.assertTrue(hexagon_basis.contains_set({2}))
        square_basis = order_topology_basis(polygon(4))
        for members in ({1}, {3}, set()):
            self.assertTrue(square_basis.contains_set(members))

    def test_finite_chains(self):
        octagon = polygon(8)
        self.assertTrue(finite_chain_union_is_interval(octagon, [{2}, {1, 2, 3}]))
        self.assertTrue(finite_chain_union_is_interval(polygon(4), [set()]))
        with self.assertRaises(NotAChain):
            finite_chain_union_is_interval(octagon, [{2}, {4}])

    def test_every_short_chain_is_an_interval(self):
        octagon = polygon(8)
        basis = order_topology_basis(octagon)
        intervals = [frozenset(members) for members in basis.as_sets()]
        for length in (1, 2, 3):
            for chain in combinations(sorted(intervals, key=len), length):
                if all(first <= second for first, second in zip(chain, chain[1:])):
                    self.assertTrue(finite_chain_union_is_interval(octagon, list(chain)))

    def test_interval_transfer(self):
        lin = LinearOrderWithEnds((0, 1, 2, 3, 4, 5))
        for a, b in combinations(lin.points, 2):
            if {a, b} == {0, 5}:
                continue
            self.assertTrue(check_interval_transfer(lin, a, b).passed)


class SerializerTests(SimpleTestCase):
    def test_read_square_relation(self):
        serializer = SeparationRelationSerializer(data={'n': 4, 'separated': [[[2, 0], [1, 3]]]})
        serializer.is_valid(raise_exception=True)
        raw = serializer.save()
        self.assertEqual(raw.to_relation(), polygon(4))

    def test_write_hexagon_relation_sorted(self):
        data = SeparationRelationSerializer(polygon(6)).data
        self.assertEqual(data['n'], 6)
        self.assertEqual(data['separated'], sorted(data['separated']))
        self.assertIn([[0, 2], [1, 3]], data['separated'])

    def test_point_outside_ground(self):
        serializer = SeparationRelationSerializer(data={'n': 4, 'separated': [[[0, 2], [1, 7]]]})
        self.assertFalse(serializer.is_valid())

    def test_rotation_must_be_a_permutation(self):
        self.assertFalse(CyclicOrderSerializer(data={'n': 4, 'rotation': [0, 1, 1, 3]}).is_valid())

    def test_linear_order_with_glued_ends(self):
        serializer = LinearOrderSerializer(data={'n': 4, 'order': [2, 3, 0, 1, 2]})
        serializer.is_valid(raise_exception=True)
        self.assertTrue(serializer.save().glued)
