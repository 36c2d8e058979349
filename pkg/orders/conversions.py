"""
Conversions between linear orders with ends, cyclic orders and separation
relations, and the separation axiom checker.
"""
import logging
from functools import cmp_to_key
from itertools import combinations

from .exceptions import (
    AnchorDegenerate,
    CutIsEnd,
    InvalidCyclicOrder,
    InvalidRelation,
    StructureError,
    TooFewPoints,
)
from .reports import AxiomReport
from .structures import Chord, CyclicOrder, LinearOrderWithEnds, RawRelation, SeparationRelation, crossing

logger = logging.getLogger(__name__)


def linear_to_cyclic(lin):
    """
    Glue the two ends of a linear order into one point.

    The glued point keeps the minimum's id. For distinct x, y, z of the
    quotient, [x, y, z] holds iff x<y<z, z<x<y or y<z<x, which is exactly
    the circular reading of the order with its maximum dropped.

    Args:
        lin: LinearOrderWithEnds with at least 4 entries

    Returns:
        CyclicOrder on the quotient set
    """
    if len(lin.points) < 4:
        raise TooFewPoints(
            f'Gluing the ends needs at least 4 points, got {len(lin.points)}'
        )
    return CyclicOrder(lin.points[:-1])


def cyclic_rearrangement(lin, cut):
    """
    Cut the order at an interior point and glue the old ends together.

    The cut point becomes both new ends (first and last entries carry its
    id); the old ends merge into one interior point with the minimum's id.
    """
    if cut in (lin.minimum, lin.maximum):
        raise CutIsEnd(f'Cannot cut at the end point {cut}')
    if cut not in lin.interior:
        raise StructureError(f'Point {cut} is not in the linear order')
    index = lin.points.index(cut)
    points = lin.points
    return LinearOrderWithEnds(points[index:-1] + (points[0],) + points[1:index] + (cut,))


def opposite(order):
    rotation = order.rotation
    return CyclicOrder((rotation[0],) + tuple(reversed(rotation[1:])))


def _crosses(order, a, b, c, d):
    return (
        (order.holds(a, c, b) and order.holds(b, d, a))
        or (order.holds(a, d, b) and order.holds(b, c, a))
    )


def _pairings(quad):
    a, b, c, d = quad
    return (((a, b), (c, d)), ((a, c), (b, d)), ((a, d), (b, c)))


def cyclic_to_seprel(order):
    """
    Separation relation induced by a cyclic order.

    {a, b} and {c, d} cross iff ([a,c,b] and [b,d,a]) or ([a,d,b] and [b,c,a]).
    """
    separated = set()
    for quad in combinations(sorted(order.points), 4):
        for (a, b), (c, d) in _pairings(quad):
            if _crosses(order, a, b, c, d):
                separated.add(crossing(Chord(a, b), Chord(c, d)))
    return SeparationRelation(order.points, frozenset(separated))


def validate_seprel(candidate):
    """
    Check S1-S4 and report the first violation.

    Args:
        candidate: SeparationRelation or RawRelation

    Returns:
        AxiomReport with axiom 'S1-S4' on pass, or the violated axiom and
        its witness points
    """
    raw = candidate if isinstance(candidate, RawRelation) else RawRelation.from_relation(candidate)
    entries = sorted(raw.pairs)

    if raw.directed:
        present = set(entries)
        for first, second in entries:
            if (second, first) not in present:
                return AxiomReport.fail('S1', pair=[list(first), list(second)])

    for first, second in entries:
        if set(first) & set(second):
            return AxiomReport.fail('S2', pair=[list(first), list(second)])

    separated = {crossing(Chord(*first), Chord(*second)) for first, second in entries}

    def sep(a, b, c, d):
        return crossing(Chord(a, b), Chord(c, d)) in separated

    points = sorted(raw.points)
    for quad in combinations(points, 4):
        holding = sum(sep(a, b, c, d) for (a, b), (c, d) in _pairings(quad))
        if holding != 1:
            return AxiomReport.fail('S3', points=list(quad), holding=holding)

    for a, b in combinations(points, 2):
        rest = [point for point in points if point not in (a, b)]
        for c, d, e in combinations(rest, 3):
            holding = sep(a, b, c, d) + sep(a, b, d, e) + sep(a, b, c, e)
            if holding not in (0, 2):
                return AxiomReport.fail('S4', points=[a, b, c, d, e], holding=holding)

    return AxiomReport.ok('S1-S4')


def seprel_to_cyclic(relation, anchor):
    """
    Recover the cyclic order of a valid separation relation.

    The relation alone fixes the order up to reversal; the anchor (a, b, c)
    picks the orientation in which [a, b, c] holds. Walking from a we first
    meet the side of {a, b} away from c, then b, then the side containing c.
    """
    a, b, c = anchor
    if len({a, b, c}) < 3:
        raise AnchorDegenerate(f'Anchor points must be distinct, got {list(anchor)}')
    if not {a, b, c} <= relation.points:
        raise AnchorDegenerate(f'Anchor {list(anchor)} is not inside the ground set')

    report = validate_seprel(relation)
    if not report.passed:
        raise InvalidRelation(f'Relation violates {report.axiom}: {report.witness}', report)

    rest = [point for point in sorted(relation.points) if point not in (a, b)]
    near = [point for point in rest if relation.separates(a, b, c, point)]
    far = [point for point in rest if point not in near]

    def near_order(x, y):
        # a, x, y, b: the chord {a, y} separates x from b
        return -1 if relation.separates(a, y, x, b) else 1

    def far_order(x, y):
        # b, x, y, a: the chord {b, y} separates x from a
        return -1 if relation.separates(b, y, x, a) else 1

    near.sort(key=cmp_to_key(near_order))
    far.sort(key=cmp_to_key(far_order))
    order = CyclicOrder((a, *near, b, *far))

    if cyclic_to_seprel(order) != relation:
        # cannot happen for relations passing S1-S4
        logger.error(f'Reconstructed order {order.rotation} does not induce the input relation')
        raise InvalidRelation('Relation is not induced by a cyclic order', report)
    return order


def cyclic_order_from_ternary(points, triples):
    """
    Canonicalize a raw ternary table into a CyclicOrder.

    The table is accepted iff it is induced by a linear order: cut at the
    smallest id e, sort the rest with "x before y iff [e, x, y]", and
    compare the induced table with the given one.
    """
    points = sorted(set(points))
    if len(points) < 3:
        raise TooFewPoints(f'A cyclic order needs at least 3 points, got {len(points)}')
    table = {tuple(triple) for triple in triples}
    e = points[0]

    def compare(x, y):
        if (e, x, y) in table:
            return -1
        if (e, y, x) in table:
            return 1
        raise InvalidCyclicOrder(f'Neither [{e},{x},{y}] nor [{e},{y},{x}] holds')

    rest = sorted(points[1:], key=cmp_to_key(compare))
    order = CyclicOrder((e, *rest))
    if set(order.triples()) != table:
        raise InvalidCyclicOrder('Ternary table is not induced by any linear order')
    return order
