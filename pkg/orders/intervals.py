"""
Open intervals of a separation relation and the order topology they generate.
"""
import logging
from itertools import combinations

from .conversions import cyclic_to_seprel, linear_to_cyclic
from .exceptions import DegeneratePoints, NotAChain, NotAnInterval, StructureError, TooFewPoints
from .reports import AxiomReport
from .structures import SetFamily

logger = logging.getLogger(__name__)


def open_interval(relation, a, b, c, containing_c):
    """
    One side of the chord {a, b}.

    Args:
        relation: SeparationRelation
        a, b: endpoints of the chord
        c: reference point off the chord
        containing_c: pick the side holding c instead of the side away from it

    Returns:
        frozenset of points
    """
    if len({a, b, c}) < 3:
        raise DegeneratePoints(f'Interval query needs distinct points, got {[a, b, c]}')
    for point in (a, b, c):
        if point not in relation.points:
            raise DegeneratePoints(f'Point {point} is not in the ground set')
    away = frozenset(
        d for d in relation.points
        if d not in (a, b, c) and relation.separates(a, b, c, d)
    )
    if containing_c:
        return relation.points - {a, b} - away
    return away


def is_dense(relation):
    """Every chord separates some other chord; the report names the first chord that does not."""
    if relation.n < 3:
        raise TooFewPoints(f'Density needs at least 3 points, got {relation.n}')
    points = sorted(relation.points)
    for a, b in combinations(points, 2):
        rest = [point for point in points if point not in (a, b)]
        if not any(relation.separates(a, b, c, d) for c, d in combinations(rest, 2)):
            return AxiomReport.fail('dense', chord=[a, b])
    return AxiomReport.ok('dense')


def order_topology_basis(relation):
    """All open intervals of the relation, both sides of every chord."""
    if relation.n < 3:
        raise TooFewPoints(f'The order topology needs at least 3 points, got {relation.n}')
    family = SetFamily(relation.points)
    members = set()
    points = sorted(relation.points)
    for a, b in combinations(points, 2):
        for c in points:
            if c in (a, b):
                continue
            members.add(family.mask(open_interval(relation, a, b, c, False)))
            members.add(family.mask(open_interval(relation, a, b, c, True)))
    return SetFamily(family.ground, frozenset(members))


def finite_chain_union_is_interval(relation, chain):
    """
    Order-completeness restricted to a finite chain of open intervals.

    A finite chain has a largest element which is its union, so the answer
    is always true once the input is a chain of intervals.
    """
    if not chain:
        raise NotAChain('The chain is empty')
    basis = order_topology_basis(relation)
    sets = [frozenset(element) for element in chain]
    for element in sets:
        if basis.mask(element) not in basis:
            raise NotAnInterval(f'{sorted(element)} is not an open interval')
    for first, second in combinations(sets, 2):
        if not (first <= second or second <= first):
            raise NotAChain(f'{sorted(first)} and {sorted(second)} are not comparable')
    union = frozenset().union(*sets)
    result = basis.mask(union) in basis
    logger.debug(f'Chain of {len(sets)} intervals, union {sorted(union)} is an interval: {result}')
    return result


def check_interval_transfer(lin, a, b):
    """
    The two open intervals of the glued order between a and b are the images
    of (a, b) and of the complement of [a, b].
    """
    if a == b or a not in lin.rank or b not in lin.rank:
        raise DegeneratePoints(f'Need two distinct points of the order, got {[a, b]}')
    if not lin.less(a, b):
        a, b = b, a
    glued = lin.minimum

    def project(point):
        return glued if point == lin.maximum else point

    if project(a) == project(b):
        raise DegeneratePoints('Both ends glue to the same point')

    relation = cyclic_to_seprel(linear_to_cyclic(lin))
    inside = frozenset(project(x) for x in lin.points if lin.less(a, x) and lin.less(x, b))
    outside = relation.points - {project(a), project(b)} - inside

    reference = next(iter(sorted(relation.points - {project(a), project(b)})), None)
    if reference is None:
        raise StructureError('The glued order has no point off the chord')
    sides = {
        open_interval(relation, project(a), project(b), reference, False),
        open_interval(relation, project(a), project(b), reference, True),
    }
    if sides == {inside, outside}:
        return AxiomReport.ok('interval-transfer')
    return AxiomReport.fail(
        'interval-transfer',
        chord=sorted([project(a), project(b)]),
        expected=[sorted(inside), sorted(outside)],
        found=sorted(sorted(side) for side in sides),
    )
