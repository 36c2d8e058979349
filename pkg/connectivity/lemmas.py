"""
Executable checks of the structural facts about 2-flimsy connectivity spaces.

Each check evaluates one statement on concrete inputs through the
ConnectivityOracle interface and returns an AxiomReport. Inputs that do
not meet the statement's hypotheses either raise (input errors) or yield a
vacuous pass, as documented per check.
"""
import logging

from orders.exceptions import DegeneratePoints
from orders.reports import AxiomReport
from orders.structures import SeparationRelation

from .axioms import check_axioms, is_n_flimsy, is_T1
from .exceptions import HypothesisFailed, NotConnected, PreconditionFailed

logger = logging.getLogger(__name__)


def _distinct(space, *points):
    if len(set(points)) != len(points):
        raise DegeneratePoints(
            f'Points must be pairwise distinct, got {[space.point_json(point) for point in points]}'
        )


def _require_connected(space, expr, name):
    if not space.is_connected(expr):
        raise NotConnected(f'{name} = {space.serialize(expr)} is not connected')


def check_only_two_components(space, x, y):
    _distinct(space, x, y)
    parts = space.components_of_copair(x, y)
    witness = {
        'x': space.point_json(x),
        'y': space.point_json(y),
        'components': [space.serialize(part) for part in parts],
    }
    if len(parts) == 2:
        return AxiomReport.ok('only-two-components', **witness)
    return AxiomReport.fail('only-two-components', **witness)


def check_component_extensions(space, x, y):
    """Each component C of the complement of {x, y} stays connected after adding x, y or both."""
    _distinct(space, x, y)
    rest = space.copair(x, y)
    if space.finite and bin(rest).count('1') <= 1:
        return AxiomReport.vacuous('component-extensions', x=x, y=y)
    for part in space.components(rest):
        for added in ((x,), (y,), (x, y)):
            extended = space.add_points(part, *added)
            if not space.is_connected(extended):
                return AxiomReport.fail(
                    'component-extensions',
                    component=space.serialize(part),
                    added=[space.point_json(point) for point in added],
                )
    return AxiomReport.ok('component-extensions')


def check_complement_closure(space, subset):
    _require_connected(space, subset, 'A')
    rest = space.complement(subset)
    if space.is_connected(rest):
        return AxiomReport.ok('complement-closure')
    return AxiomReport.fail('complement-closure', A=space.serialize(subset), complement=space.serialize(rest))


def check_intersection_connected(space, first, second):
    _require_connected(space, first, 'A')
    _require_connected(space, second, 'B')
    if space.union(first, second) == space.whole():
        raise HypothesisFailed('A and B cover the whole space')
    meet = space.intersection(first, second)
    if space.is_connected(meet):
        return AxiomReport.ok('intersection')
    return AxiomReport.fail(
        'intersection',
        A=space.serialize(first),
        B=space.serialize(second),
        intersection=space.serialize(meet),
    )


def check_touch_edges(space, x, y, part):
    """A connected C inside the complement of {x, y} with C + {x, y} connected is a whole component."""
    _distinct(space, x, y)
    rest = space.copair(x, y)
    if not space.is_subset(part, rest):
        raise PreconditionFailed('C must avoid x and y', membership='C ⊆ ∁{x,y}')
    if not space.is_connected(part):
        raise PreconditionFailed('C must be connected', membership='C ∈ 𝒞')
    if not space.is_connected(space.add_points(part, x, y)):
        raise PreconditionFailed('C with x and y added must be connected', membership='C∪{x,y} ∈ 𝒞')
    if part in space.components(rest):
        return AxiomReport.ok('touch-edges')
    return AxiomReport.fail(
        'touch-edges',
        C=space.serialize(part),
        components=[space.serialize(component) for component in space.components(rest)],
    )


def _component_avoiding(space, point, expr):
    return space.difference(expr, space.component_of(point, expr))


def check_intersect_intervals(space, a, b, c):
    """The c-side of {a, b} meets the b-side of {a, c} exactly in the part of {b, c}'s complement away from a."""
    _distinct(space, a, b, c)
    left = space.intersection(
        space.component_of(c, space.copair(a, b)),
        space.component_of(b, space.copair(a, c)),
    )
    right = _component_avoiding(space, a, space.copair(b, c))
    if left == right:
        return AxiomReport.ok('intersect-intervals', interval=space.serialize(left))
    return AxiomReport.fail(
        'intersect-intervals',
        points=[space.point_json(point) for point in (a, b, c)],
        intersection=space.serialize(left),
        component=space.serialize(right),
    )


def separation_predicate(target):
    """Crossing test of a SeparationRelation, or the one induced by a space's components."""
    if isinstance(target, SeparationRelation):
        return target.separates

    def separates(a, b, c, d):
        if len({a, b, c, d}) < 4:
            return False
        part = target.component_of(c, target.copair(a, b))
        return not target.contains(part, d)

    return separates


def check_four_points(target, a, b, c, d):
    """
    Crossing consistency on four points:
    (i) {a,c} crossing {b,d} rules out {a,b} crossing {c,d};
    (ii) if neither {a,b},{c,d} nor {a,d},{b,c} cross then {b,d},{a,c} cross;
    (iii) crossing is symmetric.
    """
    if len({a, b, c, d}) < 4:
        raise DegeneratePoints('Four distinct points are required')
    sep = separation_predicate(target)
    point_json = getattr(target, 'point_json', lambda point: point)
    points = [point_json(point) for point in (a, b, c, d)]
    if sep(a, c, b, d) and sep(a, b, c, d):
        return AxiomReport.fail('four-points', item='i', points=points)
    if not sep(a, b, c, d) and not sep(a, d, b, c) and not sep(b, d, a, c):
        return AxiomReport.fail('four-points', item='ii', points=points)
    if sep(a, c, b, d) != sep(b, d, a, c):
        return AxiomReport.fail('four-points', item='iii', points=points)
    return AxiomReport.ok('four-points')


def check_open_avoids_edges(space, v, w, x, y, z):
    """If the v-side of {w, x} sits inside the v-side of {y, z} plus y and z, it avoids y."""
    _distinct(space, v, w, x)
    _distinct(space, v, y, z)
    inner = space.component_of(v, space.copair(w, x))
    outer = space.add_points(space.component_of(v, space.copair(y, z)), y, z)
    if not space.is_subset(inner, outer):
        return AxiomReport.vacuous('open-avoids-edges')
    if space.contains(inner, y):
        return AxiomReport.fail(
            'open-avoids-edges',
            component=space.serialize(inner),
            point=space.point_json(y),
        )
    return AxiomReport.ok('open-avoids-edges')


def check_complement_representation(space, subset, a, xi, outside_points):
    """
    A connected A holding a and missing xi is cut out by the components of
    a in the complements of {xi, x}, x outside A. Checked on finitely many
    outside points x: each term contains A and misses its own x.
    """
    _require_connected(space, subset, 'A')
    if not space.contains(subset, a):
        raise PreconditionFailed('a must lie in A', membership='a ∈ A')
    if space.contains(subset, xi):
        raise PreconditionFailed('xi must lie outside A', membership='ξ ∉ A')
    outside_points = sorted(outside_points)
    if not outside_points:
        return AxiomReport.vacuous('complement-representation')
    for point in outside_points:
        if point == xi or space.contains(subset, point):
            raise PreconditionFailed('outside points must lie outside A and differ from xi', membership='x ∈ ∁A∖{ξ}')
        term = space.component_of(a, space.copair(xi, point))
        if not space.is_subset(subset, term) or space.contains(term, point):
            return AxiomReport.fail(
                'complement-representation',
                outside_point=space.point_json(point),
                term=space.serialize(term),
            )
    return AxiomReport.ok('complement-representation')


def check_component_restriction(space, outer, inner):
    """Every component of Y lying inside Z (Z within Y) is a component of Z."""
    if not space.is_subset(inner, outer):
        raise PreconditionFailed('Z must be contained in Y', membership='Z ⊆ Y')
    inner_parts = space.components(inner)
    for part in space.components(outer):
        if space.is_subset(part, inner) and part not in inner_parts:
            return AxiomReport.fail(
                'component-restriction',
                component=space.serialize(part),
                Z=space.serialize(inner),
            )
    return AxiomReport.ok('component-restriction')


def check_component_not_containing(space, x, y, z):
    """The part of the complement of {x, y} away from z is non-empty and connected."""
    _distinct(space, x, y, z)
    rest = _component_avoiding(space, z, space.copair(x, y))
    if not space.is_empty(rest) and space.is_connected(rest):
        return AxiomReport.ok('component-not-containing')
    return AxiomReport.fail(
        'component-not-containing',
        points=[space.point_json(point) for point in (x, y, z)],
        remainder=space.serialize(rest),
    )


def check_flimsy_characterization(space):
    """On a finite space with at least 3 points: 2-flimsy iff T1 and closed under complement."""
    if space.size < 3:
        return AxiomReport.vacuous('flimsy-characterization', cardinality=space.size)
    if not all(report.passed for report in check_axioms(space, ('C1', 'C2', 'C3'))):
        return AxiomReport.vacuous('flimsy-characterization', reason='not a connectivity space')
    two_flimsy = is_n_flimsy(space, 2).passed
    t1 = is_T1(space).passed
    complement_closed = all(space.complement(member) in space.family for member in space.ordered_members)
    witness = {'two_flimsy': two_flimsy, 't1': t1, 'complement_closed': complement_closed}
    if two_flimsy == (t1 and complement_closed):
        return AxiomReport.ok('flimsy-characterization', **witness)
    logger.warning(f'Flimsy characterization mismatch on {space.members_as_sets()}')
    return AxiomReport.fail('flimsy-characterization', **witness)
