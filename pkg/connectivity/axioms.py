"""
Axiom checkers for connectivity spaces, components, T1 and n-flimsiness,
and the separation relation a space induces on a sample of its points.
"""
import logging
from dataclasses import dataclass
from enum import StrEnum
from itertools import combinations

from orders.exceptions import DegeneratePoints
from orders.reports import AxiomReport
from orders.structures import Chord, SeparationRelation, crossing

from .exceptions import ComponentCount, NoFormMatches, NotConnected, SampleRequired

logger = logging.getLogger(__name__)

ALL_AXIOMS = ('C1', 'C2', 'C3', 'C4')


def _check_c1(space):
    family = space.family.members
    for point in space.points:
        if space.family.bit[point] not in family:
            return AxiomReport.fail('C1', point=point)
    return AxiomReport.ok('C1')


def _check_c2(space):
    # Pairwise unions suffice: members sharing a point can be merged one at
    # a time, every partial union still containing that point.
    family = space.family.members
    if 0 not in family:
        return AxiomReport.fail('C2', missing=[])
    for first, second in combinations(space.ordered_members, 2):
        if first & second and first | second not in family:
            return AxiomReport.fail(
                'C2',
                A=space.serialize(first),
                B=space.serialize(second),
                union=space.serialize(first | second),
            )
    return AxiomReport.ok('C2')


def _check_c3(space):
    family = space.family.members
    members = space.ordered_members
    for whole in members:
        inside = [point for point in space.points if space.contains(whole, point)]
        for x in inside:
            rest = whole & ~space.family.bit[x]
            for y in inside:
                if x == y:
                    continue
                bit = space.family.bit[y]
                component = 0
                for member in members:
                    if member & bit and not member & ~rest:
                        component |= member
                remainder = whole & ~component
                if remainder not in family:
                    return AxiomReport.fail(
                        'C3',
                        Y=space.serialize(whole),
                        x=x,
                        y=y,
                        complement=space.serialize(remainder),
                    )
    return AxiomReport.ok('C3')


def _check_c4(space):
    family = space.family.members
    members = [member for member in space.ordered_members if member]
    for first in members:
        for second in members:
            union = first | second
            if union not in family:
                continue
            button = any(
                first | space.family.bit[x] in family and second | space.family.bit[x] in family
                for x in space.points if union & space.family.bit[x]
            )
            if button:
                continue
            seam = any(
                seam & ~union == 0 and (seam & first not in family or seam & second not in family)
                for seam in space.ordered_members
            )
            if not seam:
                return AxiomReport.fail('C4', A=space.serialize(first), B=space.serialize(second))
    return AxiomReport.ok('C4')


_CHECKERS = {
    'C1': _check_c1,
    'C2': _check_c2,
    'C3': _check_c3,
    'C4': _check_c4,
}


def check_axioms(space, which=ALL_AXIOMS):
    """
    Check the connectivity axioms on a finite space.

    Args:
        space: FiniteConnectivity
        which: axiom ids among C1-C4

    Returns:
        list of AxiomReport, one per requested axiom, in C1-C4 order
    """
    unknown = set(which) - set(ALL_AXIOMS)
    if unknown:
        raise ValueError(f'Unknown axioms: {sorted(unknown)}')
    reports = []
    for axiom in ALL_AXIOMS:
        if axiom in which:
            report = _CHECKERS[axiom](space)
            logger.debug(f'{axiom} on {space.descriptor}: {report.verdict}')
            reports.append(report)
    return reports


def components(space, subset):
    return space.components(subset)


def is_T1(space, sample=None):
    """No two-point set is connected (checked on sample pairs for infinite models)."""
    points = _sample_points(space, sample)
    for x, y in combinations(points, 2):
        if space.is_connected(space.from_points([x, y])):
            return AxiomReport.fail('T1', pair=[space.point_json(x), space.point_json(y)])
    return AxiomReport.ok('T1')


def is_n_flimsy(space, n, sample=None):
    """
    Removing fewer than n points leaves a connected set, removing exactly n
    points never does.

    For infinite models the removal sets range over subsets of the sample
    only; a pass certifies nothing beyond it.
    """
    if n < 1:
        raise ValueError(f'n must be a positive integer, got {n}')
    axiom = f'flimsy({n})'
    points = _sample_points(space, sample)
    if space.finite and space.size <= n:
        return AxiomReport.fail(axiom, cardinality=space.size)
    whole = space.whole()
    for size in range(n + 1):
        for removed in combinations(points, size):
            connected = space.is_connected(space.without(whole, *removed))
            if connected != (size < n):
                return AxiomReport.fail(
                    axiom,
                    removed=[space.point_json(point) for point in removed],
                    connected=connected,
                )
    return AxiomReport.ok(axiom)


def _sample_points(space, sample):
    if sample is None:
        if not space.finite:
            raise SampleRequired(f'Model {space.descriptor["model"]} needs an explicit sample')
        return list(space.points)
    points = sorted(set(sample))
    if len(points) != len(sample):
        raise DegeneratePoints('Sample points must be distinct')
    return points


def derive_seprel(space, sample):
    """
    The separation relation of a space restricted to a sample.

    {a, b} and {c, d} cross iff c and d lie in different components of the
    complement of {a, b}. The result is over indices: sample[i] becomes i.
    """
    labels = list(sample)
    if len(set(labels)) != len(labels):
        raise DegeneratePoints('Sample points must be distinct')
    separated = set()
    for i, j in combinations(range(len(labels)), 2):
        parts = space.components_of_copair(labels[i], labels[j])
        if len(parts) != 2:
            raise ComponentCount(
                f'Complement of {{{space.point_json(labels[i])}, {space.point_json(labels[j])}}} '
                f'has {len(parts)} components',
                pair=[space.point_json(labels[i]), space.point_json(labels[j])],
                count=len(parts),
            )
        others = [m for m in range(len(labels)) if m not in (i, j)]
        side = {m: space.contains(parts[0], labels[m]) for m in others}
        for m, l in combinations(others, 2):
            if side[m] != side[l]:
                separated.add(crossing(Chord(i, j), Chord(m, l)))
    return SeparationRelation(frozenset(range(len(labels))), frozenset(separated))


class ConnectedForm(StrEnum):
    EMPTY = 'Empty'
    WHOLE = 'Whole'
    SINGLETON = 'Singleton'
    CO_SINGLETON = 'CoSingleton'
    COMPONENT = 'Component'
    COMPONENT_PLUS_ONE = 'ComponentPlusOne'
    COMPONENT_PLUS_TWO = 'ComponentPlusTwo'


@dataclass(frozen=True)
class Classification:
    form: ConnectedForm
    pair: tuple = ()
    added: tuple = ()

    def to_dict(self, space):
        return {
            'form': self.form.value,
            'pair': [space.point_json(point) for point in self.pair],
            'added': [space.point_json(point) for point in self.added],
        }


def classify_connected_subset(space, subset):
    """
    Place a connected set among the forms available in a 2-flimsy space:
    empty, whole, a point, a co-point, or a component C of the complement
    of some {x, y} possibly with x and/or y added back.
    """
    if not space.is_connected(subset):
        raise NotConnected(f'{space.serialize(subset)} is not connected')
    if space.is_empty(subset):
        return Classification(ConnectedForm.EMPTY)
    if subset == space.whole():
        return Classification(ConnectedForm.WHOLE)
    point = space.single_point(subset)
    if point is not None:
        return Classification(ConnectedForm.SINGLETON, (point,))
    point = space.single_point(space.complement(subset))
    if point is not None:
        return Classification(ConnectedForm.CO_SINGLETON, (point,))

    for x, y in space.boundary_pairs(subset):
        for part in space.components_of_copair(x, y):
            if subset == part:
                return Classification(ConnectedForm.COMPONENT, (x, y))
            for added in ((x,), (y,)):
                if subset == space.add_points(part, *added):
                    return Classification(ConnectedForm.COMPONENT_PLUS_ONE, (x, y), added)
            if subset == space.add_points(part, x, y):
                return Classification(ConnectedForm.COMPONENT_PLUS_TWO, (x, y), (x, y))
    logger.error(f'No classification form matches {space.serialize(subset)} in {space.descriptor}')
    raise NoFormMatches(f'{space.serialize(subset)} matches none of the connected forms')
