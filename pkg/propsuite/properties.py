"""
The registered properties.

Ids are prefixed by the model they exercise: rc (rational circle), lex
(lexicographic interval), bc (big circle), dc (discrete circles) and
orders (finite linear and cyclic orders).
"""
from functools import lru_cache

from connectivity.axioms import classify_connected_subset, derive_seprel, is_n_flimsy, is_T1
from connectivity.exceptions import NoFormMatches, PreconditionFailed
from connectivity.lemmas import (
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
from continua.bigcircle import big_circle_seprel, check_no_ends_one_flimsy, project
from continua.discrete import discrete_circle
from continua.exceptions import LexInvariantError, RouteDisagreement
from continua.lexico import Comparison, lex_compare, lex_local_base, lex_partition_class, lex_reflect, lex_sup
from orders.conversions import cyclic_rearrangement, cyclic_to_seprel, linear_to_cyclic, validate_seprel
from orders.reports import AxiomReport, first_failure
from orders.structures import CyclicOrder, LinearOrderWithEnds

from .cases import (
    ARC_SET,
    CIRCLE_POINT,
    CIRCLE_POINTS,
    INTEGER,
    INTEGERS,
    LEX,
    LEXES,
    RATIONAL,
    RATIONALS,
    Field,
)
from .exceptions import GeneratorExhausted
from .registry import Registry

REGISTRY = Registry()

RATIONAL_CIRCLE = 'rational-circle'
BIG_CIRCLE = 'big-circle'
LEXICOGRAPHIC = 'lex'
DISCRETE_CIRCLE = 'discrete-circle'
ORDERS = 'orders'

REVERSED = {
    Comparison.LESS: Comparison.GREATER,
    Comparison.EQUAL: Comparison.EQUAL,
    Comparison.GREATER: Comparison.LESS,
}


def _fields(names, kind):
    return {name: Field(kind) for name in names}


def _distinct_rationals(names):
    def generate(stream, bundle):
        return dict(zip(names, stream.rationals(len(names))))
    return generate


def _distinct_circle_points(names):
    def generate(stream, bundle):
        return dict(zip(names, stream.circle_points(len(names))))
    return generate


def _until(stream, draw, accept):
    for _ in range(stream.max_retries):
        case = draw()
        if accept(case):
            return case
    raise GeneratorExhausted(f'{stream.property_id}: no acceptable case after {stream.max_retries} attempts')


def _sorted_seprel(values, key=None):
    order = sorted(range(len(values)), key=lambda index: (key or (lambda value: value))(values[index]))
    return cyclic_to_seprel(CyclicOrder(tuple(order)))


# rational circle

@REGISTRY.property('rc.only-two-components', RATIONAL_CIRCLE, _fields('xy', RATIONAL), _distinct_rationals('xy'))
def only_two_components(bundle, x, y):
    """The complement of two points has exactly two components."""
    return check_only_two_components(bundle.rational_circle, x, y)


@REGISTRY.property('rc.component-extensions', RATIONAL_CIRCLE, _fields('xy', RATIONAL), _distinct_rationals('xy'))
def component_extensions(bundle, x, y):
    """A component of the complement of {x, y} stays connected with x, y or both added."""
    return check_component_extensions(bundle.rational_circle, x, y)


@REGISTRY.property(
    'rc.complement-closure',
    RATIONAL_CIRCLE,
    {'A': Field(ARC_SET)},
    lambda stream, bundle: {'A': stream.connected_arc(bundle.rational_circle)},
)
def complement_closure(bundle, A):
    """The complement of a connected set is connected."""
    return check_complement_closure(bundle.rational_circle, A)


@REGISTRY.property(
    'rc.two-flimsy',
    RATIONAL_CIRCLE,
    {'sample': Field(RATIONALS, minimum=2)},
    lambda stream, bundle: {'sample': stream.rationals(stream.integer(2, 5))},
)
def two_flimsy(bundle, sample):
    """Removing one sampled point leaves the circle connected, removing two does not; no pair is connected."""
    circle = bundle.rational_circle
    failure = first_failure([is_n_flimsy(circle, 2, sample=sample), is_T1(circle, sample=sample)])
    return failure or AxiomReport.ok('two-flimsy')


def _disjoint_cover(bundle):
    def accept(case):
        circle = bundle.rational_circle
        return circle.union(case['A'], case['B']) != circle.whole()
    return accept


@REGISTRY.property(
    'rc.intersection',
    RATIONAL_CIRCLE,
    {'A': Field(ARC_SET), 'B': Field(ARC_SET)},
    lambda stream, bundle: _until(
        stream,
        lambda: {
            'A': stream.connected_arc(bundle.rational_circle),
            'B': stream.connected_arc(bundle.rational_circle),
        },
        _disjoint_cover(bundle),
    ),
)
def intersection(bundle, A, B):
    """Two connected sets that do not cover the circle meet in a connected set."""
    return check_intersection_connected(bundle.rational_circle, A, B)


def _arc_midpoint(x, y):
    """A rational strictly inside the counterclockwise arc from x to y."""
    if x < y:
        return (x + y) / 2
    return ((x + y + 1) / 2) % 1


@REGISTRY.property(
    'rc.touch-edges',
    RATIONAL_CIRCLE,
    {'x': Field(RATIONAL), 'y': Field(RATIONAL), 'side': Field(INTEGER), 'trim': Field(INTEGER)},
    lambda stream, bundle: {
        **_distinct_rationals('xy')(stream, bundle),
        'side': stream.integer(0, 1),
        'trim': stream.choice((0, 0, 1, 2)),
    },
)
def touch_edges(bundle, x, y, side, trim):
    """
    A side of {x, y} that is connected with both x and y added is a component.

    With trim set, C is the side cut short at its midpoint (trim 1 drops the
    half next to the first edge, trim 2 the half next to the second), and C
    with x and y added is not connected, so the check must refuse it.
    """
    circle = bundle.rational_circle
    first, second = (x, y) if side == 0 else (y, x)
    if trim == 0:
        return check_touch_edges(circle, x, y, circle.open_arc(first, second))
    middle = _arc_midpoint(first, second)
    part = circle.open_arc(middle, second) if trim == 1 else circle.open_arc(first, middle)
    try:
        report = check_touch_edges(circle, x, y, part)
    except PreconditionFailed:
        return AxiomReport.ok('touch-edges')
    return AxiomReport.fail('touch-edges', C=circle.serialize(part), accepted=report.to_dict())


@REGISTRY.property('rc.intersect-intervals', RATIONAL_CIRCLE, _fields('abc', RATIONAL), _distinct_rationals('abc'))
def intersect_intervals(bundle, a, b, c):
    """The c-side of {a, b} and the b-side of {a, c} meet in the side of {b, c} away from a."""
    return check_intersect_intervals(bundle.rational_circle, a, b, c)


@REGISTRY.property('rc.four-points', RATIONAL_CIRCLE, _fields('abcd', RATIONAL), _distinct_rationals('abcd'))
def four_points(bundle, a, b, c, d):
    """Crossing of co-pair components is consistent on four points."""
    return check_four_points(bundle.rational_circle, a, b, c, d)


@REGISTRY.property('rc.open-avoids-edges', RATIONAL_CIRCLE, _fields('vwxyz', RATIONAL), _distinct_rationals('vwxyz'))
def open_avoids_edges(bundle, v, w, x, y, z):
    """A side of {w, x} inside a closed side of {y, z} avoids y."""
    return check_open_avoids_edges(bundle.rational_circle, v, w, x, y, z)


def _complement_representation_case(stream, bundle):
    # outside runs from end back round to start; xi sits strictly inside it
    # so that the outside points fall on both sides of xi
    start, a, end, *outside = stream.cyclic_rationals(5 + stream.integer(1, 3))
    xi = outside.pop(stream.integer(1, len(outside) - 2))
    arc = bundle.rational_circle.interval(start, end, stream.chance(0.5), stream.chance(0.5))
    return {'A': arc, 'a': a, 'xi': xi, 'outside_points': outside}


@REGISTRY.property(
    'rc.complement-representation',
    RATIONAL_CIRCLE,
    {'A': Field(ARC_SET), 'a': Field(RATIONAL), 'xi': Field(RATIONAL), 'outside_points': Field(RATIONALS)},
    _complement_representation_case,
)
def complement_representation(bundle, A, a, xi, outside_points):
    """An arc through a missing xi is cut out by the a-sides of {xi, x} for x outside it."""
    return check_complement_representation(bundle.rational_circle, A, a, xi, outside_points)


@REGISTRY.property(
    'rc.derived-seprel',
    RATIONAL_CIRCLE,
    {'sample': Field(RATIONALS, minimum=4)},
    lambda stream, bundle: {'sample': stream.rationals(stream.integer(4, 8))},
)
def rational_derived_seprel(bundle, sample):
    """Co-pair components induce the circular separation relation of the sample."""
    relation = derive_seprel(bundle.rational_circle, sample)
    validity = validate_seprel(relation)
    if not validity.passed:
        return validity
    if relation != _sorted_seprel(sample):
        return AxiomReport.fail('derived-seprel', sample=[bundle.rational_circle.point_json(x) for x in sample])
    return AxiomReport.ok('derived-seprel')


@REGISTRY.property(
    'rc.classification',
    RATIONAL_CIRCLE,
    {'A': Field(ARC_SET)},
    lambda stream, bundle: {'A': stream.connected_arc(bundle.rational_circle)},
)
def classification(bundle, A):
    """Every connected set takes one of the listed forms."""
    circle = bundle.rational_circle
    try:
        found = classify_connected_subset(circle, A)
    except NoFormMatches:
        return AxiomReport.fail('classification', A=circle.serialize(A))
    return AxiomReport.ok('classification', **found.to_dict(circle))


@REGISTRY.property(
    'rc.component-not-containing',
    RATIONAL_CIRCLE,
    _fields('xyz', RATIONAL),
    _distinct_rationals('xyz'),
)
def component_not_containing(bundle, x, y, z):
    """The part of the complement of {x, y} away from z is a non-empty connected set."""
    return check_component_not_containing(bundle.rational_circle, x, y, z)


def _restriction_case(stream, bundle):
    circle = bundle.rational_circle
    outer = circle.union(stream.connected_arc(circle), stream.connected_arc(circle))
    return {'Y': outer, 'Z': circle.intersection(outer, stream.connected_arc(circle))}


@REGISTRY.property(
    'rc.component-restriction',
    RATIONAL_CIRCLE,
    {'Y': Field(ARC_SET), 'Z': Field(ARC_SET)},
    _restriction_case,
)
def component_restriction(bundle, Y, Z):
    """A component of Y lying inside Z is a component of Z."""
    return check_component_restriction(bundle.rational_circle, Y, Z)


# lexicographic interval

@REGISTRY.property(
    'lex.total-order',
    LEXICOGRAPHIC,
    _fields('xyz', LEX),
    lambda stream, bundle: {name: stream.lex_point() for name in 'xyz'},
)
def total_order(bundle, x, y, z):
    """Comparison is antisymmetric, agrees with equality and is transitive."""
    forward = lex_compare(x, y)
    if lex_compare(y, x) is not REVERSED[forward]:
        return AxiomReport.fail('total-order', law='antisymmetry', x=x.to_json(), y=y.to_json())
    if (forward is Comparison.EQUAL) != (x == y):
        return AxiomReport.fail('total-order', law='equality', x=x.to_json(), y=y.to_json())
    if x < y < z and not x < z:
        return AxiomReport.fail('total-order', law='transitivity', x=x.to_json(), y=y.to_json(), z=z.to_json())
    return AxiomReport.ok('total-order')


@REGISTRY.property(
    'lex.sup',
    LEXICOGRAPHIC,
    {'points': Field(LEXES, minimum=1)},
    lambda stream, bundle: {'points': [stream.lex_point() for _ in range(stream.integer(1, 5))]},
)
def supremum(bundle, points):
    """The coordinate recursion for the supremum of a finite set gives its maximum."""
    try:
        top = lex_sup(points)
    except LexInvariantError:
        return AxiomReport.fail('sup', points=[point.to_json() for point in points])
    return AxiomReport.ok('sup', sup=top.to_json())


@REGISTRY.property(
    'lex.midpoint',
    LEXICOGRAPHIC,
    _fields('xy', LEX),
    lambda stream, bundle: dict(zip('xy', sorted(stream.lex_points(2)))),
)
def midpoint(bundle, x, y):
    """The midpoint of x < y lies strictly between them."""
    middle = bundle.midpoint(x, y)
    if x < middle < y:
        return AxiomReport.ok('midpoint')
    return AxiomReport.fail('midpoint', x=x.to_json(), y=y.to_json(), midpoint=middle.to_json())


@REGISTRY.property(
    'lex.local-base',
    LEXICOGRAPHIC,
    {'x': Field(LEX), 'k': Field(INTEGER, minimum=1)},
    lambda stream, bundle: {'x': stream.lex_point(), 'k': stream.integer(1, 10)},
)
def local_base(bundle, x, k):
    """The k-th base interval contains x and holds the (k+1)-th."""
    current, following = lex_local_base(x, k), lex_local_base(x, k + 1)
    if current.contains(x) and following.contains(x) and following.within(current):
        return AxiomReport.ok('local-base')
    return AxiomReport.fail(
        'local-base',
        x=x.to_json(),
        k=k,
        current=current.to_json(),
        following=following.to_json(),
    )


@REGISTRY.property(
    'lex.reflect',
    LEXICOGRAPHIC,
    _fields('xy', LEX),
    lambda stream, bundle: dict(zip('xy', stream.lex_points(2))),
)
def reflect(bundle, x, y):
    """Reflection is an order-reversing involution."""
    if lex_reflect(lex_reflect(x)) != x:
        return AxiomReport.fail('reflect', law='involution', x=x.to_json())
    if (x < y) != (lex_reflect(y) < lex_reflect(x)):
        return AxiomReport.fail('reflect', law='order', x=x.to_json(), y=y.to_json())
    return AxiomReport.ok('reflect')


@REGISTRY.property(
    'lex.partition',
    LEXICOGRAPHIC,
    _fields('xy', LEX),
    lambda stream, bundle: dict(zip('xy', sorted(stream.lex_points(2)))),
)
def partition(bundle, x, y):
    """The three-part partition at 1/3 and 2/3 is monotone."""
    if x <= y and lex_partition_class(x) > lex_partition_class(y):
        return AxiomReport.fail('partition', x=x.to_json(), y=y.to_json())
    return AxiomReport.ok('partition')


def _line_case(stream, bundle):
    a, *sample, b = sorted(stream.lex_points(stream.integer(3, 5)))
    return {'a': a, 'b': b, 'sample': sample}


@REGISTRY.property(
    'lex.no-ends-one-flimsy',
    LEXICOGRAPHIC,
    {'a': Field(LEX), 'b': Field(LEX), 'sample': Field(LEXES, minimum=1)},
    _line_case,
)
def no_ends_one_flimsy(bundle, a, b, sample):
    """An open interval of L is connected and every point of it cuts it in two."""
    return check_no_ends_one_flimsy(a, b, sample)


# big circle

@REGISTRY.property(
    'bc.route-agreement',
    BIG_CIRCLE,
    _fields('abcd', CIRCLE_POINT),
    _distinct_circle_points('abcd'),
)
def route_agreement(bundle, a, b, c, d):
    """Crossing read from the glued order agrees with crossing read from interval membership."""
    try:
        separated = big_circle_seprel((a, b), (c, d))
    except RouteDisagreement as e:
        return AxiomReport.fail('route-agreement', **e.transcript)
    return AxiomReport.ok('route-agreement', separated=separated)


@REGISTRY.property(
    'bc.intersect-intervals',
    BIG_CIRCLE,
    _fields('abc', CIRCLE_POINT),
    _distinct_circle_points('abc'),
)
def big_intersect_intervals(bundle, a, b, c):
    """The intersect-intervals identity on the big circle."""
    return check_intersect_intervals(bundle.big_circle, a, b, c)


@REGISTRY.property(
    'bc.derived-seprel',
    BIG_CIRCLE,
    {'sample': Field(CIRCLE_POINTS, minimum=4)},
    lambda stream, bundle: {'sample': stream.circle_points(stream.integer(4, 6))},
)
def big_derived_seprel(bundle, sample):
    """Co-pair components of the big circle induce the circular order of the sample."""
    relation = derive_seprel(bundle.big_circle, sample)
    if relation != _sorted_seprel(sample, key=lambda point: project(point).representative):
        return AxiomReport.fail('derived-seprel', sample=[point.to_json() for point in sample])
    return AxiomReport.ok('derived-seprel')


# finite models

@lru_cache(maxsize=None)
def _discrete_characterization(n):
    return check_flimsy_characterization(discrete_circle(n).connectivity)


@REGISTRY.property(
    'dc.flimsy-characterization',
    DISCRETE_CIRCLE,
    {'n': Field(INTEGER, minimum=3)},
    lambda stream, bundle: {'n': stream.integer(3, 8)},
)
def discrete_flimsy_characterization(bundle, n):
    """On a discrete circle, 2-flimsy iff T1 and closed under complement."""
    return _discrete_characterization(n)


def _rearrangement_case(stream, bundle):
    order = list(range(stream.integer(4, 8)))
    stream.random.shuffle(order)
    return {'order': order, 'cut': stream.choice(order[1:-1])}


@REGISTRY.property(
    'orders.rearrangement',
    ORDERS,
    {'order': Field(INTEGERS, minimum=4), 'cut': Field(INTEGER)},
    _rearrangement_case,
)
def rearrangement(bundle, order, cut):
    """Cutting a linear order at an interior point and regluing keeps its cyclic order."""
    lin = LinearOrderWithEnds(tuple(order))
    if linear_to_cyclic(cyclic_rearrangement(lin, cut)) == linear_to_cyclic(lin):
        return AxiomReport.ok('rearrangement')
    return AxiomReport.fail('rearrangement', order=list(order), cut=cut)
