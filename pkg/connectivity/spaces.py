"""
Connectivity spaces: the query interface and its finite implementation.

Every space answers the same questions about subset expressions. A
finite space uses bitmasks over its ground set; the exact models in the
continua app use their own canonical set values. The checkers in
connectivity.axioms and connectivity.lemmas only talk to this interface.
"""
from abc import ABC, abstractmethod
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations

from orders.exceptions import DegeneratePoints
from orders.structures import SetFamily

from .exceptions import AxiomPrecondition


class ConnectivityOracle(ABC):
    """
    Connected-set queries on a (possibly infinite) space.

    Expressions must be canonical: two expressions denote the same set iff
    they compare equal.
    """
    finite = False

    @property
    @abstractmethod
    def descriptor(self):
        """Model identifier and parameters, JSON-ready."""

    @abstractmethod
    def whole(self):
        pass

    @abstractmethod
    def empty(self):
        pass

    @abstractmethod
    def from_points(self, points):
        """Expression for a finite set of points."""

    @abstractmethod
    def union(self, first, second):
        pass

    @abstractmethod
    def intersection(self, first, second):
        pass

    @abstractmethod
    def complement(self, expr):
        pass

    @abstractmethod
    def contains(self, expr, point):
        pass

    @abstractmethod
    def is_connected(self, expr):
        pass

    @abstractmethod
    def components(self, expr):
        """Partition of expr into its connected components, in a fixed order."""

    @abstractmethod
    def single_point(self, expr):
        """The only point of expr, or None when expr is not a singleton."""

    @abstractmethod
    def boundary_pairs(self, expr):
        """Candidate pairs (x, y) for expressing expr as a component of the complement of {x, y}."""

    @abstractmethod
    def serialize(self, expr):
        pass

    def point_json(self, point):
        return point

    def difference(self, first, second):
        return self.intersection(first, self.complement(second))

    def without(self, expr, *points):
        return self.difference(expr, self.from_points(points))

    def add_points(self, expr, *points):
        return self.union(expr, self.from_points(points))

    def is_empty(self, expr):
        return expr == self.empty()

    def is_subset(self, first, second):
        return self.is_empty(self.difference(first, second))

    def copair(self, x, y):
        """The complement of {x, y}."""
        if x == y:
            raise DegeneratePoints(f'A co-pair needs two distinct points, got {self.point_json(x)} twice')
        return self.without(self.whole(), x, y)

    def components_of_copair(self, x, y):
        return self.components(self.copair(x, y))

    def component_of(self, point, expr):
        """The component of expr containing point."""
        for part in self.components(expr):
            if self.contains(part, point):
                return part
        raise DegeneratePoints(f'Point {self.point_json(point)} is not in the queried set')


@dataclass(frozen=True)
class FiniteConnectivity(ConnectivityOracle):
    """
    An explicit family of connected subsets of a finite ground set.

    Expressions are bitmasks over ``family.ground``.
    """
    family: SetFamily
    finite = True

    @classmethod
    def from_sets(cls, n, sets):
        return cls(SetFamily.from_sets(range(n), sets))

    @property
    def descriptor(self):
        return {'model': 'finite', 'n': self.family.size}

    @property
    def points(self):
        return self.family.ground

    @property
    def size(self):
        return self.family.size

    @cached_property
    def ordered_members(self):
        return self.family.sorted_masks()

    @cached_property
    def satisfies_components_axioms(self):
        """C1 and C2, the axioms that make components well defined."""
        family = self.family.members
        if any(self.family.bit[point] not in family for point in self.points):
            return False
        if 0 not in family:
            return False
        for first, second in combinations(self.ordered_members, 2):
            if first & second and first | second not in family:
                return False
        return True

    def whole(self):
        return self.family.full_mask

    def empty(self):
        return 0

    def from_points(self, points):
        return self.family.mask(points)

    def union(self, first, second):
        return first | second

    def intersection(self, first, second):
        return first & second

    def complement(self, expr):
        return self.family.full_mask & ~expr

    def contains(self, expr, point):
        return bool(expr & self.family.bit[point])

    def is_connected(self, expr):
        return expr in self.family.members

    def components(self, expr):
        if not self.satisfies_components_axioms:
            raise AxiomPrecondition('Components need C1 and C2 to hold')
        parts = []
        covered = 0
        for point in self.points:
            bit = self.family.bit[point]
            if not expr & bit or covered & bit:
                continue
            part = 0
            for member in self.ordered_members:
                if member & bit and not member & ~expr:
                    part |= member
            parts.append(part)
            covered |= part
        return parts

    def single_point(self, expr):
        if expr and not expr & (expr - 1):
            return self.family.sorted_subset(expr)[0]
        return None

    def boundary_pairs(self, expr):
        return combinations(self.points, 2)

    def serialize(self, expr):
        return self.family.sorted_subset(expr)

    def members_as_sets(self):
        return self.family.as_sets()


def remove_point(space, point):
    """Restrict a finite space to the complement of one point."""
    if point not in space.family.bit:
        raise DegeneratePoints(f'Point {point} is not in the ground set')
    bit = space.family.bit[point]
    ground = [other for other in space.points if other != point]
    kept = [space.family.subset(mask) for mask in space.ordered_members if not mask & bit]
    return FiniteConnectivity(SetFamily.from_sets(ground, kept))
