"""
Finite circular order structures.

Points are non-negative integers. All structures are immutable values;
constructors normalize their input so that equal structures compare equal.
"""
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations

from .exceptions import (
    DegeneratePoints,
    DuplicatePoint,
    InvalidRelation,
    StructureError,
    TooFewPoints,
)


def _point_ids(values):
    points = tuple(values)
    for point in points:
        if isinstance(point, bool) or not isinstance(point, int) or point < 0:
            raise StructureError(f'Point ids must be non-negative integers, got {point!r}')
    return points


@dataclass(frozen=True)
class LinearOrderWithEnds:
    """
    A finite linear order listed from its minimum to its maximum.

    The two ends may carry the same id: that is the glued point produced by
    a cyclic rearrangement. Any other repetition is rejected.
    """
    points: tuple

    def __post_init__(self):
        points = _point_ids(self.points)
        object.__setattr__(self, 'points', points)
        if len(points) < 2:
            raise TooFewPoints(f'A linear order with ends needs at least 2 points, got {len(points)}')
        body = points[:-1] if self.glued else points
        if len(set(body)) != len(body):
            raise DuplicatePoint(f'Repeated point in linear order {list(points)}')

    @property
    def glued(self):
        return len(self.points) > 2 and self.points[0] == self.points[-1]

    @property
    def minimum(self):
        return self.points[0]

    @property
    def maximum(self):
        return self.points[-1]

    @property
    def interior(self):
        return self.points[1:-1]

    @cached_property
    def rank(self):
        """Position of every interior point, and of the ends."""
        ranks = {point: index for index, point in enumerate(self.points)}
        ranks[self.minimum] = 0
        return ranks

    def less(self, x, y):
        return self.rank[x] < self.rank[y]


@dataclass(frozen=True)
class CyclicOrder:
    """
    A circular arrangement of a finite point set.

    Stored as a rotation starting at the smallest id; the ternary relation
    [x, y, z] reads "starting from x we meet y before z".
    """
    rotation: tuple

    def __post_init__(self):
        rotation = _point_ids(self.rotation)
        if len(rotation) < 3:
            raise TooFewPoints(f'A cyclic order needs at least 3 points, got {len(rotation)}')
        if len(set(rotation)) != len(rotation):
            raise DuplicatePoint(f'Repeated point in rotation {list(rotation)}')
        start = rotation.index(min(rotation))
        object.__setattr__(self, 'rotation', rotation[start:] + rotation[:start])

    @property
    def n(self):
        return len(self.rotation)

    @cached_property
    def points(self):
        return frozenset(self.rotation)

    @cached_property
    def position(self):
        return {point: index for index, point in enumerate(self.rotation)}

    def holds(self, x, y, z):
        if x == y or y == z or x == z:
            return False
        try:
            px, py, pz = self.position[x], self.position[y], self.position[z]
        except KeyError as exc:
            raise DegeneratePoints(f'Point {exc.args[0]} is not in the cyclic order') from exc
        n = self.n
        return (py - px) % n < (pz - px) % n

    def triples(self):
        """Every triple (x, y, z) for which [x, y, z] holds, in sorted order."""
        ordered = sorted(self.rotation)
        return [
            (x, y, z)
            for x in ordered for y in ordered for z in ordered
            if self.holds(x, y, z)
        ]


@dataclass(frozen=True, order=True)
class Chord:
    """An unordered pair of distinct points, stored as a < b."""
    a: int
    b: int

    def __post_init__(self):
        if self.a == self.b:
            raise DegeneratePoints(f'A chord needs two distinct points, got {{{self.a}, {self.b}}}')
        if self.a > self.b:
            a, b = self.b, self.a
            object.__setattr__(self, 'a', a)
            object.__setattr__(self, 'b', b)

    def __iter__(self):
        yield self.a
        yield self.b

    def meets(self, other):
        return bool({self.a, self.b} & {other.a, other.b})

    def as_list(self):
        return [self.a, self.b]


def crossing(first, second):
    """Normalized key of the unordered pair {first, second} of chords."""
    return (first, second) if first <= second else (second, first)


@dataclass(frozen=True)
class SeparationRelation:
    """
    Crossing chords on a finite point set.

    ``separated`` holds unordered pairs of disjoint chords, so symmetry (S1)
    and disjointness (S2) are structural; S3 and S4 are checked by
    orders.conversions.validate_seprel.
    """
    points: frozenset
    separated: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        points = frozenset(_point_ids(self.points))
        object.__setattr__(self, 'points', points)
        pairs = set()
        for entry in self.separated:
            first, second = (chord if isinstance(chord, Chord) else Chord(*chord) for chord in entry)
            if first.meets(second):
                raise InvalidRelation(
                    f'Chords {first.as_list()} and {second.as_list()} share a point (S2)'
                )
            for endpoint in (*first, *second):
                if endpoint not in points:
                    raise StructureError(f'Point {endpoint} is not in the ground set')
            pairs.add(crossing(first, second))
        object.__setattr__(self, 'separated', frozenset(pairs))

    @property
    def n(self):
        return len(self.points)

    def separates(self, a, b, c, d):
        """True when {a, b} and {c, d} cross."""
        if len({a, b, c, d}) < 4:
            return False
        return crossing(Chord(a, b), Chord(c, d)) in self.separated

    def chords(self):
        return [Chord(a, b) for a, b in combinations(sorted(self.points), 2)]

    def sorted_pairs(self):
        return sorted(self.separated)


@dataclass(frozen=True)
class RawRelation:
    """
    An unchecked separation table as read from a file.

    Entries are ordered chord pairs. When ``directed`` is false every entry
    stands for the unordered pair, which is how the canonical file format
    stores relations.
    """
    points: frozenset
    pairs: tuple
    directed: bool = False

    def __post_init__(self):
        object.__setattr__(self, 'points', frozenset(_point_ids(self.points)))
        pairs = []
        for first, second in self.pairs:
            first, second = tuple(first), tuple(second)
            if len(first) != 2 or len(second) != 2:
                raise StructureError(f'Malformed chord pair {[list(first), list(second)]}')
            for endpoint in (*first, *second):
                if endpoint not in self.points:
                    raise StructureError(f'Point {endpoint} is not in the ground set')
            if first[0] == first[1] or second[0] == second[1]:
                raise DegeneratePoints(f'Degenerate chord in {[list(first), list(second)]}')
            pairs.append((first, second))
        object.__setattr__(self, 'pairs', tuple(pairs))

    @classmethod
    def from_relation(cls, relation):
        return cls(
            relation.points,
            tuple((tuple(first), tuple(second)) for first, second in relation.sorted_pairs()),
        )

    def to_relation(self):
        """Symmetrize into a SeparationRelation; S2 failures raise InvalidRelation."""
        return SeparationRelation(self.points, frozenset(self.pairs))


@dataclass(frozen=True)
class SetFamily:
    """
    A family of subsets of a finite ground set, stored as bitmasks.

    Bit i of a mask stands for the i-th smallest ground point.
    """
    ground: tuple
    members: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        ground = tuple(sorted(set(_point_ids(self.ground))))
        object.__setattr__(self, 'ground', ground)
        members = frozenset(self.members)
        full = (1 << len(ground)) - 1
        for mask in members:
            if mask < 0 or mask & ~full:
                raise StructureError(f'Member mask {mask} is not a subset of the ground set')
        object.__setattr__(self, 'members', members)

    @classmethod
    def from_sets(cls, ground, sets):
        family = cls(ground)
        return cls(family.ground, frozenset(family.mask(subset) for subset in sets))

    @cached_property
    def bit(self):
        return {point: 1 << index for index, point in enumerate(self.ground)}

    @property
    def size(self):
        return len(self.ground)

    @property
    def full_mask(self):
        return (1 << len(self.ground)) - 1

    def mask(self, points):
        total = 0
        for point in points:
            try:
                total |= self.bit[point]
            except KeyError as exc:
                raise StructureError(f'Point {point} is not in the ground set') from exc
        return total

    def subset(self, mask):
        return frozenset(point for index, point in enumerate(self.ground) if mask >> index & 1)

    def sorted_subset(self, mask):
        return [point for index, point in enumerate(self.ground) if mask >> index & 1]

    def __contains__(self, mask):
        return mask in self.members

    def __len__(self):
        return len(self.members)

    def contains_set(self, points):
        return self.mask(points) in self.members

    def sorted_masks(self):
        return sorted(self.members)

    def as_sets(self):
        """Members as sorted point lists, sorted lexicographically."""
        return sorted(self.sorted_subset(mask) for mask in self.members)
