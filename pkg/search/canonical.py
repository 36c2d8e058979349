"""
Isomorph rejection for finite connectivity spaces.
"""
from itertools import permutations

from connectivity.spaces import FiniteConnectivity


def _relabel(sets, permutation):
    return sorted(sorted(permutation[point] for point in members) for members in sets)


def canonical_form(space):
    """
    The lexicographically least relabelling of a finite space's family.

    Points are first renumbered 0..n-1 by their position in the ground set,
    then every permutation of those labels is tried.
    """
    n = space.size
    sets = [
        [index for index in range(n) if mask >> index & 1]
        for mask in space.ordered_members
    ]
    best = min(_relabel(sets, permutation) for permutation in permutations(range(n)))
    return FiniteConnectivity.from_sets(n, best)


def is_canonical(space):
    return canonical_form(space) == space
