"""
Set families on {0, ..., g-1} packed into a single int.

Bit m of a family is set iff the subset with bitmask m is a member. The
checks below answer the same questions as connectivity.axioms without
building a FiniteConnectivity per candidate; a found family is always
replayed through those checkers afterwards.
"""
from itertools import combinations

from connectivity.spaces import FiniteConnectivity


def has(family, mask):
    return family >> mask & 1 == 1


def member_masks(family):
    return [mask for mask in range(family.bit_length()) if family >> mask & 1]


def full_mask(ground_size):
    return (1 << ground_size) - 1


def popcount(mask):
    return bin(mask).count('1')


def satisfies_c1(family, ground_size):
    return all(has(family, 1 << point) for point in range(ground_size))


def satisfies_c2(family, ground_size):
    if not has(family, 0):
        return False
    for first, second in combinations(member_masks(family), 2):
        if first & second and not has(family, first | second):
            return False
    return True


def satisfies_c3(family, ground_size):
    members = member_masks(family)
    for whole in members:
        inside = [point for point in range(ground_size) if whole >> point & 1]
        for x in inside:
            rest = whole & ~(1 << x)
            for y in inside:
                if x == y:
                    continue
                component = 0
                for member in members:
                    if member >> y & 1 and not member & ~rest:
                        component |= member
                if not has(family, whole & ~component):
                    return False
    return True


def satisfies_c4(family, ground_size):
    members = member_masks(family)
    nonempty = [member for member in members if member]
    for first in nonempty:
        for second in nonempty:
            union = first | second
            if not has(family, union):
                continue
            if any(
                has(family, first | 1 << x) and has(family, second | 1 << x)
                for x in range(ground_size) if union >> x & 1
            ):
                continue
            if not any(
                not seam & ~union and (not has(family, seam & first) or not has(family, seam & second))
                for seam in members
            ):
                return False
    return True


CHECKS = {
    'C1': satisfies_c1,
    'C2': satisfies_c2,
    'C3': satisfies_c3,
    'C4': satisfies_c4,
}


def satisfies(family, ground_size, axioms):
    return all(CHECKS[axiom](family, ground_size) for axiom in axioms)


def flimsy_masks(ground_size, n):
    """(required, forbidden): complements of sets smaller than n, and of n-sets."""
    full = full_mask(ground_size)
    required = forbidden = 0
    for removed in range(full + 1):
        size = popcount(removed)
        if size < n:
            required |= 1 << (full & ~removed)
        elif size == n:
            forbidden |= 1 << (full & ~removed)
    return required, forbidden


def is_flimsy(family, ground_size, n):
    if ground_size <= n:
        return False
    required, forbidden = flimsy_masks(ground_size, n)
    return family & required == required and not family & forbidden


def close_under_unions(family, excluded, mask):
    """
    Add mask and every union it forces under C2 (overlapping members).

    Returns the enlarged family, or None when a forced union is excluded.
    The input family must already be closed.
    """
    pending = [mask]
    while pending:
        current = pending.pop()
        if has(family, current):
            continue
        if has(excluded, current):
            return None
        family |= 1 << current
        for member in member_masks(family):
            if member & current and not has(family, member | current):
                pending.append(member | current)
    return family


def to_space(family, ground_size):
    return FiniteConnectivity.from_sets(
        ground_size,
        [[point for point in range(ground_size) if mask >> point & 1] for mask in member_masks(family)],
    )


def from_space(space):
    family = 0
    for mask in space.ordered_members:
        family |= 1 << mask
    return family
