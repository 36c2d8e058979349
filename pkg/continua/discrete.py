"""
Discrete circles: n points in their natural cyclic order, connected sets
being the arcs. A finite testbed that satisfies C1-C4 but is neither T1
nor 2-flimsy.
"""
from dataclasses import dataclass
from functools import cached_property

from connectivity.spaces import FiniteConnectivity
from orders.structures import CyclicOrder, SetFamily

from .exceptions import TooSmall


def arc_masks(n):
    """Bitmasks of the empty set, the whole circle and every proper arc."""
    full = (1 << n) - 1
    masks = {0, full}
    for start in range(n):
        mask = 0
        for length in range(n - 1):
            mask |= 1 << ((start + length) % n)
            masks.add(mask)
    return masks


@dataclass(frozen=True)
class DiscreteCircle:
    n: int

    def __post_init__(self):
        if self.n < 3:
            raise TooSmall(f'A discrete circle needs at least 3 points, got {self.n}')

    @cached_property
    def order(self):
        return CyclicOrder(tuple(range(self.n)))

    @cached_property
    def connectivity(self):
        return FiniteConnectivity(SetFamily(tuple(range(self.n)), frozenset(arc_masks(self.n))))


def discrete_circle(n):
    return DiscreteCircle(n)
