"""
Enumeration of finite connectivity spaces and the search for n-flimsy ones.

Candidates are families of subsets of {0, ..., g-1}, packed as ints (see
search.families). The membership bits are decided from the largest subset
mask down, "out" before "in", so every walk visits families in increasing
order. The first few undecided bits form the prefix of a work unit; units
are independent and can run in worker processes.

Three pruning modes:

    raw               every family is a candidate, nothing is forced
    definitional      memberships forced by n-flimsiness and by C1/C2,
                      plus incremental closure of members under C2
    theorem-assisted  definitional, and for n = 2 two-point sets are
                      excluded; trusted only after it agrees with the
                      definitional search at a raw-checkable ground size
"""
import logging
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field, replace
from functools import partial
from itertools import combinations

from django.conf import settings

from connectivity.axioms import ALL_AXIOMS, check_axioms, is_n_flimsy
from connectivity.spaces import FiniteConnectivity
from orders.reports import first_failure

from . import families
from .canonical import is_canonical
from .checkpoint import load_checkpoint, save_checkpoint
from .exceptions import BoundExceeded, SearchError, SearchTimeout

logger = logging.getLogger(__name__)

RAW = 'raw'
DEFINITIONAL = 'definitional'
THEOREM_ASSISTED = 'theorem-assisted'
PRUNING_MODES = (RAW, DEFINITIONAL, THEOREM_ASSISTED)

RAW_LIMIT = 4
GUARANTEED_LIMIT = 5
MAX_GROUND_SIZE = 6

PREFIX_BITS = 4
DEADLINE_STRIDE = 1024  # walk steps between clock reads


@dataclass(frozen=True)
class SearchConfig:
    ground_size: int
    flimsy_n: int
    axioms: tuple = ALL_AXIOMS
    pruning: str = DEFINITIONAL
    jobs: int = 1
    budget: float | None = None
    checkpoint: str | None = None
    raw_limit: int = RAW_LIMIT
    guaranteed_limit: int = GUARANTEED_LIMIT
    max_ground_size: int = MAX_GROUND_SIZE

    def __post_init__(self):
        unknown = set(self.axioms) - set(ALL_AXIOMS)
        if unknown:
            raise SearchError(f'Unknown axioms: {sorted(unknown)}')
        object.__setattr__(self, 'axioms', tuple(axiom for axiom in ALL_AXIOMS if axiom in self.axioms))
        if self.ground_size < 1:
            raise SearchError(f'ground_size must be positive, got {self.ground_size}')
        if self.flimsy_n < 1:
            raise SearchError(f'flimsy_n must be positive, got {self.flimsy_n}')
        if self.pruning not in PRUNING_MODES:
            raise SearchError(f'Unknown pruning mode {self.pruning!r}')
        if self.jobs < 1:
            raise SearchError(f'jobs must be positive, got {self.jobs}')
        if self.budget is not None and self.budget <= 0:
            raise SearchError(f'budget must be positive, got {self.budget}')
        if self.ground_size > self.max_ground_size:
            raise BoundExceeded(
                f'Ground size {self.ground_size} exceeds the search bound {self.max_ground_size}'
            )
        if self.pruning == RAW and self.ground_size > self.raw_limit:
            raise BoundExceeded(
                f'Raw enumeration is limited to ground size {self.raw_limit}, got {self.ground_size}'
            )

    @classmethod
    def from_settings(cls, ground_size, flimsy_n, **kwargs):
        kwargs.setdefault('jobs', getattr(settings, 'FLIMSY_JOBS', 1))
        kwargs.setdefault('raw_limit', getattr(settings, 'SEARCH_RAW_LIMIT', RAW_LIMIT))
        kwargs.setdefault('guaranteed_limit', getattr(settings, 'SEARCH_GUARANTEED_LIMIT', GUARANTEED_LIMIT))
        kwargs.setdefault('max_ground_size', getattr(settings, 'SEARCH_MAX_GROUND_SIZE', MAX_GROUND_SIZE))
        return cls(ground_size, flimsy_n, **kwargs)

    @property
    def guaranteed(self):
        return self.ground_size <= self.guaranteed_limit


@dataclass
class SearchResult:
    config: SearchConfig
    examined: int = 0
    checked: int = 0
    found: object = None
    exhausted: bool = False
    pruning_log: list = field(default_factory=list)

    def to_dict(self):
        return {
            'ground_size': self.config.ground_size,
            'flimsy_n': self.config.flimsy_n,
            'axioms': list(self.config.axioms),
            'pruning': self.config.pruning,
            'examined': self.examined,
            'checked': self.checked,
            'exhausted': self.exhausted,
            'found': family_json(self.found),
            'pruning_log': self.pruning_log,
        }


def family_json(space):
    if space is None:
        return None
    return {'n': space.size, 'family': space.members_as_sets()}


def _entry(constraint, justification):
    return {'constraint': constraint, 'justification': justification}


@dataclass(frozen=True)
class SearchPlan:
    """Everything a worker needs to walk a work unit. Picklable."""
    ground_size: int
    axioms: tuple
    closure: bool
    start: int
    excluded: int
    free: tuple
    contradiction: bool = False
    flimsy_n: int | None = None
    flimsy_required: int = 0
    flimsy_forbidden: int = 0

    @property
    def prefix_length(self):
        return min(len(self.free), PREFIX_BITS)

    @property
    def unit_count(self):
        return 1 << self.prefix_length

    @property
    def candidates(self):
        return 1 << len(self.free)

    def accepts(self, family):
        if self.flimsy_n is not None:
            if self.ground_size <= self.flimsy_n:
                return False
            if family & self.flimsy_required != self.flimsy_required or family & self.flimsy_forbidden:
                return False
        return families.satisfies(family, self.ground_size, self.axioms)


def build_plan(ground_size, axioms, flimsy_n=None, pruning=RAW):
    """
    The forced memberships and free bits for a search.

    Returns (plan, pruning_log). Each forced constraint is logged with the
    definition or axiom it follows from.
    """
    all_masks = range(1 << ground_size)
    required = forbidden = 0
    if flimsy_n is not None:
        required, forbidden = families.flimsy_masks(ground_size, flimsy_n)

    log = []
    forced_in = forced_out = 0
    if pruning == RAW:
        log.append(_entry('none', 'raw enumeration: every family of subsets is a candidate'))
    else:
        if flimsy_n is not None:
            forced_in |= required
            forced_out |= forbidden
            log.append(_entry(
                f'X∖S ∈ 𝒞 for |S| < {flimsy_n}',
                f'{flimsy_n}-flimsy: removing fewer than {flimsy_n} points leaves a connected set',
            ))
            log.append(_entry(
                f'X∖S ∉ 𝒞 for |S| = {flimsy_n}',
                f'{flimsy_n}-flimsy: removing exactly {flimsy_n} points disconnects',
            ))
        if 'C2' in axioms:
            forced_in |= 1
            log.append(_entry('∅ ∈ 𝒞', 'C2: the empty union is connected'))
        if 'C1' in axioms:
            for point in range(ground_size):
                forced_in |= 1 << (1 << point)
            log.append(_entry('{x} ∈ 𝒞 for every x', 'C1: points are connected'))
        if pruning == THEOREM_ASSISTED and flimsy_n == 2:
            for first, second in combinations(range(ground_size), 2):
                forced_out |= 1 << (1 << first | 1 << second)
            log.append(_entry(
                '{x, y} ∉ 𝒞 for x ≠ y',
                'a 2-flimsy space is T1: its family is closed under complement, '
                'and the complement of a pair is a co-pair, which is disconnected',
            ))

    closure = pruning != RAW and 'C2' in axioms
    free = tuple(mask for mask in reversed(all_masks) if not (forced_in | forced_out) >> mask & 1)
    plan = SearchPlan(
        ground_size=ground_size,
        axioms=tuple(axioms),
        closure=closure,
        start=0,
        excluded=forced_out,
        free=free,
        flimsy_n=flimsy_n,
        flimsy_required=required,
        flimsy_forbidden=forbidden,
    )
    if forced_in & forced_out:
        log.append(_entry('contradiction', 'a subset is forced both into and out of 𝒞'))
        return replace(plan, contradiction=True), log

    start = 0
    for mask in families.member_masks(forced_in):
        if closure:
            start = families.close_under_unions(start, forced_out, mask)
            if start is None:
                log.append(_entry('contradiction', 'C2 closure of the forced members meets an excluded subset'))
                return replace(plan, contradiction=True), log
        else:
            start |= 1 << mask
    if closure:
        log.append(_entry('closure under overlapping unions', 'C2: members sharing a point have a connected union'))
    return replace(plan, start=start), log


class _OutOfTime(Exception):
    pass


class _Tally:
    __slots__ = ('examined', 'checked', 'steps', 'deadline')

    def __init__(self, deadline=None):
        self.examined = 0
        self.checked = 0
        self.steps = 0
        self.deadline = deadline

    def step(self):
        self.steps += 1
        if self.deadline is not None and self.steps % DEADLINE_STRIDE == 0 and time.time() > self.deadline:
            raise _OutOfTime


def _decide(plan, family, excluded, mask, include):
    if include:
        if plan.closure:
            return families.close_under_unions(family, excluded, mask), excluded
        return family | 1 << mask, excluded
    if families.has(family, mask):
        return None, excluded
    return family, excluded | 1 << mask


def _undecided(family, tail, position):
    return sum(1 for mask in tail[position:] if not families.has(family, mask))


def _descend(plan, family, excluded, tail, position, tally):
    tally.step()
    while position < len(tail) and families.has(family, tail[position]):
        position += 1
    if position == len(tail):
        tally.examined += 1
        tally.checked += 1
        if plan.accepts(family):
            yield family
        return
    mask = tail[position]
    remaining = _undecided(family, tail, position + 1)
    yield from _descend(plan, family, excluded | 1 << mask, tail, position + 1, tally)
    grown, _ = _decide(plan, family, excluded, mask, True)
    if grown is None:
        tally.examined += 1 << remaining
        return
    left = _undecided(grown, tail, position + 1)
    tally.examined += (1 << remaining) - (1 << left)
    yield from _descend(plan, grown, excluded, tail, position + 1, tally)


def walk_unit(plan, index, tally):
    """
    Yield the accepted families of work unit `index` in increasing order.

    Every candidate of the unit is accounted for in tally.examined, either
    as a checked leaf or inside a pruned subtree.
    """
    k = plan.prefix_length
    head, tail = plan.free[:k], plan.free[k:]
    family, excluded = plan.start, plan.excluded
    for position, mask in enumerate(head):
        family, excluded = _decide(plan, family, excluded, mask, index >> (k - 1 - position) & 1)
        if family is None:
            tally.examined += 1 << len(tail)
            return
    tally.examined += (1 << len(tail)) - (1 << _undecided(family, tail, 0))
    yield from _descend(plan, family, excluded, tail, 0, tally)


@dataclass(frozen=True)
class UnitOutcome:
    index: int
    examined: int
    checked: int
    found: int | None = None
    complete: bool = True

    def to_json(self, ground_size):
        found = None if self.found is None else family_json(families.to_space(self.found, ground_size))
        return {'examined': self.examined, 'checked': self.checked, 'found': found}

    @classmethod
    def from_json(cls, index, data):
        found = data.get('found')
        if found is not None:
            found = families.from_space(FiniteConnectivity.from_sets(found['n'], found['family']))
        return cls(index, data['examined'], data['checked'], found)


def run_unit(plan, index, deadline=None):
    """Walk one unit up to its first accepted family."""
    tally = _Tally(deadline)
    try:
        found = next(walk_unit(plan, index, tally), None)
    except _OutOfTime:
        return UnitOutcome(index, tally.examined, tally.checked, complete=False)
    return UnitOutcome(index, tally.examined, tally.checked, found)


def _execute(plan, indices, jobs, deadline):
    if jobs == 1 or len(indices) < 2:
        for index in indices:
            yield run_unit(plan, index, deadline)
        return
    executor = ProcessPoolExecutor(max_workers=jobs)
    try:
        yield from executor.map(partial(run_unit, plan, deadline=deadline), indices)
    finally:
        executor.shutdown(wait=True, cancel_futures=True)


def _replay(space, config):
    reports = check_axioms(space, config.axioms) + [is_n_flimsy(space, config.flimsy_n)]
    failure = first_failure(reports)
    if failure is not None:
        logger.error(f'Found family fails {failure.axiom} on replay: {space.members_as_sets()}')
        raise SearchError(f'Found family fails {failure.axiom} on replay')
    return space


def _search(config):
    plan, log = build_plan(config.ground_size, config.axioms, config.flimsy_n, config.pruning)
    result = SearchResult(config, pruning_log=log)
    if config.ground_size <= config.flimsy_n:
        log.append(_entry(
            'no candidates',
            f'a ground set of {config.ground_size} points cannot lose {config.flimsy_n} points and stay non-empty',
        ))
        result.exhausted = True
        return result
    if plan.contradiction:
        result.exhausted = True
        return result
    if not config.guaranteed:
        logger.warning(
            f'Ground size {config.ground_size} is beyond the guaranteed bound '
            f'{config.guaranteed_limit}; exhaustion is best effort'
        )

    outcomes = {}
    if config.checkpoint:
        outcomes = {
            index: UnitOutcome.from_json(index, unit)
            for index, unit in load_checkpoint(config.checkpoint, config).items()
        }
    pending = [index for index in range(plan.unit_count) if index not in outcomes]
    deadline = time.time() + config.budget if config.budget else None
    logger.info(
        f'Searching ground size {config.ground_size} for {config.flimsy_n}-flimsy families '
        f'({config.pruning}, {len(plan.free)} free bits, {len(pending)}/{plan.unit_count} units pending)'
    )

    source = _execute(plan, pending, config.jobs, deadline)
    try:
        for index in range(plan.unit_count):
            outcome = outcomes.get(index) or next(source)
            result.examined += outcome.examined
            result.checked += outcome.checked
            if not outcome.complete:
                logger.warning(f'Budget exhausted after {result.examined} of {plan.candidates} candidates')
                raise SearchTimeout(
                    f'Budget of {config.budget}s exhausted after {result.examined} of '
                    f'{plan.candidates} candidate families',
                    checkpoint=config.checkpoint,
                    result=result,
                )
            if index not in outcomes:
                outcomes[index] = outcome
                if config.checkpoint:
                    save_checkpoint(
                        config.checkpoint,
                        config,
                        {i: unit.to_json(config.ground_size) for i, unit in outcomes.items()},
                    )
            logger.debug(f'Unit {index}: {outcome.examined} examined, {outcome.checked} checked')
            if outcome.found is not None:
                result.found = _replay(families.to_space(outcome.found, config.ground_size), config)
                logger.info(f'Found {config.flimsy_n}-flimsy family: {result.found.members_as_sets()}')
                break
        else:
            result.exhausted = True
    finally:
        source.close()
    return result


def _cross_check(config):
    size = min(config.ground_size, config.raw_limit)
    base = replace(config, ground_size=size, checkpoint=None, budget=None)
    assisted = _search(replace(base, pruning=THEOREM_ASSISTED))
    definitional = _search(replace(base, pruning=DEFINITIONAL))
    if (assisted.found is None) != (definitional.found is None):
        logger.error(f'Theorem-assisted and definitional searches disagree at ground size {size}')
        raise SearchError(f'Theorem-assisted pruning disagrees with definitional pruning at ground size {size}')
    verdict = 'none' if definitional.found is None else 'some'
    return _entry(
        'cross-check',
        f'theorem-assisted and definitional searches agree at ground size {size} (found={verdict})',
    )


def find_n_flimsy(ground_size, n, config=None, **options):
    """
    Search the families on `ground_size` points for an n-flimsy
    connectivity space satisfying the configured axioms.

    Raises SearchTimeout (carrying the partial result and the checkpoint
    path) when the budget runs out before the space is exhausted.
    """
    if config is None:
        config = SearchConfig(ground_size, n, **options)
    else:
        config = replace(config, ground_size=ground_size, flimsy_n=n, **options)
    check = None
    if config.pruning == THEOREM_ASSISTED:
        check = _cross_check(config)
    result = _search(config)
    if check is not None:
        result.pruning_log.append(check)
    return result


def enumerate_spaces(ground_size, axioms=ALL_AXIOMS, pruning=False, canonical=False,
                     raw_limit=RAW_LIMIT, pruned_limit=GUARANTEED_LIMIT):
    """
    Yield every FiniteConnectivity on `ground_size` points passing `axioms`,
    in increasing order of the packed family.

    Raw enumeration tries all 2^(2^g) families; pruned enumeration forces
    the empty set and points and closes under C2 while walking. With
    canonical=True only the least relabelling of each family is yielded.
    """
    unknown = set(axioms) - set(ALL_AXIOMS)
    if unknown:
        raise SearchError(f'Unknown axioms: {sorted(unknown)}')
    if not pruning and ground_size > raw_limit:
        raise BoundExceeded(f'Raw enumeration is limited to ground size {raw_limit}, got {ground_size}')
    if pruning and ground_size > pruned_limit:
        raise BoundExceeded(f'Pruned enumeration is limited to ground size {pruned_limit}, got {ground_size}')
    axioms = tuple(axiom for axiom in ALL_AXIOMS if axiom in axioms)
    plan, _ = build_plan(ground_size, axioms, pruning=DEFINITIONAL if pruning else RAW)
    if plan.contradiction:
        return
    for index in range(plan.unit_count):
        for family in walk_unit(plan, index, _Tally()):
            space = families.to_space(family, ground_size)
            if canonical and not is_canonical(space):
                continue
            yield space


def count_spaces(ground_size, axioms=ALL_AXIOMS, pruning=False, canonical=False):
    return sum(1 for _ in enumerate_spaces(ground_size, axioms, pruning=pruning, canonical=canonical))
