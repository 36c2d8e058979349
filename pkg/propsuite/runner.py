"""
Suite execution, shrinking and replay.

A suite run draws `cases_per_property` cases for every selected property
from that property's own stream, checks them against a model bundle and
records the first failing case. Failing cases are shrunk greedily on their
serialized form, so whatever the report prints replays on its own.
"""
import hashlib
import json
import logging
import platform
from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict, dataclass, field

import django
import rest_framework
from django.conf import settings
from rest_framework import serializers

from .bundles import default_bundle
from .exceptions import GeneratorExhausted, NotFailing, SuiteError
from .generators import CaseStream
from .properties import REGISTRY

logger = logging.getLogger(__name__)

DEFAULT_SEED = 20251018
NOT_SELECTED = 'not selected'


@dataclass(frozen=True)
class SuiteConfig:
    seed: int = DEFAULT_SEED
    cases_per_property: int = 1000
    max_denominator: int = 64
    max_support: int = 8
    max_retries: int = 100
    properties: tuple = ()
    jobs: int = 1
    shrink: bool = True

    def __post_init__(self):
        if isinstance(self.seed, bool) or not isinstance(self.seed, int) or not 0 <= self.seed < 2 ** 64:
            raise SuiteError(f'seed must be a 64-bit unsigned integer, got {self.seed!r}')
        for name in ('cases_per_property', 'max_denominator', 'max_support', 'max_retries', 'jobs'):
            if getattr(self, name) < 1:
                raise SuiteError(f'{name} must be positive, got {getattr(self, name)}')
        object.__setattr__(self, 'properties', tuple(self.properties))

    @classmethod
    def from_settings(cls, **kwargs):
        kwargs.setdefault('seed', getattr(settings, 'FLIMSY_SEED', DEFAULT_SEED))
        kwargs.setdefault('jobs', getattr(settings, 'FLIMSY_JOBS', 1))
        kwargs.setdefault('cases_per_property', getattr(settings, 'SUITE_CASES_PER_PROPERTY', 1000))
        kwargs.setdefault('max_denominator', getattr(settings, 'SUITE_MAX_DENOMINATOR', 64))
        kwargs.setdefault('max_support', getattr(settings, 'SUITE_MAX_SUPPORT', 8))
        kwargs.setdefault('max_retries', getattr(settings, 'SUITE_MAX_RETRIES', 100))
        return cls(**kwargs)

    def to_dict(self):
        data = asdict(self)
        data['properties'] = list(self.properties)
        return data


@dataclass
class PropertyResult:
    id: str
    model: str
    cases_run: int = 0
    failures: int = 0
    counterexample: dict | None = None
    minimal_counterexample: dict | None = None
    witness: dict | None = None
    skipped: str | None = None

    @property
    def passed(self):
        return self.failures == 0

    def to_dict(self):
        data = {
            'id': self.id,
            'model': self.model,
            'cases_run': self.cases_run,
            'failures': self.failures,
        }
        if self.counterexample is not None:
            data['counterexample'] = self.counterexample
            data['minimal_counterexample'] = self.minimal_counterexample
            data['witness'] = self.witness
        if self.skipped:
            data['skipped'] = self.skipped
        return data


@dataclass
class SuiteReport:
    config: SuiteConfig
    bundle: str
    fingerprint: dict
    results: list = field(default_factory=list)

    @property
    def passed(self):
        return all(result.passed for result in self.results)

    def result(self, property_id):
        for result in self.results:
            if result.id == property_id:
                return result
        raise KeyError(property_id)

    def to_dict(self):
        return {
            'seed': self.config.seed,
            'config': self.config.to_dict(),
            'bundle': self.bundle,
            'fingerprint': self.fingerprint,
            'properties': [result.to_dict() for result in sorted(self.results, key=lambda result: result.id)],
            'passed': self.passed,
        }


def fingerprint(registry=REGISTRY):
    listing = json.dumps([prop.to_dict() for prop in registry.select()], sort_keys=True)
    return {
        'python': platform.python_version(),
        'django': django.get_version(),
        'djangorestframework': rest_framework.VERSION,
        'registry': hashlib.sha256(listing.encode()).hexdigest()[:16],
    }


def _check(prop, bundle, case):
    try:
        return prop.check(bundle, **case), None
    except ValueError as e:
        logger.warning(f'{prop.id}: check raised on a generated case: {e}', exc_info=True)
        return None, {'error': f'{type(e).__name__}: {e}'}


def _run_property(prop, config, bundle, registry):
    result = PropertyResult(prop.id, prop.model)
    stream = CaseStream.for_property(config, prop.id)
    for _ in range(config.cases_per_property):
        try:
            case = prop.generate(stream, bundle)
        except GeneratorExhausted as e:
            result.skipped = str(e)
            logger.warning(f'{prop.id}: {e}')
            break
        report, error = _check(prop, bundle, case)
        result.cases_run += 1
        if report is not None and report.passed:
            continue
        result.failures += 1
        if result.counterexample is None:
            result.counterexample = prop.encode(case, bundle)
            result.witness = error or report.to_dict()

    if result.counterexample is not None:
        logger.info(f'{prop.id}: {result.failures}/{result.cases_run} cases failed')
        minimal = result.counterexample
        if config.shrink and 'error' not in result.witness:
            minimal = shrink(result.counterexample, prop.id, bundle, registry=registry)
        result.minimal_counterexample = minimal
    return result


def run_suite(config, bundle=None, registry=REGISTRY):
    """
    Run every selected property and return a SuiteReport.

    Properties not selected by config.properties are listed with a skip
    reason. Results do not depend on config.jobs.
    """
    bundle = bundle or default_bundle()
    selected = registry.select(config.properties)
    selected_ids = {prop.id for prop in selected}
    logger.info(f'Suite seed={config.seed} bundle={bundle.name}: {len(selected)} properties, {config.cases_per_property} cases each')

    def run(prop):
        return _run_property(prop, config, bundle, registry)

    if config.jobs > 1:
        with ThreadPoolExecutor(max_workers=config.jobs) as pool:
            results = list(pool.map(run, selected))
    else:
        results = [run(prop) for prop in selected]

    for prop in registry.select():
        if prop.id not in selected_ids:
            results.append(PropertyResult(prop.id, prop.model, skipped=NOT_SELECTED))

    report = SuiteReport(config, bundle.name, fingerprint(registry), sorted(results, key=lambda result: result.id))
    if not report.passed:
        failing = [result.id for result in report.results if not result.passed]
        logger.info(f'Suite failures: {failing}')
    return report


def _fails(prop, data, bundle):
    try:
        report = prop.check(bundle, **prop.decode(data, bundle))
    except (serializers.ValidationError, ValueError):
        return False
    return not report.passed


def shrink(counterexample, property_id, bundle=None, registry=REGISTRY):
    """
    Greedily simplify a failing serialized case while it keeps failing.

    Fields are visited in declaration order; the first simpler candidate
    that still fails is taken and the pass restarts, until no field has a
    failing simpler candidate.
    """
    bundle = bundle or default_bundle()
    prop = registry.get(property_id)
    if not _fails(prop, counterexample, bundle):
        raise NotFailing(f'{property_id}: the given case does not fail')

    current = dict(counterexample)
    improved = True
    while improved:
        improved = False
        for name, case_field in prop.fields.items():
            for candidate in case_field.simpler(current[name]):
                trial = {**current, name: candidate}
                if _fails(prop, trial, bundle):
                    logger.debug(f'{property_id}: {name} {current[name]!r} -> {candidate!r}')
                    current = trial
                    improved = True
                    break
            if improved:
                break
    return current


def replay(property_id, case, bundle=None, registry=REGISTRY):
    """Check one serialized case of a property."""
    bundle = bundle or default_bundle()
    prop = registry.get(property_id)
    return prop.check(bundle, **prop.decode(case, bundle))
