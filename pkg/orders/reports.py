"""
Verdict records shared by every checker in the project.
"""
from dataclasses import dataclass, field
from enum import StrEnum


class Verdict(StrEnum):
    PASS = 'pass'
    FAIL = 'fail'
    VACUOUS = 'vacuous'


@dataclass(frozen=True)
class AxiomReport:
    """
    Outcome of one axiom or lemma check.

    The witness is a JSON-ready mapping (point ids, sorted point lists,
    serialized subsets). It is empty on a plain pass.
    """
    axiom: str
    verdict: Verdict
    witness: dict = field(default_factory=dict)

    @property
    def passed(self):
        return self.verdict is not Verdict.FAIL

    @classmethod
    def ok(cls, axiom, **witness):
        return cls(axiom, Verdict.PASS, dict(witness))

    @classmethod
    def vacuous(cls, axiom, **witness):
        return cls(axiom, Verdict.VACUOUS, dict(witness))

    @classmethod
    def fail(cls, axiom, **witness):
        return cls(axiom, Verdict.FAIL, dict(witness))

    def to_dict(self):
        return {
            'axiom': self.axiom,
            'verdict': self.verdict.value,
            'witness': self.witness,
        }


def first_failure(reports):
    """Return the first failing report of an iterable, or None."""
    for report in reports:
        if not report.passed:
            return report
    return None
