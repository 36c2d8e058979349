"""
The model objects a suite run checks properties against.

Fault injection swaps one of them for a deliberately broken variant (see
propsuite.faults) without touching the properties themselves.
"""
from dataclasses import dataclass
from typing import Any, Callable

from continua.bigcircle import big_circle
from continua.lexico import lex_midpoint
from continua.rational import rational_circle


@dataclass(frozen=True)
class ModelBundle:
    name: str
    rational_circle: Any
    big_circle: Any
    midpoint: Callable = lex_midpoint


def default_bundle():
    return ModelBundle('exact', rational_circle(), big_circle())
