"""Semantic types: entities, events, degrees, truth values and arrows."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union


@dataclass(frozen=True)
class BaseType:
    name: str

    def __str__(self) -> str:
        return self.name


@dataclass(frozen=True)
class Arrow:
    dom: "SemType"
    cod: "SemType"

    def __str__(self) -> str:
        return f"<{self.dom},{self.cod}>"


SemType = Union[BaseType, Arrow]

E = BaseType("e")  # entity
V = BaseType("v")  # event
D = BaseType("d")  # degree
T = BaseType("t")  # truth value

BASE_TYPES = {"e": E, "v": V, "d": D, "t": T}


def arrow(*types: SemType) -> SemType:
    """Right-nested arrow: ``arrow(e, d, t)`` is ``<e,<d,t>>``."""
    if not types:
        raise ValueError("arrow() needs at least one type")
    result = types[-1]
    for t in reversed(types[:-1]):
        result = Arrow(t, result)
    return result


def unarrow(t: SemType) -> tuple[list[SemType], SemType]:
    """Split ``<a,<b,c>>`` into ``([a, b], c)``."""
    args = []
    while isinstance(t, Arrow):
        args.append(t.dom)
        t = t.cod
    return args, t


def is_predicate_type(t: SemType) -> bool:
    args, res = unarrow(t)
    return res == T and all(isinstance(a, BaseType) for a in args)
