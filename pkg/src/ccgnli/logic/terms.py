"""Typed lambda terms and first-order formulas.

Terms are immutable. A *formula* is a closed, truth-typed term with no
lambda abstraction left in it; the prover only ever sees formulas.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Optional, Union

from .types import D, SemType, T


@dataclass(frozen=True)
class Var:
    name: str
    type: SemType

    def __str__(self) -> str:
        return self.name


@dataclass(frozen=True)
class Const:
    name: str
    type: SemType

    def __str__(self) -> str:
        return self.name


@dataclass(frozen=True)
class Num:
    """Exact rational degree literal, optionally tagged with a unit."""

    value: Fraction
    unit: Optional[str] = None

    def __post_init__(self):
        if not isinstance(self.value, Fraction):
            object.__setattr__(self, "value", Fraction(self.value))

    @property
    def type(self) -> SemType:
        return D


@dataclass(frozen=True)
class Abs:
    var: Var
    body: "Term"


@dataclass(frozen=True)
class App:
    fun: "Term"
    arg: "Term"


@dataclass(frozen=True)
class Not:
    body: "Term"


@dataclass(frozen=True)
class And:
    left: "Term"
    right: "Term"


@dataclass(frozen=True)
class Or:
    left: "Term"
    right: "Term"


@dataclass(frozen=True)
class Imp:
    left: "Term"
    right: "Term"


@dataclass(frozen=True)
class Iff:
    left: "Term"
    right: "Term"


@dataclass(frozen=True)
class Exists:
    var: Var
    body: "Term"


@dataclass(frozen=True)
class Forall:
    var: Var
    body: "Term"


@dataclass(frozen=True)
class Eq:
    left: "Term"
    right: "Term"


@dataclass(frozen=True)
class Cmp:
    op: str  # "<" or "<="
    left: "Term"
    right: "Term"

    def __post_init__(self):
        if self.op not in ("<", "<="):
            raise ValueError(f"unknown comparison {self.op!r}")


Term = Union[Var, Const, Num, Abs, App, Not, And, Or, Imp, Iff, Exists, Forall, Eq, Cmp]

BINARY = (And, Or, Imp, Iff)
QUANTIFIERS = (Exists, Forall)
BINDERS = (Abs, Exists, Forall)

TOP = Const("true", T)
BOTTOM = Const("false", T)


def apply(fun: Term, *args: Term) -> Term:
    for a in args:
        fun = App(fun, a)
    return fun


def unapply(t: Term) -> tuple[Term, list[Term]]:
    """Split ``f(a)(b)`` into ``(f, [a, b])``."""
    args = []
    while isinstance(t, App):
        args.append(t.arg)
        t = t.fun
    return t, args[::-1]


def conj(*parts: Term) -> Term:
    if not parts:
        return TOP
    result = parts[-1]
    for p in reversed(parts[:-1]):
        result = And(p, result)
    return result


def disj(*parts: Term) -> Term:
    if not parts:
        return BOTTOM
    result = parts[-1]
    for p in reversed(parts[:-1]):
        result = Or(p, result)
    return result


def flatten_and(t: Term) -> list[Term]:
    if isinstance(t, And):
        return flatten_and(t.left) + flatten_and(t.right)
    return [t]


def flatten_or(t: Term) -> list[Term]:
    if isinstance(t, Or):
        return flatten_or(t.left) + flatten_or(t.right)
    return [t]


def children(t: Term) -> tuple[Term, ...]:
    if isinstance(t, (Var, Const, Num)):
        return ()
    if isinstance(t, BINDERS):
        return (t.body,)
    if isinstance(t, App):
        return (t.fun, t.arg)
    if isinstance(t, Not):
        return (t.body,)
    return (t.left, t.right)


def subterms(t: Term) -> Iterator[Term]:
    stack = [t]
    while stack:
        s = stack.pop()
        yield s
        stack.extend(reversed(children(s)))


def rebuild(t: Term, kids: tuple[Term, ...]) -> Term:
    """Return ``t`` with its immediate children replaced."""
    if isinstance(t, (Var, Const, Num)):
        return t
    if isinstance(t, BINDERS):
        return type(t)(t.var, kids[0])
    if isinstance(t, App):
        return App(kids[0], kids[1])
    if isinstance(t, Not):
        return Not(kids[0])
    if isinstance(t, Cmp):
        return Cmp(t.op, kids[0], kids[1])
    return type(t)(kids[0], kids[1])


def constants(t: Term) -> set[Const]:
    return {s for s in subterms(t) if isinstance(s, Const)}
