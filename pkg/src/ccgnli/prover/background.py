"""Background axiom schemas instantiated for a problem's signature."""

from __future__ import annotations

from typing import Iterable, Mapping

from ..logic import And, App, Arrow, Cmp, Const, D, E, Eq, Forall, Imp, T, V, Var, apply, rectify, subterms
from ..logic.ops import var_prefix
from ..logic.types import unarrow

# optional schemas a corpus problem may request by name
EVENT_INDIVIDUATION = "event-individuation"
OPTIONAL_SCHEMAS = (EVENT_INDIVIDUATION,)


def signature(formulas: Iterable) -> dict:
    """Constant name to type over all ``formulas``."""
    sig = {}
    for f in formulas:
        for s in subterms(f):
            if isinstance(s, Const):
                sig.setdefault(s.name, s.type)
    return sig


def degree_predicates(sig: Mapping) -> list[str]:
    """Predicates of type <X,<d,t>>: a bearer and a degree."""
    out = []
    for name, ty in sorted(sig.items()):
        args, res = unarrow(ty)
        if res == T and len(args) == 2 and args[1] == D and args[0] != D:
            out.append(name)
    return out


def closure_axiom(name: str, ty, upward: bool = False):
    """Downward (or, for a negative pole, upward) closure along the scale."""
    bearer = unarrow(ty)[0][0]
    x = Var(var_prefix(bearer) + "1", bearer)
    d1, d2 = Var("d1", D), Var("d2", D)
    a = Const(name, ty)
    order = Cmp("<=", d1, d2) if upward else Cmp("<=", d2, d1)
    body = Imp(And(apply(a, x, d1), order), apply(a, x, d2))
    return rectify(Forall(x, Forall(d1, Forall(d2, body))))


def individuation_axiom(name: str):
    """Two events of one kind with the same agent are the same event."""
    p = Const(name, Arrow(V, T))
    subj = Const("subj", Arrow(V, E))
    e1, e2 = Var("e1", V), Var("e2", V)
    body = Imp(And(App(p, e1), And(App(p, e2), Eq(App(subj, e1), App(subj, e2)))), Eq(e1, e2))
    return rectify(Forall(e1, Forall(e2, body)))


def background_axioms(sig: Mapping, negative_poles: Iterable[str] = (),
                      schemas: Iterable[str] = ()) -> list:
    """Scale closure for every degree predicate (``many`` included).

    Negative poles such as ``slow`` are closed upward. ``schemas`` may add
    optional families by name.
    """
    negative = set(negative_poles)
    axioms = [closure_axiom(n, sig[n], upward=n in negative) for n in degree_predicates(sig)]
    schemas = set(schemas)
    unknown = schemas - set(OPTIONAL_SCHEMAS)
    if unknown:
        raise ValueError(f"unknown axiom schema(s): {sorted(unknown)}")
    if EVENT_INDIVIDUATION in schemas and "subj" in sig:
        for name, ty in sorted(sig.items()):
            if ty == Arrow(V, T):
                axioms.append(individuation_axiom(name))
    return axioms


__all__ = [
    "EVENT_INDIVIDUATION",
    "OPTIONAL_SCHEMAS",
    "signature",
    "degree_predicates",
    "closure_axiom",
    "individuation_axiom",
    "background_axioms",
]
