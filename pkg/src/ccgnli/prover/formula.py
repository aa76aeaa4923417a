"""Prover-internal formulas: negation normal form over plain tuples.

Terms::

    ('v', name, sort)          bound variable
    ('c', name, sort)          constant or Skolem constant
    ('n', value, unit)         rational literal, sort 'd'
    ('f', name, args, sort)    function application such as subj(e1)

Formulas::

    ('true',) ('false',)
    ('atom', pred, args)   ('eq', a, b)   ('lt', a, b)   ('le', a, b)
    ('not', atom-or-eq)
    ('and', parts) ('or', parts)
    ('all', vars, body) ('ex', vars, body)

Sorts are 'e' (entity), 'v' (event), 'd' (degree) and 't' (truth value).
"""

from __future__ import annotations

from ..logic import (
    Abs,
    And,
    App,
    Cmp,
    Const,
    Eq,
    Exists,
    Forall,
    Iff,
    Imp,
    Not,
    Num,
    Or,
    Var,
    unapply,
)
from ..logic.ops import LogicError
from ..logic.syntax import format_num
from ..logic.terms import BOTTOM, TOP
from ..logic.types import D, E, T, V

_SORTS = {E: "e", V: "v", D: "d", T: "t"}

TRUE = ("true",)
FALSE = ("false",)


def sort_of_type(ty) -> str:
    if ty not in _SORTS:
        raise LogicError(f"no first-order sort for {ty}")
    return _SORTS[ty]


def term_sort(t) -> str:
    if t[0] == "n":
        return "d"
    return t[-1]


def convert_term(t):
    if isinstance(t, Var):
        return ("v", t.name, sort_of_type(t.type))
    if isinstance(t, Const):
        return ("c", t.name, sort_of_type(t.type))
    if isinstance(t, Num):
        return ("n", t.value, t.unit)
    if isinstance(t, App):
        head, args = unapply(t)
        if isinstance(head, Const):
            res = head.type
            for _ in args:
                res = res.cod
            return ("f", head.name, tuple(convert_term(a) for a in args), sort_of_type(res))
    raise LogicError(f"not a first-order term: {t!r}")


def nnf(t, positive: bool = True):
    """Negation normal form of a closed first-order Term."""
    if t == TOP or t == BOTTOM:
        return TRUE if (t == TOP) == positive else FALSE
    if isinstance(t, Not):
        return nnf(t.body, not positive)
    if isinstance(t, (And, Or)):
        is_and = isinstance(t, And) == positive
        return _junction("and" if is_and else "or", [nnf(t.left, positive), nnf(t.right, positive)])
    if isinstance(t, Imp):
        if positive:
            return _junction("or", [nnf(t.left, False), nnf(t.right, True)])
        return _junction("and", [nnf(t.left, True), nnf(t.right, False)])
    if isinstance(t, Iff):
        a, b = t.left, t.right
        if positive:
            return _junction("and", [
                _junction("or", [nnf(a, False), nnf(b, True)]),
                _junction("or", [nnf(a, True), nnf(b, False)]),
            ])
        return _junction("and", [
            _junction("or", [nnf(a, True), nnf(b, True)]),
            _junction("or", [nnf(a, False), nnf(b, False)]),
        ])
    if isinstance(t, (Exists, Forall)):
        kind = "ex" if isinstance(t, Exists) == positive else "all"
        var = convert_term(t.var)
        body = nnf(t.body, positive)
        if body[0] == kind:
            return (kind, (var,) + body[1], body[2])
        return (kind, (var,), body)
    if isinstance(t, Eq):
        lit = ("eq", convert_term(t.left), convert_term(t.right))
        return lit if positive else ("not", lit)
    if isinstance(t, Cmp):
        a, b = convert_term(t.left), convert_term(t.right)
        if t.op == "<":
            return ("lt", a, b) if positive else ("le", b, a)
        return ("le", a, b) if positive else ("lt", b, a)
    if isinstance(t, (App, Const)):
        head, args = unapply(t)
        if not isinstance(head, Const):
            raise LogicError(f"higher-order application in formula: {t!r}")
        atom = ("atom", head.name, tuple(convert_term(a) for a in args))
        return atom if positive else ("not", atom)
    if isinstance(t, Abs):
        raise LogicError("lambda abstraction in formula")
    raise LogicError(f"not a formula: {t!r}")


def _junction(kind, parts):
    unit, zero = (TRUE, FALSE) if kind == "and" else (FALSE, TRUE)
    out = []
    for p in parts:
        if p == zero:
            return zero
        if p == unit:
            continue
        if p[0] == kind:
            out.extend(p[1])
        else:
            out.append(p)
    if not out:
        return unit
    if len(out) == 1:
        return out[0]
    return (kind, tuple(out))


def negate(f):
    """NNF negation of an NNF formula."""
    tag = f[0]
    if tag == "true":
        return FALSE
    if tag == "false":
        return TRUE
    if tag in ("atom", "eq"):
        return ("not", f)
    if tag == "not":
        return f[1]
    if tag == "lt":
        return ("le", f[2], f[1])
    if tag == "le":
        return ("lt", f[2], f[1])
    if tag == "and":
        return _junction("or", [negate(p) for p in f[1]])
    if tag == "or":
        return _junction("and", [negate(p) for p in f[1]])
    if tag == "all":
        return ("ex", f[1], negate(f[2]))
    return ("all", f[1], negate(f[2]))


def subst_term(t, env):
    tag = t[0]
    if tag == "v":
        return env.get(t, t)
    if tag == "f":
        return ("f", t[1], tuple(subst_term(a, env) for a in t[2]), t[3])
    return t


def subst(f, env):
    """Replace variables (keys of ``env``) by ground terms."""
    tag = f[0]
    if tag in ("true", "false"):
        return f
    if tag == "atom":
        return ("atom", f[1], tuple(subst_term(a, env) for a in f[2]))
    if tag in ("eq", "lt", "le"):
        return (tag, subst_term(f[1], env), subst_term(f[2], env))
    if tag == "not":
        return ("not", subst(f[1], env))
    if tag in ("and", "or"):
        return (tag, tuple(subst(p, env) for p in f[1]))
    inner = {k: v for k, v in env.items() if k not in f[1]}
    return (tag, f[1], subst(f[2], inner))


def is_literal(f) -> bool:
    return f[0] in ("atom", "eq", "lt", "le", "not", "true", "false")


def ground_terms(f, acc=None) -> set:
    """Ground subterms occurring in ``f``."""
    acc = set() if acc is None else acc

    def term(t):
        if t[0] == "v":
            return False
        if t[0] == "f":
            ok = all([term(a) for a in t[2]])
            if ok:
                acc.add(t)
            return ok
        acc.add(t)
        return True

    tag = f[0]
    if tag == "atom":
        for a in f[2]:
            term(a)
    elif tag in ("eq", "lt", "le"):
        term(f[1])
        term(f[2])
    elif tag == "not":
        ground_terms(f[1], acc)
    elif tag in ("and", "or"):
        for p in f[1]:
            ground_terms(p, acc)
    elif tag in ("all", "ex"):
        ground_terms(f[2], acc)
    return acc


def show_term(t) -> str:
    tag = t[0]
    if tag in ("v", "c"):
        return t[1]
    if tag == "n":
        return format_num(Num(t[1], t[2]))
    return f"{t[1]}({', '.join(show_term(a) for a in t[2])})"


def show(f) -> str:
    """Readable rendering used in proof traces."""
    tag = f[0]
    if tag in ("true", "false"):
        return tag
    if tag == "atom":
        return f[1] if not f[2] else f"{f[1]}({', '.join(show_term(a) for a in f[2])})"
    if tag in ("eq", "lt", "le"):
        op = {"eq": "=", "lt": "<", "le": "<="}[tag]
        return f"{show_term(f[1])} {op} {show_term(f[2])}"
    if tag == "not":
        inner = f[1]
        if inner[0] == "eq":
            return f"{show_term(inner[1])} != {show_term(inner[2])}"
        return "-" + show(inner)
    if tag in ("and", "or"):
        op = " & " if tag == "and" else " | "
        return "(" + op.join(show(p) for p in f[1]) + ")"
    word = "forall" if tag == "all" else "exists"
    return f"{word} {' '.join(v[1] for v in f[1])}.{show(f[2])}"
