"""Typing, substitution, reduction and comparison of terms."""

from __future__ import annotations

import itertools
from functools import lru_cache
from typing import Mapping, Optional

from .terms import (
    BINARY,
    BINDERS,
    TOP,
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
    Term,
    Var,
    children,
    rebuild,
    subterms,
)
from .types import D, E, V, Arrow, BaseType, SemType, T


class LogicError(Exception):
    pass


class TypeMismatch(LogicError):
    def __init__(self, subterm, expected, actual):
        self.subterm = subterm
        self.expected = expected
        self.actual = actual
        super().__init__(f"type mismatch in {subterm!r}: expected {expected}, got {actual}")


class UnboundVariable(LogicError):
    def __init__(self, name):
        self.name = name
        super().__init__(f"unbound variable {name!r}")


class UnitMismatch(LogicError):
    pass


# --------------------------------------------------------------------------
# typing

def type_of(t: Term, env: Optional[Mapping[str, SemType]] = None) -> SemType:
    """Return the type of ``t``.

    ``env`` maps free variable names to types. When omitted, free variables
    are trusted to carry their own annotation.
    """
    return _type_of(t, dict(env) if env is not None else None, {})


def _type_of(t, env, bound):
    if isinstance(t, Var):
        if t.name in bound:
            declared = bound[t.name]
        elif env is None:
            declared = t.type
        elif t.name in env:
            declared = env[t.name]
        else:
            raise UnboundVariable(t.name)
        if declared != t.type:
            raise TypeMismatch(t, declared, t.type)
        return t.type
    if isinstance(t, (Const, Num)):
        return t.type
    if isinstance(t, Abs):
        inner = dict(bound)
        inner[t.var.name] = t.var.type
        return Arrow(t.var.type, _type_of(t.body, env, inner))
    if isinstance(t, App):
        ft = _type_of(t.fun, env, bound)
        at = _type_of(t.arg, env, bound)
        if not isinstance(ft, Arrow):
            raise TypeMismatch(t.fun, Arrow(at, T), ft)
        if ft.dom != at:
            raise TypeMismatch(t.arg, ft.dom, at)
        return ft.cod
    if isinstance(t, (Exists, Forall)):
        inner = dict(bound)
        inner[t.var.name] = t.var.type
        _expect(t.body, T, env, inner)
        return T
    if isinstance(t, Not):
        _expect(t.body, T, env, bound)
        return T
    if isinstance(t, BINARY):
        _expect(t.left, T, env, bound)
        _expect(t.right, T, env, bound)
        return T
    if isinstance(t, Eq):
        lt = _type_of(t.left, env, bound)
        _expect(t.right, lt, env, bound)
        return T
    if isinstance(t, Cmp):
        _expect(t.left, D, env, bound)
        _expect(t.right, D, env, bound)
        if isinstance(t.left, Num) and isinstance(t.right, Num):
            if t.left.unit and t.right.unit and t.left.unit != t.right.unit:
                raise UnitMismatch(f"cannot compare {t.left.unit} with {t.right.unit}")
        return T
    raise TypeError(f"not a term: {t!r}")


def _expect(t, expected, env, bound):
    actual = _type_of(t, env, bound)
    if actual != expected:
        raise TypeMismatch(t, expected, actual)


# --------------------------------------------------------------------------
# variables

@lru_cache(maxsize=65536)
def free_vars(t: Term) -> frozenset:
    if isinstance(t, Var):
        return frozenset([t])
    if isinstance(t, (Const, Num)):
        return frozenset()
    if isinstance(t, BINDERS):
        return frozenset(v for v in free_vars(t.body) if v.name != t.var.name)
    result = frozenset()
    for c in children(t):
        result |= free_vars(c)
    return result


def _names(t: Term) -> set[str]:
    out = set()
    for s in subterms(t):
        if isinstance(s, (Var, Const)):
            out.add(s.name)
        elif isinstance(s, BINDERS):
            out.add(s.var.name)
    return out


def fresh_name(base: str, avoid) -> str:
    stem = base.rstrip("0123456789'") or "v"
    if base not in avoid:
        return base
    for i in itertools.count(1):
        cand = f"{stem}{i}"
        if cand not in avoid:
            return cand


def substitute(t: Term, x: Var, s: Term) -> Term:
    """Capture-avoiding substitution ``t[x := s]``."""
    if x not in free_vars(t):
        return t
    return _subst(t, x, s, {v.name for v in free_vars(s)})


def _subst(t, x, s, s_free):
    if isinstance(t, Var):
        return s if t.name == x.name else t
    if isinstance(t, (Const, Num)):
        return t
    if isinstance(t, BINDERS):
        if t.var.name == x.name:
            return t
        if x not in free_vars(t.body):
            return t
        var, body = t.var, t.body
        if var.name in s_free:
            avoid = s_free | _names(body) | {x.name}
            new = Var(fresh_name(var.name, avoid), var.type)
            body = _subst(body, var, new, {new.name})
            var = new
        return type(t)(var, _subst(body, x, s, s_free))
    return rebuild(t, tuple(_subst(c, x, s, s_free) for c in children(t)))


# --------------------------------------------------------------------------
# reduction

def beta_normalize(t: Term) -> Term:
    """Full beta normal form (terminates on simply-typed terms)."""
    return _norm(t)


@lru_cache(maxsize=65536)
def _norm(t):
    if isinstance(t, (Var, Const, Num)):
        return t
    if isinstance(t, App):
        fun = _norm(t.fun)
        if isinstance(fun, Abs):
            return _norm(substitute(fun.body, fun.var, t.arg))
        return App(fun, _norm(t.arg))
    return rebuild(t, tuple(_norm(c) for c in children(t)))


def beta_step_leftmost(t: Term) -> Optional[Term]:
    """One leftmost-outermost beta step, or None when ``t`` is normal."""
    if isinstance(t, App) and isinstance(t.fun, Abs):
        return substitute(t.fun.body, t.fun.var, t.arg)
    kids = children(t)
    for i, c in enumerate(kids):
        r = beta_step_leftmost(c)
        if r is not None:
            return rebuild(t, kids[:i] + (r,) + kids[i + 1:])
    return None


def beta_step_innermost(t: Term) -> Optional[Term]:
    """One rightmost-innermost beta step, or None when ``t`` is normal."""
    kids = children(t)
    for i in reversed(range(len(kids))):
        r = beta_step_innermost(kids[i])
        if r is not None:
            return rebuild(t, kids[:i] + (r,) + kids[i + 1:])
    if isinstance(t, App) and isinstance(t.fun, Abs):
        return substitute(t.fun.body, t.fun.var, t.arg)
    return None


def is_beta_normal(t: Term) -> bool:
    return not any(isinstance(s, App) and isinstance(s.fun, Abs) for s in subterms(t))


# --------------------------------------------------------------------------
# comparison

def alpha_equal(a: Term, b: Term) -> bool:
    """Structural equality up to renaming of bound variables."""
    return _aeq(a, b, {}, {}, 0)


def _aeq(a, b, ea, eb, depth):
    if type(a) is not type(b):
        return False
    if isinstance(a, Var):
        ia, ib = ea.get(a.name), eb.get(b.name)
        if ia is None and ib is None:
            return a == b
        return ia == ib and a.type == b.type
    if isinstance(a, (Const, Num)):
        return a == b
    if isinstance(a, BINDERS):
        if a.var.type != b.var.type:
            return False
        na, nb = dict(ea), dict(eb)
        na[a.var.name] = depth
        nb[b.var.name] = depth
        return _aeq(a.body, b.body, na, nb, depth + 1)
    if isinstance(a, Cmp) and a.op != b.op:
        return False
    ka, kb = children(a), children(b)
    return all(_aeq(x, y, ea, eb, depth) for x, y in zip(ka, kb))


# --------------------------------------------------------------------------
# normal-form helpers

_PREFIX = {E: "x", V: "e", D: "d", T: "p"}


def var_prefix(t: SemType) -> str:
    if isinstance(t, BaseType):
        return _PREFIX[t]
    return "F"


def rectify(t: Term) -> Term:
    """Rename every bound variable to a unique name (x1, e1, d1, ...)."""
    taken = {v.name for v in free_vars(t)} | {c.name for c in subterms(t) if isinstance(c, Const)}
    counters: dict[str, int] = {}

    def fresh(var):
        p = var_prefix(var.type)
        while True:
            counters[p] = counters.get(p, 0) + 1
            name = f"{p}{counters[p]}"
            if name not in taken:
                taken.add(name)
                return Var(name, var.type)

    def go(s, ren):
        if isinstance(s, Var):
            return ren.get(s.name, s)
        if isinstance(s, (Const, Num)):
            return s
        if isinstance(s, BINDERS):
            new = fresh(s.var)
            inner = dict(ren)
            inner[s.var.name] = new
            return type(s)(new, go(s.body, inner))
        return rebuild(s, tuple(go(c, ren) for c in children(s)))

    return go(t, {})


def is_rectified(t: Term) -> bool:
    seen = set()
    free = {v.name for v in free_vars(t)}
    for s in subterms(t):
        if isinstance(s, BINDERS):
            if s.var.name in seen or s.var.name in free:
                return False
            seen.add(s.var.name)
    return True


def simplify_truth(t: Term) -> Term:
    """Drop ``true`` conjuncts introduced by sentence closure."""
    if isinstance(t, (Var, Const, Num)):
        return t
    t = rebuild(t, tuple(simplify_truth(c) for c in children(t)))
    if isinstance(t, And):
        if t.left == TOP:
            return t.right
        if t.right == TOP:
            return t.left
    return t


def is_formula(t: Term) -> bool:
    """Closed, truth-typed and free of lambda abstraction."""
    if free_vars(t):
        return False
    if any(isinstance(s, Abs) for s in subterms(t)):
        return False
    try:
        return type_of(t) == T
    except LogicError:
        return False


def count_nodes(t: Term, kind) -> int:
    return sum(1 for s in subterms(t) if isinstance(s, kind))
