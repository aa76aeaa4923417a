"""Composition of derivation trees into closed first-order formulas."""

from __future__ import annotations

from ..ccg.category import Atom, Slash
from ..ccg.tree import DM, DerivTree, Leaf, Node
from ..logic import (
    Abs,
    App,
    Const,
    D,
    Exists,
    Not,
    T,
    V,
    Var,
    beta_normalize,
    rectify,
    simplify_truth,
    type_of,
)
from ..logic.ops import TypeMismatch, fresh_name, free_vars
from ..logic.terms import TOP, And, children, conj, flatten_and, rebuild, subterms
from ..logic.types import Arrow
from .templates import MANY_HOLE, NoTemplate, TemplateBank, instantiate, lookup_template, semantic_type

# pseudo-lemmas naming the unary-rule templates
LEX_RULE = "<lex>"
POSITIVE = "<positive>"


def interpret(tree: DerivTree, bank: TemplateBank):
    """Lambda term for ``tree``, typed by ``semantic_type`` of its category."""
    if isinstance(tree, Leaf):
        template = lookup_template(bank, tree.category, tree.lemma, tree.pos)
        return instantiate(template, tree.lemma, bank)
    left = interpret(tree.left, bank)
    if tree.rule == "fa":
        term = App(left, interpret(tree.right, bank))
    elif tree.rule == "ba":
        term = App(interpret(tree.right, bank), left)
    elif tree.rule in ("fc", "bc"):
        right = interpret(tree.right, bank)
        f, g = (left, right) if tree.rule == "fc" else (right, left)
        arg_type = type_of(g).dom
        z = Var(fresh_name("z", {v.name for v in free_vars(f) | free_vars(g)}), arg_type)
        term = Abs(z, App(f, App(g, z)))
    elif tree.rule in ("ftr", "btr"):
        fun_type = semantic_type(tree.category).dom
        p = Var(fresh_name("F", {v.name for v in free_vars(left)}), fun_type)
        term = Abs(p, App(p, left))
    elif tree.rule == "lex":
        child = tree.left.category
        if isinstance(child, Atom) and child.name == "N":
            term = App(_rule_term(bank, Slash("/", tree.category, child), LEX_RULE), left)
        else:  # X\DM => X: the positive degree form
            term = App(left, _rule_term(bank, DM, POSITIVE))
    else:
        raise ValueError(f"unknown rule {tree.rule!r}")
    term = beta_normalize(term)
    expected = semantic_type(tree.category)
    actual = type_of(term)
    if actual != expected:
        raise TypeMismatch(term, expected, actual)
    return term


def _rule_term(bank, category, pseudo_lemma):
    template = lookup_template(bank, category, pseudo_lemma, None)
    return template.body


def lift_event_quantifiers(f):
    """``∃e1(A ∧ ∃e2 B)`` becomes ``∃e1∃e2(A ∧ B)`` for event variables.

    Assumes ``f`` is rectified, so pulling a binder outward cannot capture.
    """
    kids = children(f)
    if kids:
        f = rebuild(f, tuple(lift_event_quantifiers(k) for k in kids))
    if not (isinstance(f, Exists) and f.var.type == V):
        return f
    parts = flatten_and(f.body)
    last = parts[-1]
    if len(parts) < 2 or not (isinstance(last, Exists) and last.var.type == V):
        return f
    inner_vars = []
    while isinstance(last, Exists) and last.var.type == V:
        inner_vars.append(last.var)
        last = last.body
    body = conj(*parts[:-1], *flatten_and(last))
    for v in reversed(inner_vars):
        body = Exists(v, body)
    return Exists(f.var, body)


def resolve_many_thresholds(f, bank: TemplateBank):
    """Replace the ``many`` threshold hole by the restrictor noun's constant."""
    if MANY_HOLE not in set(subterms(f)):
        return f
    nouns: dict[str, str] = {}
    for s in subterms(f):
        if (isinstance(s, App) and isinstance(s.fun, Const) and isinstance(s.arg, Var)
                and s.fun.type == Arrow(s.arg.type, T) and s.fun.name != "many"):
            nouns.setdefault(s.arg.name, s.fun.name)

    def go(t):
        if isinstance(t, App) and isinstance(t.fun, App) and t.arg == MANY_HOLE \
                and isinstance(t.fun.fun, Const) and t.fun.fun.name == "many":
            x = t.fun.arg
            noun = nouns.get(x.name) if isinstance(x, Var) else None
            scale = (bank.scale_of_predicate(noun) or noun) if noun else None
            name = f"th_many_{scale}" if scale else "th_many"
            return App(t.fun, Const(name, D))
        kids = children(t)
        return rebuild(t, tuple(go(k) for k in kids)) if kids else t

    return go(f)


def right_nest(f):
    """Re-associate every conjunction chain to the right."""
    kids = children(f)
    if not kids:
        return f
    if isinstance(f, And):
        return conj(*(right_nest(p) for p in flatten_and(f)))
    return rebuild(f, tuple(right_nest(k) for k in kids))


def close(term):
    """Sentence closure: feed a trivial continuation to an event quantifier."""
    if type_of(term) == T:
        return term
    e = Var("e", V)
    return beta_normalize(App(term, Abs(e, TOP)))


def compose(tree: DerivTree, bank: TemplateBank):
    """Closed, beta-normal, rectified formula for a sentence derivation."""
    f = close(interpret(tree, bank))
    f = simplify_truth(f)
    f = lift_event_quantifiers(rectify(f))
    f = resolve_many_thresholds(f, bank)
    f = rectify(right_nest(f))
    actual = type_of(f)
    if actual != T:
        raise TypeMismatch(f, T, actual)
    return f


def negate(f):
    return rectify(Not(f))


__all__ = [
    "compose",
    "interpret",
    "negate",
    "close",
    "right_nest",
    "lift_event_quantifiers",
    "resolve_many_thresholds",
    "NoTemplate",
    "LEX_RULE",
    "POSITIVE",
]
