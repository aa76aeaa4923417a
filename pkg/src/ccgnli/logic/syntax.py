"""Canonical text form of terms, with a printer and an inferring parser.

Syntax::

    exists e.(run(e) & subj(e) = john)     quantifiers bind one variable
    forall x d.(boy(x) -> d < 12)          several binders share a prefix
    \\N:<e,t>.\\x.(N(x) & tall(x, th_tall))  lambda, with optional type
    -p  p & q  p | q  p -> q  p <-> q       connectives, tightest first
    5  5/2  5#feet                          rational degree literals

Bound variables without an annotation are typed by their first letter
(x/y/z entity, e event, d degree, p truth value). Constant types are
inferred from use, seeded by an optional signature.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Optional

from .ops import LogicError
from .terms import (
    BINDERS,
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
    unapply,
)
from .types import BASE_TYPES, D, E, V, Arrow, BaseType, SemType, T


class ParseError(LogicError):
    def __init__(self, message, position=None):
        self.position = position
        where = f" at position {position}" if position is not None else ""
        super().__init__(f"{message}{where}")


DEFAULT_SIGNATURE: dict[str, SemType] = {
    "subj": Arrow(V, E),
    "acc": Arrow(V, E),
    "dat": Arrow(V, E),
    "many": Arrow(E, Arrow(D, T)),
    "true": T,
    "false": T,
}

_CONVENTION = {"x": E, "y": E, "z": E, "e": V, "d": D, "p": T}


def conventional_type(name: str) -> Optional[SemType]:
    return _CONVENTION.get(name[:1])


# --------------------------------------------------------------------------
# printing

_PREC = {Iff: 1, Imp: 2, Or: 3, And: 4}
_OPS = {Iff: "<->", Imp: "->", Or: "|", And: "&"}


def format_type(t: SemType) -> str:
    return str(t)


def format_num(n: Num) -> str:
    v = n.value
    s = str(v.numerator) if v.denominator == 1 else f"{v.numerator}/{v.denominator}"
    return f"{s}#{n.unit}" if n.unit else s


def to_text(t: Term) -> str:
    """Render ``t`` in the canonical serialization."""
    return _fmt(t)


def _prec(t) -> int:
    return _PREC.get(type(t), 5)


def _binder(var: Var) -> str:
    if conventional_type(var.name) == var.type:
        return var.name
    return f"{var.name}:{format_type(var.type)}"


def _fmt(t) -> str:
    if isinstance(t, (Var, Const)):
        return t.name
    if isinstance(t, Num):
        return format_num(t)
    if isinstance(t, App):
        head, args = unapply(t)
        h = _fmt(head) if isinstance(head, (Var, Const)) else f"({_fmt(head)})"
        return f"{h}({', '.join(_fmt(a) for a in args)})"
    if isinstance(t, Not):
        return "-" + _fmt_unary(t.body)
    if isinstance(t, BINDERS):
        word = {Abs: "\\", Exists: "exists ", Forall: "forall "}[type(t)]
        return f"{word}{_binder(t.var)}.{_fmt_unary(t.body)}"
    if isinstance(t, (Eq, Cmp)):
        op = "=" if isinstance(t, Eq) else t.op
        return f"{_fmt_operand(t.left)} {op} {_fmt_operand(t.right)}"
    p = _PREC[type(t)]
    left, right = _fmt(t.left), _fmt(t.right)
    if isinstance(t, Iff):
        lp, rp = _prec(t.left) <= p, _prec(t.right) <= p
    else:
        lp, rp = _prec(t.left) <= p, _prec(t.right) < p
    if lp:
        left = f"({left})"
    if rp:
        right = f"({right})"
    return f"{left} {_OPS[type(t)]} {right}"


def _fmt_unary(t) -> str:
    if isinstance(t, (And, Or, Imp, Iff)):
        return f"({_fmt(t)})"
    return _fmt(t)


def _fmt_operand(t) -> str:
    if isinstance(t, (Var, Const, Num, App)):
        return _fmt(t)
    return f"({_fmt(t)})"


# --------------------------------------------------------------------------
# lexing

_TOKEN = re.compile(
    r"\s*(?:"
    r"(?P<num>\d+(?:/\d+|\.\d+)?)"
    r"|(?P<name>[A-Za-z_%][A-Za-z0-9_']*)"
    r"|(?P<op><->|->|<=|[()<>,.:=&|\-\\#])"
    r")"
)


@dataclass
class _Tok:
    kind: str
    text: str
    pos: int


def _lex(text: str) -> list[_Tok]:
    out, i = [], 0
    text = text.rstrip()
    while i < len(text):
        m = _TOKEN.match(text, i)
        if not m or m.end() == i:
            raise ParseError(f"unexpected character {text[i]!r}", i)
        kind = m.lastgroup
        out.append(_Tok(kind, m.group(kind), m.start(kind)))
        i = m.end()
    out.append(_Tok("eof", "", len(text)))
    return out


# --------------------------------------------------------------------------
# type inference

@dataclass(frozen=True)
class _TVar:
    id: int


class _Unifier:
    def __init__(self):
        self.subst: dict[int, object] = {}
        self._ids = itertools.count()

    def fresh(self):
        return _TVar(next(self._ids))

    def walk(self, t):
        while isinstance(t, _TVar) and t.id in self.subst:
            t = self.subst[t.id]
        return t

    def resolve(self, t):
        t = self.walk(t)
        if isinstance(t, Arrow):
            return Arrow(self.resolve(t.dom), self.resolve(t.cod))
        return t

    def occurs(self, v, t):
        t = self.walk(t)
        if t == v:
            return True
        if isinstance(t, Arrow):
            return self.occurs(v, t.dom) or self.occurs(v, t.cod)
        return False

    def unify(self, a, b, where):
        a, b = self.walk(a), self.walk(b)
        if a == b:
            return
        if isinstance(a, _TVar):
            if self.occurs(a, b):
                raise ParseError("recursive type", where)
            self.subst[a.id] = b
        elif isinstance(b, _TVar):
            self.unify(b, a, where)
        elif isinstance(a, Arrow) and isinstance(b, Arrow):
            self.unify(a.dom, b.dom, where)
            self.unify(a.cod, b.cod, where)
        else:
            raise ParseError(f"cannot unify {self.resolve(a)} with {self.resolve(b)}", where)


def _concrete(t) -> bool:
    if isinstance(t, _TVar):
        return False
    if isinstance(t, Arrow):
        return _concrete(t.dom) and _concrete(t.cod)
    return True


# --------------------------------------------------------------------------
# parsing

class _Parser:
    def __init__(self, text: str, signature: Mapping[str, SemType]):
        self.toks = _lex(text)
        self.i = 0
        self.u = _Unifier()
        self.consts: dict[str, object] = dict(signature)
        self.scope: list[Var] = []

    # token helpers
    def peek(self) -> _Tok:
        return self.toks[self.i]

    def next(self) -> _Tok:
        tok = self.toks[self.i]
        self.i += 1
        return tok

    def accept(self, text) -> bool:
        if self.peek().text == text and self.peek().kind != "eof":
            self.i += 1
            return True
        return False

    def expect(self, text):
        tok = self.next()
        if tok.text != text:
            raise ParseError(f"expected {text!r}, found {tok.text or 'end of input'!r}", tok.pos)
        return tok

    # types carried alongside terms during parsing: (term, type)
    def parse(self, expected: Optional[SemType] = None) -> Term:
        term, ty = self.formula()
        tok = self.peek()
        if tok.kind != "eof":
            raise ParseError(f"trailing input {tok.text!r}", tok.pos)
        if expected is not None:
            self.u.unify(ty, expected, 0)
        return self.finish(term)

    def formula(self):
        return self.iff()

    def iff(self):
        left, lt = self.imp()
        if self.peek().text == "<->":
            pos = self.next().pos
            right, rt = self.imp()
            self.u.unify(lt, T, pos)
            self.u.unify(rt, T, pos)
            return Iff(left, right), T
        return left, lt

    def imp(self):
        left, lt = self.disj()
        if self.peek().text == "->":
            pos = self.next().pos
            right, rt = self.imp()
            self.u.unify(lt, T, pos)
            self.u.unify(rt, T, pos)
            return Imp(left, right), T
        return left, lt

    def disj(self):
        left, lt = self.conj()
        if self.peek().text == "|":
            pos = self.next().pos
            right, rt = self.disj()
            self.u.unify(lt, T, pos)
            self.u.unify(rt, T, pos)
            return Or(left, right), T
        return left, lt

    def conj(self):
        left, lt = self.unary()
        if self.peek().text == "&":
            pos = self.next().pos
            right, rt = self.conj()
            self.u.unify(lt, T, pos)
            self.u.unify(rt, T, pos)
            return And(left, right), T
        return left, lt

    def unary(self):
        tok = self.peek()
        if tok.text == "-" and self.toks[self.i + 1].kind == "num":
            self.next()
            num, _ = self.primary()
            return self.comparison((Num(-num.value, num.unit), D))
        if tok.text == "-":
            self.next()
            body, bt = self.unary()
            self.u.unify(bt, T, tok.pos)
            return Not(body), T
        if tok.kind == "name" and tok.text in ("exists", "forall"):
            self.next()
            cls = Exists if tok.text == "exists" else Forall
            return self.binder_chain(cls, tok.pos)
        if tok.text == "\\":
            self.next()
            return self.binder_chain(Abs, tok.pos)
        return self.comparison()

    def binder_chain(self, cls, pos):
        variables = []
        while self.peek().kind == "name":
            name_tok = self.next()
            if self.accept(":"):
                ty = self.type_expr()
            else:
                ty = conventional_type(name_tok.text)
                if ty is None:
                    raise ParseError(f"binder {name_tok.text!r} needs a type annotation", name_tok.pos)
            variables.append(Var(name_tok.text, ty))
        if not variables:
            raise ParseError("binder expects a variable", pos)
        self.expect(".")
        self.scope.extend(variables)
        body, bt = self.unary()
        del self.scope[-len(variables):]
        if cls is Abs:
            ty = bt
            for v in reversed(variables):
                body = Abs(v, body)
                ty = Arrow(v.type, ty)
            return body, ty
        self.u.unify(bt, T, pos)
        for v in reversed(variables):
            body = cls(v, body)
        return body, T

    def comparison(self, left_typed=None):
        left, lt = left_typed if left_typed is not None else self.application()
        tok = self.peek()
        if tok.text == "=":
            self.next()
            right, rt = self.application()
            self.u.unify(lt, rt, tok.pos)
            return Eq(left, right), T
        if tok.text in ("<", "<="):
            self.next()
            right, rt = self.application()
            self.u.unify(lt, D, tok.pos)
            self.u.unify(rt, D, tok.pos)
            return Cmp(tok.text, left, right), T
        return left, lt

    def application(self):
        term, ty = self.primary()
        while self.peek().text == "(":
            pos = self.next().pos
            args = [self.formula()]
            while self.accept(","):
                args.append(self.formula())
            self.expect(")")
            for arg, at in args:
                res = self.u.fresh()
                self.u.unify(ty, Arrow(at, res), pos)
                term, ty = App(term, arg), res
        return term, ty

    def primary(self):
        tok = self.next()
        if tok.kind == "num":
            value = Fraction(tok.text)
            unit = None
            if self.accept("#"):
                unit_tok = self.next()
                if unit_tok.kind != "name":
                    raise ParseError("expected unit name", unit_tok.pos)
                unit = unit_tok.text
            return Num(value, unit), D
        if tok.kind == "name":
            for v in reversed(self.scope):
                if v.name == tok.text:
                    return v, v.type
            if tok.text not in self.consts:
                self.consts[tok.text] = self.u.fresh()
            return Const(tok.text, None), self.consts[tok.text]
        if tok.text == "(":
            inner = self.formula()
            self.expect(")")
            return inner
        raise ParseError(f"unexpected {tok.text or 'end of input'!r}", tok.pos)

    def _default(self, t):
        if isinstance(t, _TVar):
            self.u.unify(t, E, None)
            return E
        if isinstance(t, Arrow):
            return Arrow(self._default(t.dom), self._default(t.cod))
        return t

    def type_expr(self) -> SemType:
        tok = self.next()
        if tok.text == "<":
            dom = self.type_expr()
            self.expect(",")
            cod = self.type_expr()
            self.expect(">")
            return Arrow(dom, cod)
        if tok.text in BASE_TYPES:
            return BASE_TYPES[tok.text]
        raise ParseError(f"bad type {tok.text!r}", tok.pos)

    def finish(self, term: Term) -> Term:
        # thresholds are degrees; anything still unknown is an entity
        for name, ty in self.consts.items():
            if name.startswith("th_") and isinstance(self.u.walk(ty), _TVar):
                self.u.unify(ty, D, None)
        resolved = {}
        for name, ty in self.consts.items():
            resolved[name] = self._default(self.u.resolve(ty))

        def go(t):
            if isinstance(t, Const):
                ty = resolved[t.name]
                if not _concrete(ty):
                    raise ParseError(f"cannot infer the type of constant {t.name!r}")
                return Const(t.name, ty)
            if isinstance(t, (Var, Num)):
                return t
            return rebuild(t, tuple(go(c) for c in children(t)))

        return go(term)


def parse_term(text: str, signature: Optional[Mapping[str, SemType]] = None,
               expected: Optional[SemType] = None) -> Term:
    """Parse the canonical serialization; constant types are inferred.

    ``expected`` constrains the type of the whole term during inference.
    """
    sig = DEFAULT_SIGNATURE if signature is None else {**DEFAULT_SIGNATURE, **signature}
    return _Parser(text, sig).parse(expected)


def parse_type(text: str) -> SemType:
    p = _Parser(text, {})
    ty = p.type_expr()
    if p.peek().kind != "eof":
        raise ParseError("trailing input in type", p.peek().pos)
    return ty


def signature_of(t: Term) -> dict[str, SemType]:
    """Constant name to type map, usable to re-parse ``to_text(t)``."""
    from .terms import subterms

    return {s.name: s.type for s in subterms(t) if isinstance(s, Const)}
