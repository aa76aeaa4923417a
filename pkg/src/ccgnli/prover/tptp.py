"""Export of proof tasks as TPTP typed first-order (TFF) problems.

Entities and events become the sorts ``e`` and ``v``; degrees become
``$rat``. Counting degrees (the second argument of ``many``) receive an
explicit ``$is_int`` axiom so an external prover sees the same integrality
the internal arithmetic assumes. A small recursive-descent validator checks
the subset of the TFF grammar this module emits.
"""

from __future__ import annotations

import re
from fractions import Fraction

from ..logic import And, App, Cmp, Const, D, E, Eq, Exists, Forall, Iff, Imp, Not, Num, Or, T, V, Var, unapply
from ..logic.terms import BOTTOM, TOP
from ..logic.types import Arrow, unarrow
from .background import signature
from .tableau import ProofTask

_SORT = {E: "e", V: "v", D: "$rat", T: "$o"}


class TPTPSyntaxError(ValueError):
    def __init__(self, message, position):
        self.position = position
        super().__init__(f"{message} at offset {position}")


def _sort(ty) -> str:
    return _SORT[ty]


def _type_decl(ty) -> str:
    args, res = unarrow(ty)
    if not args:
        return _sort(res)
    dom = _sort(args[0]) if len(args) == 1 else "(" + " * ".join(_sort(a) for a in args) + ")"
    return f"{dom} > {_sort(res)}"


def _rat(value: Fraction) -> str:
    return f"{value.numerator}/{value.denominator}"


def _var(name: str) -> str:
    return "V_" + re.sub(r"\W", "_", name)


def _const(name: str) -> str:
    return "c_" + name if not name[:1].islower() else name


def _term(t) -> str:
    if isinstance(t, Var):
        return _var(t.name)
    if isinstance(t, Num):
        return _rat(t.value)
    if isinstance(t, Const):
        return _const(t.name)
    head, args = unapply(t)
    return f"{_const(head.name)}({', '.join(_term(a) for a in args)})"


def _formula(f) -> str:
    if f == TOP:
        return "$true"
    if f == BOTTOM:
        return "$false"
    if isinstance(f, Not):
        return f"~ ({_formula(f.body)})"
    if isinstance(f, (And, Or, Imp, Iff)):
        op = {And: "&", Or: "|", Imp: "=>", Iff: "<=>"}[type(f)]
        return f"({_formula(f.left)} {op} {_formula(f.right)})"
    if isinstance(f, (Exists, Forall)):
        q = "?" if isinstance(f, Exists) else "!"
        return f"{q} [{_var(f.var.name)}: {_sort(f.var.type)}] : ({_formula(f.body)})"
    if isinstance(f, Eq):
        return f"{_term(f.left)} = {_term(f.right)}"
    if isinstance(f, Cmp):
        pred = "$less" if f.op == "<" else "$lesseq"
        return f"{pred}({_term(f.left)}, {_term(f.right)})"
    return _term(f)


def export_tptp(task: ProofTask, name: str = "problem") -> str:
    """TFF document: declarations, axioms, premises and one conjecture."""
    formulas = list(task.axioms) + list(task.premises) + [task.goal]
    sig = signature(formulas)
    lines = [f"% {name}", "tff(sort_e, type, e: $tType).", "tff(sort_v, type, v: $tType)."]
    for sym, ty in sorted(sig.items()):
        if sym in ("true", "false"):
            continue
        lines.append(f"tff(decl_{_const(sym)}, type, {_const(sym)}: {_type_decl(ty)}).")
    if "many" in sig:
        lines.append("tff(count_integral, axiom, ! [X: e, N: $rat] : (many(X, N) => $is_int(N))).")
    for i, ax in enumerate(task.axioms, 1):
        lines.append(f"tff(axiom_{i}, axiom, {_formula(ax)}).")
    for i, p in enumerate(task.premises, 1):
        lines.append(f"tff(premise_{i}, axiom, {_formula(p)}).")
    lines.append(f"tff(goal, conjecture, {_formula(task.goal)}).")
    return "\n".join(lines) + "\n"


# --------------------------------------------------------------------------
# validation

_TOKEN = re.compile(
    r"\s*(?:(?P<comment>%[^\n]*)"
    r"|(?P<rat>-?\d+/\d+)|(?P<int>-?\d+)"
    r"|(?P<dollar>\$[a-zA-Z_]+)|(?P<upper>[A-Z][A-Za-z0-9_]*)|(?P<lower>[a-z][A-Za-z0-9_]*)"
    r"|(?P<op><=>|=>|!=|[()\[\],:.!?~&|=>*]))"
)

_BUILTIN_TYPES = {"$tType", "$o", "$rat", "$int", "$real", "$i"}
_ARITH_PREDS = {"$less": 2, "$lesseq": 2, "$greater": 2, "$greatereq": 2, "$is_int": 1}
_ROLES = {"type", "axiom", "hypothesis", "conjecture", "negated_conjecture"}


def _tokens(text):
    out, i = [], 0
    while i < len(text):
        m = _TOKEN.match(text, i)
        if not m or m.end() == i:
            if text[i:].strip() == "":
                break
            raise TPTPSyntaxError(f"unexpected {text[i]!r}", i)
        i = m.end()
        kind = m.lastgroup
        if kind != "comment":
            out.append((kind, m.group(kind), m.start(kind)))
    out.append(("eof", "", len(text)))
    return out


class _Validator:
    def __init__(self, text):
        self.toks = _tokens(text)
        self.i = 0
        self.symbols: dict[str, tuple] = {}
        self.sorts = {"$o", "$rat", "$int", "$real", "$i"}
        self.conjectures = 0

    def peek(self):
        return self.toks[self.i]

    def take(self, text=None, kind=None):
        tok = self.toks[self.i]
        if (text is not None and tok[1] != text) or (kind is not None and tok[0] != kind):
            want = text or kind
            raise TPTPSyntaxError(f"expected {want!r}, found {tok[1]!r}", tok[2])
        self.i += 1
        return tok

    def document(self):
        while self.peek()[0] != "eof":
            self.statement()
        if self.conjectures > 1:
            raise TPTPSyntaxError("more than one conjecture", self.peek()[2])

    def statement(self):
        self.take("tff")
        self.take("(")
        self.take(kind="lower")
        self.take(",")
        role = self.take(kind="lower")
        if role[1] not in _ROLES:
            raise TPTPSyntaxError(f"unknown role {role[1]!r}", role[2])
        self.take(",")
        if role[1] == "type":
            self.declaration()
        else:
            self.conjectures += role[1] == "conjecture"
            self.formula({})
        self.take(")")
        self.take(".")

    def declaration(self):
        name = self.take(kind="lower")[1]
        self.take(":")
        if self.peek()[1] == "$tType":
            self.take()
            self.sorts.add(name)
            return
        args = []
        if self.peek()[1] == "(":
            self.take("(")
            args.append(self.sort())
            while self.peek()[1] == "*":
                self.take("*")
                args.append(self.sort())
            self.take(")")
            self.take(">")
            res = self.sort()
        else:
            first = self.sort()
            if self.peek()[1] == ">":
                self.take(">")
                args, res = [first], self.sort()
            else:
                res = first
        self.symbols[name] = (tuple(args), res)

    def sort(self):
        tok = self.take()
        if tok[1] not in self.sorts:
            raise TPTPSyntaxError(f"undeclared sort {tok[1]!r}", tok[2])
        return tok[1]

    # formulas; ``env`` maps bound variables to sorts
    def formula(self, env):
        self.unitary(env)
        op = self.peek()[1]
        if op in ("&", "|"):
            while self.peek()[1] == op:
                self.take(op)
                self.unitary(env)
        elif op in ("=>", "<=>"):
            self.take(op)
            self.unitary(env)

    def unitary(self, env):
        tok = self.peek()
        if tok[1] == "(":
            self.take("(")
            self.formula(env)
            self.take(")")
        elif tok[1] == "~":
            self.take("~")
            self.unitary(env)
        elif tok[1] in ("!", "?"):
            self.take()
            self.take("[")
            inner = dict(env)
            while True:
                var = self.take(kind="upper")[1]
                self.take(":")
                inner[var] = self.sort()
                if self.peek()[1] != ",":
                    break
                self.take(",")
            self.take("]")
            self.take(":")
            self.unitary(inner)
        elif tok[1] in ("$true", "$false"):
            self.take()
        elif tok[1] in _ARITH_PREDS:
            self.take()
            args = self.args(env)
            if len(args) != _ARITH_PREDS[tok[1]] or any(a not in ("$rat", "$int") for a in args):
                raise TPTPSyntaxError(f"bad arguments to {tok[1]}", tok[2])
        else:
            left = self.term(env)
            if self.peek()[1] in ("=", "!="):
                op = self.take()
                right = self.term(env)
                if left != right:
                    raise TPTPSyntaxError("equation between different sorts", op[2])
            elif left != "$o":
                raise TPTPSyntaxError("non-boolean term used as formula", tok[2])

    def args(self, env):
        self.take("(")
        out = [self.term(env)]
        while self.peek()[1] == ",":
            self.take(",")
            out.append(self.term(env))
        self.take(")")
        return out

    def term(self, env) -> str:
        tok = self.take()
        kind, text = tok[0], tok[1]
        if kind == "upper":
            if text not in env:
                raise TPTPSyntaxError(f"unbound variable {text}", tok[2])
            return env[text]
        if kind == "rat":
            return "$rat"
        if kind == "int":
            return "$int"
        if kind == "lower":
            if text not in self.symbols:
                raise TPTPSyntaxError(f"undeclared symbol {text!r}", tok[2])
            params, res = self.symbols[text]
            args = self.args(env) if self.peek()[1] == "(" else []
            if tuple(args) != params:
                raise TPTPSyntaxError(f"{text} applied to {args}, declared {list(params)}", tok[2])
            return res
        raise TPTPSyntaxError(f"unexpected {text!r}", tok[2])


def validate_tptp(text: str) -> None:
    """Raise TPTPSyntaxError unless ``text`` is a well-sorted TFF document."""
    _Validator(text).document()


def is_valid_tptp(text: str) -> bool:
    try:
        validate_tptp(text)
    except TPTPSyntaxError:
        return False
    return True


__all__ = ["export_tptp", "validate_tptp", "is_valid_tptp", "TPTPSyntaxError"]
