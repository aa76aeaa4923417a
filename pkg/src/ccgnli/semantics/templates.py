"""Semantic templates: lambda terms attached to CCG categories and lemmas.

Template file rows are ``key TAB category TAB lemma-pattern TAB body``.
The lemma pattern is an fnmatch glob, optionally suffixed ``@POS``
(``*@ADJ`` matches every adjective); ``$gradable`` matches any word listed
in the scale table. Bodies use the canonical term syntax
with holes:

    %P   the lemma's predicate or constant (type inferred from the body)
    %T   the degree threshold of the lemma's scale
    %M   the ``many`` threshold of the quantified noun (resolved later)
    %N   the quantity of a numeric quantifier; %N1 is quantity + 1

``@define NAME TYPE`` rows introduce type abbreviations usable in binder
annotations (``\\Q:GQ.``).
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fnmatch import fnmatchcase
from pathlib import Path
from typing import Optional

from ..ccg.category import Atom, Category, parse_category
from ..ccg.lexicon import split_quantity
from ..logic import (
    Arrow,
    Const,
    D,
    E,
    Num,
    T,
    Term,
    V,
    parse_term,
    parse_type,
    type_of,
)
from ..logic.ops import LogicError
from ..logic.terms import children, rebuild
from ..logic.types import SemType


class NoTemplate(LookupError):
    def __init__(self, category, lemma, pos=None):
        self.category = category
        self.lemma = lemma
        self.pos = pos
        super().__init__(f"no template for {lemma!r}/{pos} with category {category}")


class TemplateError(ValueError):
    pass


GQ = Arrow(Arrow(E, T), T)
SENT = Arrow(Arrow(V, T), T)
DEGREE_MODIFIER = Arrow(D, Arrow(Arrow(D, T), T))

# atoms whose meaning is not a plain base type
_ATOMS: dict[str, SemType] = {
    "S": SENT,
    "NP": GQ,
    "N": Arrow(E, T),
    "PP": GQ,
    "PPc": Arrow(GQ, SENT),
    "DM": DEGREE_MODIFIER,
}

_BASIC: dict[str, SemType] = {
    "S": T, "NP": E, "N": Arrow(E, T), "PP": E, "PPc": Arrow(E, T), "DM": D,
}


def category_to_type(c: Category) -> SemType:
    """The plain homomorphism: NP to e, N to <e,t>, S to t; features ignored."""
    if isinstance(c, Atom):
        if c.name not in _BASIC:
            raise TemplateError(f"no basic type for atom {c.name}")
        return _BASIC[c.name]
    return Arrow(category_to_type(c.arg), category_to_type(c.result))


def semantic_type(c: Category) -> SemType:
    """Type used for composition.

    Sentences denote event quantifiers waiting for a continuation, noun
    phrases are generalized quantifiers, and a nominal carrying a ``down``
    or ``nm`` feature is already a quantifier over its clause.
    """
    if isinstance(c, Atom):
        if c.name == "N" and c.features & {"down", "nm"}:
            return GQ
        if c.name not in _ATOMS:
            raise TemplateError(f"no semantic type for atom {c.name}")
        return _ATOMS[c.name]
    return Arrow(semantic_type(c.arg), semantic_type(c.result))


# lemma pattern matching every word listed in the scale table
GRADABLE = "$gradable"


@dataclass(frozen=True)
class Scale:
    predicate: str
    name: str
    negative: bool = False


@dataclass(frozen=True)
class Template:
    key: str
    category: Category
    lemma_pattern: str
    pos_pattern: str
    body: Term

    @property
    def priority(self) -> tuple[int, int]:
        return (self.lemma_pattern != "*", self.pos_pattern != "*")

    def matches(self, category: Category, lemma: str, pos: Optional[str],
                gradable: frozenset = frozenset()) -> bool:
        if category != self.category:
            return False
        if self.pos_pattern != "*" and pos != self.pos_pattern:
            return False
        if self.lemma_pattern == GRADABLE:
            return lemma in gradable
        return self.lemma_pattern == "*" or fnmatchcase(lemma, self.lemma_pattern)


@dataclass
class TemplateBank:
    templates: list[Template] = field(default_factory=list)
    scales: dict[str, Scale] = field(default_factory=dict)

    def add(self, template: Template) -> None:
        expected = semantic_type(template.category)
        actual = type_of(template.body)
        if actual != expected:
            raise TemplateError(
                f"template {template.key}: body has type {actual}, category {template.category} needs {expected}"
            )
        self.templates.append(template)

    def predicate(self, lemma: str) -> str:
        s = self.scales.get(lemma)
        return s.predicate if s else predicate_name(lemma)

    def threshold(self, lemma: str) -> str:
        """Name of the contextual threshold constant for a gradable word."""
        s = self.scales.get(lemma)
        return "th_" + (s.name if s else predicate_name(lemma))

    def negative_poles(self) -> set[str]:
        return {s.predicate for s in self.scales.values() if s.negative}

    def scale_of_predicate(self, predicate: str) -> Optional[str]:
        for s in self.scales.values():
            if s.predicate == predicate:
                return s.name
        return None

    @classmethod
    def load(cls, template_path, scale_path=None) -> "TemplateBank":
        bank = cls()
        defines: dict[str, str] = {}
        text = Path(template_path).read_text(encoding="utf-8")
        for lineno, line in enumerate(text.splitlines(), 1):
            if not line.strip() or line.lstrip().startswith("#"):
                continue
            if line.startswith("@define"):
                _, name, ty = line.split(None, 2)
                parse_type(ty.strip())
                defines[name] = ty.strip()
                continue
            fields = line.split("\t")
            if len(fields) != 4:
                raise TemplateError(f"{template_path}:{lineno}: expected 4 tab-separated fields")
            key, cat, lemma, body = (f.strip() for f in fields)
            lemma_pat, _, pos_pat = lemma.partition("@")
            body = _expand(body, defines)
            try:
                category = parse_category(cat)
                term = parse_term(body, _HOLE_SIGNATURE, expected=semantic_type(category))
                bank.add(Template(key, category, lemma_pat, pos_pat or "*", term))
            except (LogicError, ValueError) as exc:
                raise TemplateError(f"{template_path}:{lineno}: {exc}") from exc
        if scale_path is not None:
            for line in Path(scale_path).read_text(encoding="utf-8").splitlines():
                if not line.strip() or line.startswith("#"):
                    continue
                parts = [p.strip() for p in line.split("\t")]
                if len(parts) != 4 or parts[3] not in "+-":
                    raise TemplateError(f"{scale_path}: bad scale row {line!r}")
                bank.scales[parts[0]] = Scale(parts[1], parts[2], parts[3] == "-")
        return bank


_HOLE_SIGNATURE = {"%T": D, "%M": D, "%N": D, "%N1": D}


def _expand(body: str, defines: dict[str, str]) -> str:
    if not defines:
        return body
    # names directly after ':', '<' or ',' sit inside a type annotation
    pattern = re.compile(r"(?<=[:<,])(" + "|".join(map(re.escape, defines)) + r")\b")
    while True:
        expanded = pattern.sub(lambda m: defines[m.group(1)], body)
        if expanded == body:
            return body
        body = expanded


def lookup_template(bank: TemplateBank, category: Category, lemma: str,
                    pos: Optional[str] = None) -> Template:
    """Highest-priority template; lemma-specific beats category default."""
    best = None
    gradable = frozenset(bank.scales)
    for t in bank.templates:
        if t.matches(category, lemma, pos, gradable) and (best is None or t.priority > best.priority):
            best = t
    if best is None:
        raise NoTemplate(category, lemma, pos)
    return best


def predicate_name(lemma: str) -> str:
    name = re.sub(r"[^A-Za-z0-9_]", "_", lemma.lower()).strip("_")
    if not name or not name[0].isalpha():
        name = "w_" + name
    return name


def instantiate(template: Template, lemma: str, bank: TemplateBank) -> Term:
    """Fill the holes of ``template`` for a particular word."""
    q = split_quantity(lemma)

    def fill(t):
        if isinstance(t, Const) and t.name.startswith("%"):
            if t.name == "%P":
                return Const(bank.predicate(lemma), t.type)
            if t.name == "%T":
                return Const(bank.threshold(lemma), D)
            if t.name in ("%N", "%N1"):
                if q is None:
                    raise TemplateError(f"template {template.key} needs a quantity, got {lemma!r}")
                return Num(q.value + (1 if t.name == "%N1" else 0), q.unit)
            return t  # %M is resolved once the restrictor noun is known
        kids = children(t)
        if not kids:
            return t
        return rebuild(t, tuple(fill(k) for k in kids))

    return fill(template.body)


MANY_HOLE = Const("%M", D)
