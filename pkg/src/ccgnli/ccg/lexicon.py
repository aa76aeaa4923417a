"""Lexicon files and the quantifier monotonicity classification."""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Optional

from .category import Category, parse_category


class OutOfVocabulary(KeyError):
    def __init__(self, token):
        self.token = token
        super().__init__(f"no lexical entry for {token!r}")


class LexiconFormatError(ValueError):
    pass


@dataclass(frozen=True)
class Token:
    surface: str
    lemma: str
    pos: str


@dataclass(frozen=True)
class Entry:
    category: Category
    template_key: str


MONOTONICITY = ("up", "down", "nm")

_QUANTITY = re.compile(
    r"^(?:(?P<family>[a-z]+(?:-[a-z]+)*)-)?(?P<n>\d+(?:/\d+)?)(?:-(?P<unit>[a-z]+))?$"
)


@dataclass(frozen=True)
class Quantity:
    family: str  # "card" for a bare numeral
    value: Fraction
    unit: Optional[str] = None

    @property
    def lexical_family(self) -> str:
        if self.unit is None:
            return self.family
        return "measure" if self.family == "card" else f"{self.family}-measure"


def split_quantity(lemma: str) -> Optional[Quantity]:
    """Decode merged numeral lemmas such as ``less-than-5`` or ``at-least-4-feet``."""
    m = _QUANTITY.match(lemma)
    if not m:
        return None
    return Quantity(m.group("family") or "card", Fraction(m.group("n")), m.group("unit"))


@dataclass
class Lexicon:
    entries: dict[tuple[str, str], list[Entry]] = field(default_factory=dict)
    quantifiers: dict[str, str] = field(default_factory=dict)

    def add(self, lemma: str, pos: str, category: Category, template_key: str) -> None:
        self.entries.setdefault((lemma, pos), []).append(Entry(category, template_key))

    def lookup(self, token: Token) -> list[Entry]:
        for key in ((token.lemma, token.pos), (token.surface.lower(), token.pos)):
            if key in self.entries:
                return self.entries[key]
        q = split_quantity(token.lemma)
        if q is not None and (q.lexical_family, token.pos) in self.entries:
            return self.entries[(q.lexical_family, token.pos)]
        if ("*", token.pos) in self.entries:
            return self.entries[("*", token.pos)]
        raise OutOfVocabulary(token.surface)

    def covers(self, token: Token) -> bool:
        try:
            self.lookup(token)
        except OutOfVocabulary:
            return False
        return True

    def monotonicity(self, lemma: str) -> Optional[str]:
        """``up``/``down``/``nm`` for quantifier lemmas, else None."""
        if lemma in self.quantifiers:
            return self.quantifiers[lemma]
        q = split_quantity(lemma)
        if q is not None and q.unit is None:
            return self.quantifiers.get(q.family)
        return None

    @classmethod
    def load(cls, lexicon_path, quantifier_path=None) -> "Lexicon":
        lex = cls()
        for lineno, fields in _rows(lexicon_path):
            if len(fields) != 4:
                raise LexiconFormatError(f"{lexicon_path}:{lineno}: expected 4 fields")
            lemma, pos, cat, key = fields
            lex.add(lemma, pos, parse_category(cat), key)
        if quantifier_path is not None:
            for lineno, fields in _rows(quantifier_path):
                if len(fields) != 2 or fields[1] not in MONOTONICITY:
                    raise LexiconFormatError(f"{quantifier_path}:{lineno}: bad quantifier class")
                lex.quantifiers[fields[0]] = fields[1]
        return lex


def _rows(path):
    for lineno, line in enumerate(Path(path).read_text(encoding="utf-8").splitlines(), 1):
        if not line.strip() or line.lstrip().startswith("#"):
            continue
        yield lineno, [f.strip() for f in line.split("\t")]
