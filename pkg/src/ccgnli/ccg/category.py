"""CCG categories: atoms with feature sets, and forward/backward slashes."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Union


class CategoryParseError(ValueError):
    def __init__(self, message, position):
        self.position = position
        super().__init__(f"{message} at position {position}")


@dataclass(frozen=True)
class Atom:
    name: str
    features: frozenset = field(default_factory=frozenset)

    def __str__(self) -> str:
        if self.features:
            return f"{self.name}[{','.join(sorted(self.features))}]"
        return self.name

    def with_features(self, *feats: str) -> "Atom":
        return Atom(self.name, self.features | frozenset(feats))

    def bare(self) -> "Atom":
        return Atom(self.name)


@dataclass(frozen=True)
class Slash:
    dir: str  # "/" looks right, "\\" looks left
    result: "Category"
    arg: "Category"

    def __post_init__(self):
        if self.dir not in ("/", "\\"):
            raise ValueError(f"bad slash {self.dir!r}")

    def __str__(self) -> str:
        res, arg = str(self.result), str(self.arg)
        if isinstance(self.result, Slash):
            res = f"({res})"
        if isinstance(self.arg, Slash):
            arg = f"({arg})"
        return f"{res}{self.dir}{arg}"


Category = Union[Atom, Slash]

MONOTONE_FEATURES = frozenset({"down", "nm"})


def fwd(result: Category, arg: Category) -> Slash:
    return Slash("/", result, arg)


def bwd(result: Category, arg: Category) -> Slash:
    return Slash("\\", result, arg)


S = Atom("S")
NP = Atom("NP")
N = Atom("N")
PP = Atom("PP")


def parse_category(text: str) -> Category:
    """Parse ``(S\\NP)/NP``, ``N[down]/N`` and the like."""
    p = _CatParser(text)
    cat = p.expr()
    p.skip()
    if p.i != len(p.s):
        raise CategoryParseError(f"unexpected {p.s[p.i]!r}", p.i)
    return cat


class _CatParser:
    def __init__(self, s: str):
        self.s = s
        self.i = 0

    def skip(self):
        while self.i < len(self.s) and self.s[self.i].isspace():
            self.i += 1

    def expr(self) -> Category:
        left = self.primary()
        while True:
            self.skip()
            if self.i < len(self.s) and self.s[self.i] in "/\\":
                d = self.s[self.i]
                self.i += 1
                right = self.primary()
                left = Slash(d, left, right)
            else:
                return left

    def primary(self) -> Category:
        self.skip()
        if self.i >= len(self.s):
            raise CategoryParseError("unexpected end of category", self.i)
        c = self.s[self.i]
        if c == "(":
            self.i += 1
            inner = self.expr()
            self.skip()
            if self.i >= len(self.s) or self.s[self.i] != ")":
                raise CategoryParseError("missing ')'", self.i)
            self.i += 1
            return inner
        start = self.i
        while self.i < len(self.s) and (self.s[self.i].isalnum() or self.s[self.i] == "_"):
            self.i += 1
        if start == self.i:
            raise CategoryParseError(f"unexpected {c!r}", self.i)
        name = self.s[start:self.i]
        feats = frozenset()
        if self.i < len(self.s) and self.s[self.i] == "[":
            end = self.s.find("]", self.i)
            if end < 0:
                raise CategoryParseError("missing ']'", self.i)
            body = self.s[self.i + 1:end]
            feats = frozenset(f.strip() for f in body.split(",") if f.strip())
            self.i = end + 1
        return Atom(name, feats)


def strip_features(c: Category, features=MONOTONE_FEATURES) -> Category:
    if isinstance(c, Atom):
        return Atom(c.name, c.features - features)
    return Slash(c.dir, strip_features(c.result, features), strip_features(c.arg, features))


def category_features(c: Category) -> frozenset:
    if isinstance(c, Atom):
        return c.features
    return category_features(c.result) | category_features(c.arg)


def result_atom(c: Category) -> Atom:
    while isinstance(c, Slash):
        c = c.result
    return c
