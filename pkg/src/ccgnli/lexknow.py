"""Lexical-relation knowledge base and axiom insertion.

KB rows read ``source TAB kind TAB target`` meaning "source is a <kind> of
target": ``puppy TAB hyponym TAB dog`` says a puppy is a kind of dog.
For a predicate pair (F from a premise, G from the hypothesis) the relevant
relation is the one saying what G is with respect to F, so the pair
(puppy, dog) is read through the stored dual ``dog hypernym puppy`` and
yields ``forall x.(puppy(x) -> dog(x))``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Optional

from .logic import Arrow, Const, D, Forall, Iff, Imp, Not, T, Var, apply, rectify, subterms
from .logic.ops import var_prefix
from .logic.types import unarrow

KINDS = ("antonym", "hypernym", "hyponym", "synonym", "similar", "inflection", "derivation")
SYMMETRIC = frozenset({"antonym", "synonym", "similar", "inflection", "derivation"})
BICONDITIONAL = frozenset({"synonym", "similar", "inflection", "derivation"})
_DUAL = {"hypernym": "hyponym", "hyponym": "hypernym"}

# predicates that belong to the logic rather than the lexicon
RESERVED = frozenset({"many", "subj", "acc", "dat", "true", "false"})


class KBParseError(ValueError):
    def __init__(self, line, message):
        self.line = line
        super().__init__(f"line {line}: {message}")


class UnknownKind(KBParseError):
    pass


ParseError = KBParseError


@dataclass(frozen=True)
class LexRelation:
    source: str
    target: str
    kind: str


@dataclass
class KnowledgeBase:
    relations: dict[tuple[str, str], set[str]] = field(default_factory=dict)
    provenance: dict[LexRelation, str] = field(default_factory=dict)

    def add(self, rel: LexRelation, provenance: str = "") -> None:
        if rel.kind not in KINDS:
            raise ValueError(f"unknown relation kind {rel.kind!r}")
        self.relations.setdefault((rel.source, rel.target), set()).add(rel.kind)
        self.provenance.setdefault(rel, provenance)

    def kinds(self, source: str, target: str) -> set[str]:
        """Kinds k with "source is a k of target"."""
        return set(self.relations.get((source, target), ()))

    def __len__(self) -> int:
        return len(self.provenance)

    def __iter__(self):
        return iter(sorted(self.provenance, key=lambda r: (r.source, r.target, r.kind)))


def load_kb(path) -> KnowledgeBase:
    """Read a KB file and close it under duals and symmetry."""
    kb = KnowledgeBase()
    for lineno, line in enumerate(Path(path).read_text(encoding="utf-8").splitlines(), 1):
        if not line.strip() or line.lstrip().startswith("#"):
            continue
        parts = [p.strip() for p in line.split("\t")]
        if len(parts) != 3 or not all(parts):
            raise KBParseError(lineno, "expected source TAB kind TAB target")
        source, kind, target = parts
        if kind not in KINDS:
            raise UnknownKind(lineno, f"unknown relation kind {kind!r}")
        if source == target:
            raise KBParseError(lineno, f"reflexive {kind} entry for {source!r}")
        where = f"{path}:{lineno}"
        kb.add(LexRelation(source, target, kind), where)
        if kind in SYMMETRIC:
            kb.add(LexRelation(target, source, kind), where + " (symmetric)")
        elif kind in _DUAL:
            kb.add(LexRelation(target, source, _DUAL[kind]), where + " (dual)")
    return kb


def predicates(formulas: Iterable) -> list[Const]:
    """Lexical predicate constants in order of first occurrence."""
    seen: dict[str, Const] = {}
    for f in formulas:
        for s in subterms(f):
            if (isinstance(s, Const) and isinstance(s.type, Arrow) and unarrow(s.type)[1] == T
                    and s.name not in RESERVED and s.name not in seen):
                seen[s.name] = s
    return list(seen.values())


def candidate_pairs(premises: Iterable, hypothesis) -> list[tuple[Const, Const]]:
    """(F, G) with F from the premises, G from the hypothesis, same type."""
    return [
        (f, g)
        for f in predicates(premises)
        for g in predicates([hypothesis])
        if f.type == g.type and f.name != g.name
    ]


def relation_for(kb: KnowledgeBase, f: str, g: str) -> Optional[str]:
    """Highest-precedence relation saying what ``g`` is with respect to ``f``."""
    kinds = kb.kinds(g, f)
    if "antonym" in kinds:
        return "antonym"
    for k in ("hypernym", "hyponym"):
        if k in kinds:
            return k
    for k in sorted(kinds & BICONDITIONAL):
        return k
    return None


def _bound_vars(ty) -> list[Var]:
    args, _ = unarrow(ty)
    return [Var(f"{var_prefix(a)}{i}", a) for i, a in enumerate(args, 1)]


def synthesize_axioms(pairs, kb: KnowledgeBase) -> list:
    """One axiom per related pair, oriented for premise-side F."""
    axioms = []
    for f, g in pairs:
        kind = relation_for(kb, f.name, g.name)
        if kind is None:
            continue
        xs = _bound_vars(f.type)
        fa, ga = apply(f, *xs), apply(g, *xs)
        if kind == "antonym":
            gradable = any(x.type == D for x in xs)
            body = Iff(ga, Not(fa)) if gradable else Imp(fa, Not(ga))
        elif kind == "hypernym":  # g is more general
            body = Imp(fa, ga)
        elif kind == "hyponym":
            body = Imp(ga, fa)
        else:
            body = Iff(fa, ga)
        for x in reversed(xs):
            body = Forall(x, body)
        axioms.append(rectify(body))
    return axioms


__all__ = [
    "KINDS",
    "KBParseError",
    "ParseError",
    "UnknownKind",
    "LexRelation",
    "KnowledgeBase",
    "load_kb",
    "predicates",
    "candidate_pairs",
    "relation_for",
    "synthesize_axioms",
]
