"""Derivation trees, the combinatory rules, validation and document I/O.

Derivation document schema (JSON), one per sentence::

    leaf:  {"surface": "ran", "lemma": "run", "pos": "VERB", "category": "S\\\\NP"}
    node:  {"rule": "ba", "category": "S", "children": [<doc>, <doc>]}

Rules: ``fa`` forward application, ``ba`` backward application, ``fc``
forward composition, ``bc`` backward composition, ``ftr``/``btr``
forward/backward type raising, ``lex`` unary lexical rule.  Unary rules
have exactly one child.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, replace
from typing import Iterator, Optional, Union

from .category import NP, S, Atom, Category, CategoryParseError, Slash, bwd, fwd, parse_category

POS_TAGS = frozenset(
    {"NOUN", "VERB", "ADJ", "ADV", "DET", "PREP", "PROPN", "COP", "EXPL", "CONJ", "COMP", "NUM"}
)

BINARY_RULES = ("fa", "ba", "fc", "bc")
UNARY_RULES = ("ftr", "btr", "lex")
RULES = BINARY_RULES + UNARY_RULES

DM = Atom("DM")  # degree-modifier slot of gradable words


class SchemaError(ValueError):
    pass


class RuleMismatch(ValueError):
    def __init__(self, node_id, message):
        self.node_id = node_id
        super().__init__(f"node {node_id}: {message}")


@dataclass(frozen=True)
class Leaf:
    surface: str
    lemma: str
    pos: str
    category: Category

    @property
    def leaves(self) -> tuple["Leaf", ...]:
        return (self,)


@dataclass(frozen=True)
class Node:
    rule: str
    category: Category
    left: "DerivTree"
    right: Optional["DerivTree"] = None

    @property
    def leaves(self) -> tuple[Leaf, ...]:
        out = self.left.leaves
        if self.right is not None:
            out += self.right.leaves
        return out


DerivTree = Union[Leaf, Node]


# --------------------------------------------------------------------------
# combinators

def combine(rule: str, left: Category, right: Category) -> Optional[Category]:
    """Result of a binary rule, or None when it does not apply."""
    if rule == "fa":
        if isinstance(left, Slash) and left.dir == "/" and left.arg == right:
            return left.result
    elif rule == "ba":
        if isinstance(right, Slash) and right.dir == "\\" and right.arg == left:
            return right.result
    elif rule == "fc":
        if (isinstance(left, Slash) and left.dir == "/" and isinstance(right, Slash)
                and right.dir == "/" and left.arg == right.result):
            return fwd(left.result, right.arg)
    elif rule == "bc":
        if (isinstance(left, Slash) and left.dir == "\\" and isinstance(right, Slash)
                and right.dir == "\\" and right.arg == left.result):
            return bwd(right.result, left.arg)
    return None


def raise_type(rule: str, cat: Category) -> Optional[Category]:
    if cat != NP:
        return None
    if rule == "ftr":
        return fwd(S, bwd(S, NP))
    if rule == "btr":
        vp = bwd(S, NP)
        return bwd(vp, fwd(vp, NP))
    return None


def lexical_rules(cat: Category) -> list[Category]:
    """Targets of the unary lexical rules for ``cat``."""
    out = []
    if isinstance(cat, Atom) and cat.name == "N":
        out.append(NP)
    if isinstance(cat, Slash) and cat.dir == "\\" and cat.arg == DM:
        out.append(cat.result)
    return out


def unary(rule: str, cat: Category) -> list[Category]:
    if rule == "lex":
        return lexical_rules(cat)
    r = raise_type(rule, cat)
    return [r] if r is not None else []


# --------------------------------------------------------------------------
# validation

@dataclass(frozen=True)
class Violation:
    node_id: str
    message: str


def walk(tree: DerivTree, node_id: str = "0") -> Iterator[tuple[str, DerivTree]]:
    yield node_id, tree
    if isinstance(tree, Node):
        yield from walk(tree.left, node_id + ".0")
        if tree.right is not None:
            yield from walk(tree.right, node_id + ".1")


def validate_tree(tree: DerivTree) -> list[Violation]:
    """Every node whose category does not follow from its children."""
    problems = []
    for node_id, t in walk(tree):
        if isinstance(t, Leaf):
            if t.pos not in POS_TAGS:
                problems.append(Violation(node_id, f"unknown POS tag {t.pos!r}"))
            continue
        if t.rule not in RULES:
            problems.append(Violation(node_id, f"unknown rule {t.rule!r}"))
        elif t.rule in BINARY_RULES:
            if t.right is None:
                problems.append(Violation(node_id, f"{t.rule} needs two children"))
            elif combine(t.rule, t.left.category, t.right.category) != t.category:
                problems.append(Violation(
                    node_id,
                    f"{t.rule} of {t.left.category} and {t.right.category} does not give {t.category}",
                ))
        else:
            if t.right is not None:
                problems.append(Violation(node_id, f"{t.rule} takes one child"))
            elif t.category not in unary(t.rule, t.left.category):
                problems.append(Violation(
                    node_id, f"{t.rule} does not map {t.left.category} to {t.category}"
                ))
    return problems


# --------------------------------------------------------------------------
# documents

def to_document(tree: DerivTree) -> dict:
    if isinstance(tree, Leaf):
        return {"surface": tree.surface, "lemma": tree.lemma, "pos": tree.pos,
                "category": str(tree.category)}
    kids = [tree.left] + ([tree.right] if tree.right is not None else [])
    return {"rule": tree.rule, "category": str(tree.category),
            "children": [to_document(k) for k in kids]}


def ingest_derivation(document) -> DerivTree:
    """Build and validate a tree from a derivation document (dict or JSON)."""
    if isinstance(document, str):
        try:
            document = json.loads(document) if document.strip() else None
        except json.JSONDecodeError as exc:
            raise SchemaError(f"not JSON: {exc}") from exc
    if not document:
        raise SchemaError("empty derivation document")
    tree = _build(document, "0")
    problems = validate_tree(tree)
    if problems:
        raise RuleMismatch(problems[0].node_id, problems[0].message)
    return tree


def _category(doc, node_id) -> Category:
    text = doc.get("category")
    if not isinstance(text, str):
        raise SchemaError(f"node {node_id}: missing category")
    try:
        return parse_category(text)
    except CategoryParseError as exc:
        raise CategoryParseError(f"node {node_id}: {exc}", exc.position) from exc


def _build(doc, node_id) -> DerivTree:
    if not isinstance(doc, dict):
        raise SchemaError(f"node {node_id}: expected an object")
    if "children" in doc:
        kids = doc["children"]
        if not isinstance(kids, list) or not 1 <= len(kids) <= 2:
            raise SchemaError(f"node {node_id}: children must hold one or two nodes")
        rule = doc.get("rule")
        if not isinstance(rule, str):
            raise SchemaError(f"node {node_id}: missing rule")
        left = _build(kids[0], node_id + ".0")
        right = _build(kids[1], node_id + ".1") if len(kids) == 2 else None
        return Node(rule, _category(doc, node_id), left, right)
    for key in ("surface", "lemma", "pos"):
        if not isinstance(doc.get(key), str):
            raise SchemaError(f"node {node_id}: leaf lacks {key!r}")
    return Leaf(doc["surface"], doc["lemma"], doc["pos"], _category(doc, node_id))


def tree_shape(tree: DerivTree):
    """Everything but categories, for checking feature-only rewrites."""
    if isinstance(tree, Leaf):
        return ("leaf", tree.surface, tree.lemma, tree.pos)
    right = tree_shape(tree.right) if tree.right is not None else None
    return (tree.rule, tree_shape(tree.left), right)


def count_rule(tree: DerivTree, rules) -> int:
    return sum(1 for _, t in walk(tree) if isinstance(t, Node) and t.rule in rules)


def with_category(tree: DerivTree, category: Category) -> DerivTree:
    return replace(tree, category=category)


def sentence(tree: DerivTree) -> str:
    return " ".join(leaf.surface for leaf in tree.leaves)
