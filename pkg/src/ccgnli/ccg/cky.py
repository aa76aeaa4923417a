"""CKY chart parsing over the bundled lexicon."""

from __future__ import annotations

from .category import S, Category
from .lexicon import Lexicon, OutOfVocabulary, Token
from .tree import BINARY_RULES, DerivTree, Leaf, Node, combine, count_rule, lexical_rules, raise_type, walk

# derivations kept per chart cell and category
DEFAULT_BEAM = 8


def rank_key(tree: DerivTree) -> tuple:
    """Fewer type-raising steps first, then more left-branching."""
    raises = count_rule(tree, ("ftr", "btr"))
    left_branching = sum(
        1 for _, t in walk(tree)
        if isinstance(t, Node) and t.right is not None and isinstance(t.left, Node)
    )
    return (raises, -left_branching)


def _spurious(rule, left, right) -> bool:
    """A raised functor applied to its argument repeats plain application."""
    if rule == "fa":
        return isinstance(left, Node) and left.rule == "ftr"
    if rule == "ba":
        return isinstance(right, Node) and right.rule == "btr"
    return False


def _unary_closure(cell: dict[Category, list[DerivTree]]) -> None:
    agenda = [t for trees in cell.values() for t in trees]
    while agenda:
        tree = agenda.pop(0)
        produced = [("lex", c) for c in lexical_rules(tree.category)]
        for rule in ("ftr", "btr"):
            c = raise_type(rule, tree.category)
            if c is not None:
                produced.append((rule, c))
        for rule, cat in produced:
            new = Node(rule, cat, tree)
            cell.setdefault(cat, []).append(new)
            agenda.append(new)


def _prune(cell: dict[Category, list[DerivTree]], beam: int) -> None:
    for cat, trees in cell.items():
        trees.sort(key=rank_key)
        del trees[beam:]


def cky_parse(tokens: list[Token], lexicon: Lexicon, beam: int = DEFAULT_BEAM,
              root: Category = S) -> list[DerivTree]:
    """All derivations rooted in ``root`` (within the beam), best first."""
    n = len(tokens)
    if n == 0:
        return []
    chart: dict[tuple[int, int], dict[Category, list[DerivTree]]] = {}
    for i, tok in enumerate(tokens):
        entries = lexicon.lookup(tok)  # raises OutOfVocabulary
        cell: dict[Category, list[DerivTree]] = {}
        for entry in entries:
            cell.setdefault(entry.category, []).append(
                Leaf(tok.surface, tok.lemma, tok.pos, entry.category))
        _unary_closure(cell)
        _prune(cell, beam)
        chart[(i, i + 1)] = cell
    for width in range(2, n + 1):
        for start in range(0, n - width + 1):
            end = start + width
            cell = {}
            for mid in range(start + 1, end):
                left_cell, right_cell = chart[(start, mid)], chart[(mid, end)]
                for lcat, ltrees in left_cell.items():
                    for rcat, rtrees in right_cell.items():
                        for rule in BINARY_RULES:
                            cat = combine(rule, lcat, rcat)
                            if cat is None:
                                continue
                            bucket = cell.setdefault(cat, [])
                            for lt in ltrees:
                                for rt in rtrees:
                                    if not _spurious(rule, lt, rt):
                                        bucket.append(Node(rule, cat, lt, rt))
            _unary_closure(cell)
            _prune(cell, beam)
            chart[(start, end)] = cell
    return list(chart[(0, n)].get(root, []))


__all__ = ["cky_parse", "rank_key", "OutOfVocabulary", "DEFAULT_BEAM"]
