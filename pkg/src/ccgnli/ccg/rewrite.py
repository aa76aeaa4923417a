"""Tree transformation passes run between parsing and composition.

Two passes replace a general tree-surgery layer:

* ``merge_numerals`` fuses multiword numeric expressions ("less than five",
  "at most nine", "5 feet") into single tokens before parsing;
* ``rewrite_monotonicity_features`` marks downward and non-monotone
  quantifiers as ``N[down]/N`` and ``N[nm]/N`` and carries the feature up
  the nominal spine to the NP boundary.
"""

from __future__ import annotations

from dataclasses import replace

from ..logic.numerals import numeral_value
from .category import Atom, Slash, strip_features
from .lexicon import Lexicon, Token
from .tree import DerivTree, Leaf, Node

QUANTITY_PREFIXES = {
    ("less", "than"): "less-than",
    ("fewer", "than"): "fewer-than",
    ("more", "than"): "more-than",
    ("at", "least"): "at-least",
    ("at", "most"): "at-most",
    ("exactly",): "exactly",
    ("only",): "only",
}

UNITS = {
    "foot": "feet", "feet": "feet", "inch": "inches", "inches": "inches",
    "meter": "meters", "meters": "meters", "metre": "meters", "metres": "meters",
    "centimeters": "cm", "cm": "cm", "kilograms": "kg", "kg": "kg",
    "pounds": "pounds", "pound": "pounds", "miles": "miles", "mile": "miles",
    "years": "years", "year": "years",
}

_N_OVER_N = Slash("/", Atom("N"), Atom("N"))


def _num_text(value) -> str:
    return str(value.numerator) if value.denominator == 1 else f"{value.numerator}/{value.denominator}"


def merge_numerals(tokens: list[Token]) -> list[Token]:
    """Fuse numeric quantifiers and measure phrases into single tokens."""
    out: list[Token] = []
    i = 0
    words = [t.surface.lower() for t in tokens]
    while i < len(tokens):
        family, width = None, 0
        for prefix, fam in QUANTITY_PREFIXES.items():
            k = len(prefix)
            if tuple(words[i:i + k]) == prefix and i + k < len(tokens) \
                    and numeral_value(words[i + k]) is not None:
                family, width = fam, k
                break
        j = i + width
        value = numeral_value(words[j]) if j < len(tokens) else None
        if value is None or (family is None and tokens[j].pos not in ("NUM", "DET")):
            out.append(tokens[i])
            i += 1
            continue
        unit = UNITS.get(words[j + 1]) if j + 1 < len(tokens) else None
        end = j + (2 if unit else 1)
        surface = " ".join(t.surface for t in tokens[i:end])
        parts = ([family] if family else []) + [_num_text(value)] + ([unit] if unit else [])
        out.append(Token(surface, "-".join(parts), "NUM" if unit else "DET"))
        i = end
    return out


def rewrite_monotonicity_features(tree: DerivTree, lexicon: Lexicon) -> DerivTree:
    """Mark downward/non-monotone quantifiers and propagate to the NP."""
    if isinstance(tree, Leaf):
        cls = lexicon.monotonicity(tree.lemma)
        if cls in ("down", "nm") and strip_features(tree.category) == _N_OVER_N:
            feat = frozenset([cls])
            return replace(tree, category=Slash("/", Atom("N", feat), Atom("N")))
        return tree
    left = rewrite_monotonicity_features(tree.left, lexicon)
    right = rewrite_monotonicity_features(tree.right, lexicon) if tree.right is not None else None
    cat = tree.category
    if (tree.rule == "fa" and isinstance(left.category, Slash)
            and isinstance(left.category.result, Atom) and left.category.result.name == "N"
            and isinstance(cat, Atom) and cat.name == "N"):
        cat = Atom("N", cat.features | left.category.result.features)
    return Node(tree.rule, cat, left, right)
