"""CCG categories, derivation trees, lexicon, CKY parser and rewrite passes."""

from .category import (
    MONOTONE_FEATURES,
    NP,
    PP,
    Atom,
    Category,
    CategoryParseError,
    N,
    S,
    Slash,
    parse_category,
    strip_features,
)
from .cky import cky_parse, rank_key
from .lexicon import Entry, Lexicon, OutOfVocabulary, Quantity, Token, split_quantity
from .rewrite import merge_numerals, rewrite_monotonicity_features
from .tree import (
    DM,
    POS_TAGS,
    DerivTree,
    Leaf,
    Node,
    RuleMismatch,
    SchemaError,
    Violation,
    ingest_derivation,
    to_document,
    tree_shape,
    validate_tree,
)
