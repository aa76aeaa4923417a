"""Natural language inference by CCG parsing, lambda composition and theorem proving.

Subpackages: ``logic`` (typed terms), ``ccg`` (categories, lexicon, parser),
``semantics`` (templates and composition), ``lexknow`` (lexical axioms),
``prover`` (tableau, arithmetic, TPTP) and ``harness`` (corpus and CLI).
"""

__version__ = "0.1.0"
