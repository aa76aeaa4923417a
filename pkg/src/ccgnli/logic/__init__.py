"""Typed lambda calculus and first-order formulas."""

from .numerals import is_numeral, numeral_value
from .ops import (
    LogicError,
    TypeMismatch,
    UnboundVariable,
    UnitMismatch,
    alpha_equal,
    beta_normalize,
    free_vars,
    is_formula,
    is_rectified,
    rectify,
    simplify_truth,
    substitute,
    type_of,
)
from .syntax import DEFAULT_SIGNATURE, ParseError, parse_term, parse_type, signature_of, to_text
from .terms import (
    BOTTOM,
    TOP,
    Abs,
    And,
    App,
    Cmp,
    Const,
    Eq,
    Exists,
    Forall,
    Iff,
    Imp,
    Not,
    Num,
    Or,
    Term,
    Var,
    apply,
    conj,
    disj,
    flatten_and,
    flatten_or,
    subterms,
    unapply,
)
from .types import BaseType, D, E, T, V, Arrow, SemType, arrow, unarrow
