"""Refutation prover, background axioms, decision protocol and TPTP export."""

from .arith import arith_satisfiable
from .background import EVENT_INDIVIDUATION, OPTIONAL_SCHEMAS, background_axioms, degree_predicates, signature
from .decide import LABELS, NO, UNKNOWN, YES, Verdict, decide_entailment
from .tableau import Budget, ProofResult, ProofTask, Status, prove
from .tptp import TPTPSyntaxError, export_tptp, is_valid_tptp, validate_tptp
