"""Three-way entailment decision: prove H, else prove not-H, else unknown."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Optional

from ..logic import Not
from .tableau import Budget, ProofResult, ProofTask, prove

log = logging.getLogger(__name__)

YES, NO, UNKNOWN = "yes", "no", "unknown"
LABELS = (YES, NO, UNKNOWN)


@dataclass
class Verdict:
    label: str
    positive: ProofResult
    negative: Optional[ProofResult] = None
    inconsistent_premises: bool = False


def decide_entailment(premises: list, hypothesis, axioms: list, budget: Budget = Budget(),
                      binary: bool = False, double_check: bool = False) -> Verdict:
    """Each attempt gets its own budget; ``binary`` skips the negative attempt.

    With ``double_check`` a proved hypothesis is followed by a diagnostic
    attempt on its negation; success there means the premises are
    inconsistent and is logged as a warning.
    """
    positive = prove(ProofTask(axioms, premises, hypothesis, budget))
    if positive.proved:
        verdict = Verdict(YES, positive)
        if double_check:
            diag = prove(ProofTask(axioms, premises, Not(hypothesis), budget))
            if diag.proved:
                log.warning("premises are inconsistent: both H and not-H are provable")
                verdict.inconsistent_premises = True
        return verdict
    if binary:
        return Verdict(UNKNOWN, positive)
    negative = prove(ProofTask(axioms, premises, Not(hypothesis), budget))
    return Verdict(NO if negative.proved else UNKNOWN, positive, negative)


__all__ = ["YES", "NO", "UNKNOWN", "LABELS", "Verdict", "decide_entailment"]
