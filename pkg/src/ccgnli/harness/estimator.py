"""Estimator-style wrappers around the pipeline.

Nothing is learned: ``fit`` only validates the configuration and loads the
grammar, templates and knowledge base. The wrappers exist so the system
slots into scikit-learn tooling (``score``, ``cross_val_score`` for
comparison, ``get_params`` for sweeps over budgets and ablations).
"""

from __future__ import annotations

import numpy as np
from sklearn.base import BaseEstimator, ClassifierMixin, TransformerMixin
from sklearn.utils.validation import check_is_fitted

from ..logic.syntax import to_text
from ..prover import LABELS
from .pipeline import Config, Resources, derive, run_problem
from .problems import Problem, Sentence


def _sentence(s) -> Sentence:
    return s if isinstance(s, Sentence) else Sentence(text=str(s))


def as_problem(item, index: int = 0) -> Problem:
    """Accept a Problem, a (premises, hypothesis) pair or a mapping."""
    if isinstance(item, Problem):
        return item
    if isinstance(item, dict):
        premises, hypothesis = item["premises"], item["hypothesis"]
        pid = str(item.get("id", index))
    else:
        premises, hypothesis = item
        pid = str(index)
    if isinstance(premises, (str, Sentence)):
        premises = [premises]
    return Problem(pid, [_sentence(p) for p in premises], _sentence(hypothesis), "unknown")


class EntailmentClassifier(ClassifierMixin, BaseEstimator):
    """Three-way (or binary) entailment labels from the symbolic pipeline."""

    def __init__(self, kb_path=None, lexical=True, binary_labels=False,
                 budget_steps=10_000, budget_seconds=10.0):
        self.kb_path = kb_path
        self.lexical = lexical
        self.binary_labels = binary_labels
        self.budget_steps = budget_steps
        self.budget_seconds = budget_seconds

    def _config(self) -> Config:
        return Config(kb_path=self.kb_path, lexical=self.lexical, binary_labels=self.binary_labels,
                      budget_steps=self.budget_steps, budget_seconds=self.budget_seconds)

    def fit(self, X=None, y=None):
        if y is not None:
            bad = set(np.asarray(y, dtype=object)) - set(LABELS)
            if bad:
                raise ValueError(f"labels outside {LABELS}: {sorted(bad)}")
        self.config_ = self._config()
        self.config_.load()
        self.classes_ = np.array(("yes", "unknown") if self.binary_labels else LABELS)
        return self

    def run(self, X) -> list:
        """Full outcomes (verdicts, traces, diagnostics) for each input."""
        check_is_fitted(self, "config_")
        return [run_problem(as_problem(item, i), self.config_) for i, item in enumerate(X)]

    def predict(self, X):
        return np.array([o.label for o in self.run(X)], dtype=object)


class LogicalFormTransformer(TransformerMixin, BaseEstimator):
    """Sentences to logical-form strings; unparsable input maps to ``None``."""

    def __init__(self, beam: int = 8):
        self.beam = beam

    def fit(self, X=None, y=None):
        self.resources_: Resources = Config().load()
        return self

    def transform(self, X):
        check_is_fitted(self, "resources_")
        out = []
        for s in X:
            try:
                out.append(to_text(derive(_sentence(s), self.resources_, self.beam)[1]))
            except Exception:
                out.append(None)
        return np.array(out, dtype=object)


__all__ = ["EntailmentClassifier", "LogicalFormTransformer", "as_problem"]
