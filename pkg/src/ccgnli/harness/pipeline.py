"""End-to-end pipeline for one problem: tokens to verdict.

Every stage leaves its artifact in the trace. A failure at any stage is
caught, recorded as a diagnostic and turned into an ``unknown`` verdict.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path
from typing import Optional

from ..ccg import (
    Lexicon,
    OutOfVocabulary,
    cky_parse,
    ingest_derivation,
    merge_numerals,
    rewrite_monotonicity_features,
    to_document,
    validate_tree,
)
from ..ccg.cky import DEFAULT_BEAM
from ..ccg.tagger import Tagger
from ..lexknow import KnowledgeBase, candidate_pairs, load_kb, synthesize_axioms
from ..logic.syntax import to_text
from ..prover import (
    UNKNOWN,
    Budget,
    ProofTask,
    background_axioms,
    decide_entailment,
    export_tptp,
    signature,
)
from ..semantics import TemplateBank, compose
from .problems import Problem, Sentence

PROVERS = ("internal", "export-only")


class ParseFailure(ValueError):
    pass


def data_path(name: str) -> Path:
    return Path(str(resources.files("ccgnli") / "data" / name))


@dataclass
class Resources:
    tagger: Tagger
    lexicon: Lexicon
    bank: TemplateBank
    kb: KnowledgeBase

    @classmethod
    def bundled(cls, kb_path=None) -> "Resources":
        return cls(
            Tagger.load(data_path("forms.tsv")),
            Lexicon.load(data_path("lexicon.tsv"), data_path("quantifiers.tsv")),
            TemplateBank.load(data_path("templates.tsv"), data_path("scales.tsv")),
            load_kb(kb_path if kb_path is not None else data_path("kb.tsv")),
        )


_BUNDLED: dict = {}


def bundled_resources(kb_path=None) -> Resources:
    key = str(kb_path)
    if key not in _BUNDLED:
        _BUNDLED[key] = Resources.bundled(kb_path)
    return _BUNDLED[key]


@dataclass
class Config:
    kb_path: Optional[str] = None
    lexical: bool = True
    binary_labels: bool = False
    prover: str = "internal"
    budget_steps: int = 10_000
    budget_seconds: float = 10.0
    beam: int = DEFAULT_BEAM
    threshold: float = 0.0
    dump_lf: bool = False
    dump_proof: bool = False
    resources: Optional[Resources] = None

    def __post_init__(self):
        if self.prover not in PROVERS:
            raise ValueError(f"prover must be one of {PROVERS}")

    def load(self) -> Resources:
        if self.resources is None:
            self.resources = bundled_resources(self.kb_path)
        return self.resources

    @property
    def budget(self) -> Budget:
        return Budget(max_steps=self.budget_steps, max_seconds=self.budget_seconds)


@dataclass
class Outcome:
    """Verdict for one problem plus everything computed on the way."""

    problem: Problem
    label: str
    verdict: object = None
    trace: dict = field(default_factory=dict)
    diagnostics: list = field(default_factory=list)
    timings: dict = field(default_factory=dict)

    @property
    def correct(self) -> bool:
        return self.label == self.problem.gold


def derive(sentence: Sentence, res: Resources, beam: int = DEFAULT_BEAM):
    """Best derivation for a sentence whose logical form composes."""
    if sentence.derivation is not None:
        tree = ingest_derivation(sentence.derivation)
        bad = validate_tree(tree)
        if bad:
            raise ParseFailure(f"invalid derivation: {bad[0]}")
        rewritten = rewrite_monotonicity_features(tree, res.lexicon)
        return rewritten, compose(rewritten, res.bank)
    tokens = list(sentence.tokens) if sentence.tokens is not None else res.tagger.tag(sentence.text or "")
    tokens = merge_numerals(tokens)
    last_error = None
    for tree in cky_parse(tokens, res.lexicon, beam=beam):
        if validate_tree(tree):
            continue
        rewritten = rewrite_monotonicity_features(tree, res.lexicon)
        try:
            return rewritten, compose(rewritten, res.bank)
        except Exception as exc:  # try the next-ranked derivation
            last_error = exc
    if last_error is not None:
        raise ParseFailure(f"no derivation composes: {last_error}")
    raise ParseFailure(f"no S derivation for {sentence.display()!r}")


def logical_form(sentence, res: Optional[Resources] = None):
    """Convenience: the formula for a sentence given as text or ``Sentence``."""
    if isinstance(sentence, str):
        sentence = Sentence(text=sentence)
    return derive(sentence, res or bundled_resources())[1]


def _timed(outcome, stage, fn, *args):
    t0 = time.perf_counter()
    try:
        return fn(*args)
    finally:
        outcome.timings[stage] = outcome.timings.get(stage, 0.0) + time.perf_counter() - t0


def run_problem(problem: Problem, config: Optional[Config] = None) -> Outcome:
    config = config or Config()
    out = Outcome(problem, UNKNOWN)
    stage = "resources"
    try:
        res = config.load()
        stage = "parse"
        sentences = list(problem.premises) + [problem.hypothesis]
        derived = [_timed(out, "parse+compose", derive, s, res, config.beam) for s in sentences]
        out.trace["derivations"] = [to_document(t) for t, _ in derived]
        forms = [f for _, f in derived]
        out.trace["logical_forms"] = [to_text(f) for f in forms]
        premises, hypothesis = forms[:-1], forms[-1]

        stage = "lexical"
        lexical = []
        if config.lexical:
            pairs = _timed(out, stage, candidate_pairs, premises, hypothesis)
            lexical = _timed(out, stage, synthesize_axioms, pairs, res.kb)
        out.trace["lexical_axioms"] = [to_text(a) for a in lexical]

        stage = "background"
        sig = signature(premises + [hypothesis] + lexical)
        background = _timed(out, stage, background_axioms, sig, res.bank.negative_poles(),
                            problem.required_axioms)
        out.trace["background_axioms"] = [to_text(a) for a in background]
        axioms = lexical + background
        task = ProofTask(axioms, premises, hypothesis, config.budget)
        out.trace["task"] = task

        stage = "prove"
        if config.prover == "export-only":
            out.trace["tptp"] = _timed(out, "export", export_tptp, task, problem.id)
            return out
        verdict = _timed(out, stage, decide_entailment, premises, hypothesis, axioms,
                         config.budget, config.binary_labels)
        out.verdict = verdict
        out.label = verdict.label
        out.trace["proof"] = {
            "positive": verdict.positive.status.value,
            "negative": verdict.negative.status.value if verdict.negative else None,
        }
        if config.dump_proof:
            out.trace["proof"]["positive_trace"] = list(verdict.positive.trace)
            if verdict.negative:
                out.trace["proof"]["negative_trace"] = list(verdict.negative.trace)
    except OutOfVocabulary as exc:
        out.diagnostics.append(f"{stage}: out of vocabulary {exc}")
    except Exception as exc:  # any stage failure is a diagnosed unknown
        out.diagnostics.append(f"{stage}: {type(exc).__name__}: {exc}")
    return out


__all__ = [
    "PROVERS",
    "ParseFailure",
    "Resources",
    "bundled_resources",
    "data_path",
    "Config",
    "Outcome",
    "derive",
    "logical_form",
    "run_problem",
]
