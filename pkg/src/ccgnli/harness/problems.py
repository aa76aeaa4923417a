"""Entailment problems and the two supported corpus formats.

Bundled corpus records are JSON lines::

    {"id": "...", "premises": [S, ...], "hypothesis": S, "gold": "yes",
     "tags": [...], "required_axioms": [...]}

where a sentence S is ``{"tokens": [{"surface", "lemma", "pos"}, ...]}`` or
``{"derivation": <derivation document>}``; either may carry an informative
``"text"`` field, and ``{"text": ...}`` alone is tagged when the problem is run.
"""

from __future__ import annotations

import json
import logging
import xml.etree.ElementTree as ET
from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional

from ..ccg.lexicon import Token
from ..prover.background import OPTIONAL_SCHEMAS
from ..prover.decide import LABELS

log = logging.getLogger(__name__)

TAGS = frozenset({
    "adverb-drop",
    "adverb-comparative",
    "adverb-equative",
    "adjective-comparative",
    "numeric",
    "upward",
    "downward",
    "non-monotone",
    "clausal-comparative",
    "lexical-hypernym",
    "lexical-antonym",
    "disjunction-constituent",
    "hard-case",
})

FORMATS = ("bundled-jsonl", "fracas-xml")

_FRACAS_ANSWERS = {"yes": "yes", "no": "no", "unknown": "unknown", "undef": None}


class FormatError(ValueError):
    def __init__(self, problem_id, message):
        self.problem_id = problem_id
        super().__init__(f"problem {problem_id}: {message}")


class UnknownLabel(FormatError):
    pass


@dataclass(frozen=True)
class Sentence:
    text: Optional[str] = None
    tokens: Optional[tuple] = None
    derivation: Optional[dict] = None

    def display(self) -> str:
        if self.text:
            return self.text
        if self.tokens:
            return " ".join(t.surface for t in self.tokens)
        return "<derivation>"


@dataclass
class Problem:
    id: str
    premises: list
    hypothesis: Sentence
    gold: str
    tags: frozenset = frozenset()
    required_axioms: tuple = ()
    note: str = ""

    @property
    def lexical(self) -> bool:
        return any(t.startswith("lexical") for t in self.tags)


def _sentence(doc, pid) -> Sentence:
    if isinstance(doc, str):
        return Sentence(text=doc)
    if not isinstance(doc, dict):
        raise FormatError(pid, "sentence must be an object")
    text = doc.get("text")
    if "derivation" in doc:
        if not isinstance(doc["derivation"], dict):
            raise FormatError(pid, "derivation must be an object")
        return Sentence(text=text, derivation=doc["derivation"])
    if "tokens" in doc:
        toks = []
        for t in doc["tokens"]:
            try:
                toks.append(Token(t["surface"], t["lemma"], t["pos"]))
            except (KeyError, TypeError) as exc:
                raise FormatError(pid, f"malformed token {t!r}") from exc
        return Sentence(text=text, tokens=tuple(toks))
    if isinstance(text, str):
        return Sentence(text=text)
    raise FormatError(pid, "sentence needs tokens, a derivation or text")


def problem_from_record(rec: dict) -> Problem:
    pid = str(rec.get("id", "?"))
    gold = rec.get("gold")
    if gold not in LABELS:
        raise UnknownLabel(pid, f"gold label {gold!r} is not one of {LABELS}")
    premises = rec.get("premises")
    if not isinstance(premises, list) or not premises:
        raise FormatError(pid, "at least one premise is required")
    if "hypothesis" not in rec:
        raise FormatError(pid, "missing hypothesis")
    tags = frozenset(rec.get("tags", ()))
    unknown = tags - TAGS
    if unknown:
        raise FormatError(pid, f"unknown tags {sorted(unknown)}")
    axioms = tuple(rec.get("required_axioms", ()))
    if set(axioms) - set(OPTIONAL_SCHEMAS):
        raise FormatError(pid, f"unknown axiom schemas {axioms}")
    return Problem(pid, [_sentence(p, pid) for p in premises], _sentence(rec["hypothesis"], pid),
                   gold, tags, axioms, rec.get("note", ""))


def problem_to_record(p: Problem) -> dict:
    def sent(s: Sentence):
        out = {}
        if s.text:
            out["text"] = s.text
        if s.tokens:
            out["tokens"] = [{"surface": t.surface, "lemma": t.lemma, "pos": t.pos} for t in s.tokens]
        if s.derivation:
            out["derivation"] = s.derivation
        return out

    rec = {"id": p.id, "premises": [sent(s) for s in p.premises], "hypothesis": sent(p.hypothesis),
           "gold": p.gold, "tags": sorted(p.tags)}
    if p.required_axioms:
        rec["required_axioms"] = list(p.required_axioms)
    if p.note:
        rec["note"] = p.note
    return rec


def load_problems(path, format: str = "bundled-jsonl") -> list[Problem]:
    """Read and validate a corpus; problems without a usable label are skipped."""
    if format not in FORMATS:
        raise ValueError(f"unknown format {format!r}; expected one of {FORMATS}")
    text = Path(path).read_text(encoding="utf-8")
    if not text.strip():
        return []
    if format == "fracas-xml":
        return _load_fracas(text)
    problems = []
    for lineno, line in enumerate(text.splitlines(), 1):
        if not line.strip():
            continue
        try:
            rec = json.loads(line)
        except json.JSONDecodeError as exc:
            raise FormatError(f"line {lineno}", f"invalid JSON: {exc}") from exc
        problems.append(problem_from_record(rec))
    ids = [p.id for p in problems]
    if len(set(ids)) != len(ids):
        raise FormatError("corpus", "duplicate problem ids")
    return problems


def _load_fracas(text: str) -> list[Problem]:
    root = ET.fromstring(text)
    out = []
    for node in root.iter("problem"):
        pid = node.get("id", "?")
        answer = (node.get("fracas_answer") or "").strip().lower()
        try:
            if answer not in _FRACAS_ANSWERS or _FRACAS_ANSWERS[answer] is None:
                raise UnknownLabel(pid, f"answer {answer!r} has no three-way label")
            premises = [Sentence(text=(p.text or "").strip()) for p in node.findall("p")]
            h = node.find("h")
            if not premises or h is None:
                raise FormatError(pid, "missing premise or hypothesis")
        except UnknownLabel as exc:
            log.warning("skipping %s", exc)
            continue
        out.append(Problem(f"fracas-{pid}", premises, Sentence(text=(h.text or "").strip()),
                           _FRACAS_ANSWERS[answer]))
    return out


__all__ = [
    "TAGS",
    "FORMATS",
    "FormatError",
    "UnknownLabel",
    "Sentence",
    "Problem",
    "problem_from_record",
    "problem_to_record",
    "load_problems",
]
