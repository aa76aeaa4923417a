"""Table-driven tokenizer, lemmatizer and POS tagger for the bundled fragment."""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from pathlib import Path

from ..logic.numerals import is_numeral
from .lexicon import OutOfVocabulary, Token

_WORD = re.compile(r"[A-Za-z0-9]+(?:[-'][A-Za-z0-9]+)*")


@dataclass
class Tagger:
    forms: dict[str, tuple[str, str]] = field(default_factory=dict)

    def tag(self, sentence: str) -> list[Token]:
        """Tokens with lemma and POS; punctuation is dropped."""
        out = []
        for m in _WORD.finditer(sentence):
            word = m.group(0)
            low = word.lower()
            if low in self.forms:
                lemma, pos = self.forms[low]
            elif is_numeral(low):
                lemma, pos = low, "NUM"
            elif word[0].isupper():
                lemma, pos = low, "PROPN"
            else:
                raise OutOfVocabulary(word)
            out.append(Token(word, lemma, pos))
        return out

    @classmethod
    def load(cls, path) -> "Tagger":
        tagger = cls()
        for line in Path(path).read_text(encoding="utf-8").splitlines():
            if not line.strip() or line.startswith("#"):
                continue
            surface, lemma, pos = (f.strip() for f in line.split("\t"))
            tagger.forms[surface] = (lemma, pos)
        return tagger
