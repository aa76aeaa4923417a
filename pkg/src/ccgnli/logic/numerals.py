"""Spelled-out numerals: zero to twenty, then the tens up to one hundred."""

from __future__ import annotations

from fractions import Fraction
from typing import Optional

_UNITS = [
    "zero", "one", "two", "three", "four", "five", "six", "seven", "eight", "nine",
    "ten", "eleven", "twelve", "thirteen", "fourteen", "fifteen", "sixteen",
    "seventeen", "eighteen", "nineteen", "twenty",
]
_TENS = ["thirty", "forty", "fifty", "sixty", "seventy", "eighty", "ninety"]

NUMERAL_WORDS: dict[str, int] = {w: i for i, w in enumerate(_UNITS)}
NUMERAL_WORDS.update({w: 30 + 10 * i for i, w in enumerate(_TENS)})
NUMERAL_WORDS["hundred"] = 100
NUMERAL_WORDS["a-hundred"] = 100
NUMERAL_WORDS["one-hundred"] = 100


def numeral_value(word: str) -> Optional[Fraction]:
    """Value of a numeral written as digits or as a word, else None."""
    w = word.lower()
    if w in NUMERAL_WORDS:
        return Fraction(NUMERAL_WORDS[w])
    try:
        return Fraction(w)
    except (ValueError, ZeroDivisionError):
        return None


def is_numeral(word: str) -> bool:
    return numeral_value(word) is not None
