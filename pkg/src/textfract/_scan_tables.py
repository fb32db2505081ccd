"""Prepared lookup tables shared by both scan-kernel backends.

Character handling is decided in this order, identically in the pure and the
compiled kernels:

1. alphabet fold table (covers both case forms of every alphabet letter);
2. whitespace -> separator;
3. control/format characters (Cc/Cf) -> ignored, they are invisible to both
   the letter stream and word tokens;
4. other separators: Unicode Z*, punctuation P*, symbols S*, digits/numbers N*;
5. remaining letters and combining marks (L*/M*) are word characters that do
   not belong to the alphabet: dropped from the letter stream, kept in tokens;
6. anything else (surrogates, unassigned, private use) is dropped.

Codepoints below TABLE_LIMIT are classified through a flat byte table so the
hot loops stay branch-light; rarer codepoints fall back to unicodedata.
"""

from __future__ import annotations

import unicodedata
from array import array
from functools import lru_cache

from .alphabet import Alphabet

CLS_OTHER = 0
CLS_SEP = 1
CLS_IGNORE = 2
CLS_WORD = 3

TABLE_LIMIT = 0x800

# ASCII apostrophe and right single quotation mark.
APOSTROPHES = frozenset({"'", "’"})


def classify(ch: str) -> int:
    """Character class for a non-alphabet character."""
    if ch.isspace():
        return CLS_SEP
    cat = unicodedata.category(ch)
    if cat in ("Cc", "Cf"):
        return CLS_IGNORE
    head = cat[0]
    if head in "ZPSN":
        return CLS_SEP
    if head in "LM":
        return CLS_WORD
    return CLS_OTHER


def _build_class_table(limit: int) -> bytes:
    return bytes(classify(chr(code)) for code in range(limit))


_CLASS_TABLE = _build_class_table(TABLE_LIMIT)


class PreparedAlphabet:
    """Flat per-alphabet tables consumed by the kernels.

    Attributes:
        fold: either case form -> lowercase form (letters of any codepoint).
        index0: lowercase form -> 0-based alphabet position.
        fold_codes: int array over codepoints < limit; folded codepoint of an
            alphabet letter, or -1.
        index_codes: int array over codepoints < limit; 0-based alphabet
            position of a lowercase letter form, or -1.
        class_table: byte table of CLS_* values for codepoints < limit.
    """

    def __init__(self, alphabet: Alphabet):
        self.alphabet = alphabet
        self.size = alphabet.size
        self.limit = TABLE_LIMIT
        self.fold = dict(alphabet.fold_map)
        self.index0 = {lower: i for i, (_, lower) in enumerate(alphabet.letters)}
        self.class_table = _CLASS_TABLE

        fold_codes = array("i", [-1]) * TABLE_LIMIT
        index_codes = array("i", [-1]) * TABLE_LIMIT
        for form, lower in self.fold.items():
            code = ord(form)
            if code < TABLE_LIMIT:
                fold_codes[code] = ord(lower)
        for lower, idx in self.index0.items():
            code = ord(lower)
            if code < TABLE_LIMIT:
                index_codes[code] = idx
        self.fold_codes = fold_codes
        self.index_codes = index_codes


@lru_cache(maxsize=32)
def prepare(alphabet: Alphabet) -> PreparedAlphabet:
    """Build (and cache) the kernel tables for an alphabet."""
    return PreparedAlphabet(alphabet)
