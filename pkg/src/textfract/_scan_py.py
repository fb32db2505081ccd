"""Pure-Python scan kernels.

This is the fallback backend; textfract._speedups implements the same three
functions in C. The parity test suite holds both to identical outputs, so any
behaviour change here must be mirrored there.
"""

from __future__ import annotations

from collections import Counter

from ._scan_tables import APOSTROPHES, CLS_IGNORE, CLS_SEP, CLS_WORD, classify
from .errors import AlphabetMismatchError


def scan_letters(text, prep):
    """Fold a string into alphabet letters, counting what falls outside.

    Returns:
        (letters, dropped_count, separator_count) where letters is the
        concatenated lowercase alphabet letters in order of appearance.
    """
    fold = prep.fold
    table = prep.class_table
    limit = prep.limit
    letters = []
    append = letters.append
    dropped = 0
    seps = 0
    for ch in text:
        lower = fold.get(ch)
        if lower is not None:
            append(lower)
            continue
        code = ord(ch)
        cls = table[code] if code < limit else classify(ch)
        if cls == CLS_SEP:
            seps += 1
        elif cls != CLS_IGNORE:
            dropped += 1
    return "".join(letters), dropped, seps


def count_letters(letters, prep):
    """Count folded letters into alphabet-order slots (0-based list)."""
    counts = [0] * prep.size
    index0 = prep.index0
    for ch, n in Counter(letters).items():
        idx = index0.get(ch)
        if idx is None:
            raise AlphabetMismatchError(f"letter {ch!r} is not in the alphabet")
        counts[idx] = n
    return counts


def _is_word_char(ch, fold, table, limit):
    if ch in fold:
        return True
    code = ord(ch)
    cls = table[code] if code < limit else classify(ch)
    return cls == CLS_WORD


def scan_tokens(text, prep, strip_apostrophe_suffix=True):
    """Split a string into folded word tokens.

    Word characters are alphabet letters (folded via the alphabet table) plus
    any other Unicode letter or combining mark (folded with str.lower). An
    apostrophe between two word characters either ends the token at the stem
    (strip_apostrophe_suffix, the default; the suffix is discarded) or is kept
    verbatim inside the token. Control/format characters are invisible.
    """
    fold = prep.fold
    table = prep.class_table
    limit = prep.limit
    tokens = []
    buf = []
    skipping = False
    n = len(text)
    i = 0
    while i < n:
        ch = text[i]
        lower = fold.get(ch)
        if lower is not None:
            if not skipping:
                buf.append(lower)
            i += 1
            continue
        code = ord(ch)
        cls = table[code] if code < limit else classify(ch)
        if cls == CLS_WORD:
            if not skipping:
                buf.append(ch.lower())
            i += 1
            continue
        if cls == CLS_IGNORE:
            i += 1
            continue
        if (
            ch in APOSTROPHES
            and (buf or skipping)
            and i + 1 < n
            and _is_word_char(text[i + 1], fold, table, limit)
        ):
            if strip_apostrophe_suffix:
                skipping = True
            elif not skipping:
                buf.append(ch)
            i += 1
            continue
        if buf:
            tokens.append("".join(buf))
            buf.clear()
        skipping = False
        i += 1
    if buf:
        tokens.append("".join(buf))
    return tokens
