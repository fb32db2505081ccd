"""Text loading, letter-stream normalization, and word tokenization."""

from __future__ import annotations

import unicodedata
from dataclasses import dataclass

from . import _kernels
from ._scan_tables import prepare
from .alphabet import TURKISH, Alphabet
from .errors import TextDecodeError

_BOM = b"\xef\xbb\xbf"


def load_text(path) -> str:
    """Read a UTF-8 text file.

    A leading byte-order mark is stripped; line endings are preserved as-is.
    Invalid UTF-8 raises TextDecodeError carrying the byte offset of the
    first bad byte (relative to the start of the file).
    """
    with open(path, "rb") as fh:
        raw = fh.read()
    shift = 0
    if raw.startswith(_BOM):
        raw = raw[len(_BOM):]
        shift = len(_BOM)
    try:
        return raw.decode("utf-8")
    except UnicodeDecodeError as exc:
        offset = exc.start + shift
        raise TextDecodeError(
            f"{path}: invalid UTF-8 at byte offset {offset}",
            path=str(path),
            offset=offset,
        ) from None


@dataclass(frozen=True)
class NormalizedText:
    """Folded letter stream of one text under one alphabet.

    letters holds only lowercase alphabet letters, in order of appearance.
    dropped_count tallies characters that are neither alphabet letters nor
    separators nor ignorable control/format characters (e.g. foreign-script
    letters); separator_count tallies whitespace, punctuation, symbols and
    digits. Every non-ignored code point of the normalized input lands in
    exactly one of the three buckets.
    """

    letters: str
    dropped_count: int
    separator_count: int
    alphabet: Alphabet
    source_id: str = ""

    def __post_init__(self):
        if self.dropped_count < 0 or self.separator_count < 0:
            raise ValueError("negative character tally")


@dataclass(frozen=True)
class TokenSequence:
    """Folded word tokens of one text, in order of appearance."""

    tokens: tuple[str, ...]
    source_id: str = ""

    def __len__(self) -> int:
        return len(self.tokens)

    def __iter__(self):
        return iter(self.tokens)


def normalize(raw: str, alphabet: Alphabet = TURKISH, source_id: str = "") -> NormalizedText:
    """Fold a raw string into its alphabet letter stream.

    The input is NFC-normalized first. Case folding is table-driven from the
    alphabet, never locale-dependent, so dotted/dotless I pairs correctly
    under the Turkish alphabet in any locale. Normalizing the returned
    letter stream again is the identity.
    """
    text = unicodedata.normalize("NFC", raw)
    letters, dropped, seps = _kernels.scan_letters(text, prepare(alphabet))
    return NormalizedText(letters, dropped, seps, alphabet, source_id)


def tokenize_words(
    raw: str,
    alphabet: Alphabet = TURKISH,
    *,
    strip_apostrophe_suffix: bool = True,
    source_id: str = "",
) -> TokenSequence:
    """Split a raw string into folded word tokens.

    Word characters are alphabet letters plus any other Unicode letter or
    combining mark; digits, punctuation, symbols and whitespace delimit
    tokens. With strip_apostrophe_suffix (the default) an apostrophe inside
    a word ends the token at the stem and the suffix is discarded
    ("Kars'a" -> "kars"); pass False to keep the full surface form.
    """
    text = unicodedata.normalize("NFC", raw)
    tokens = _kernels.scan_tokens(text, prepare(alphabet), strip_apostrophe_suffix)
    return TokenSequence(tuple(tokens), source_id)
