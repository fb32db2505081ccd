"""Accessors for the bundled reference data.

The package ships a handful of small published datasets used by the test
suite and handy for demos: letter counts and rarest-to-commonest order
strings for four Orhan Pamuk novels, their published top-20 word lists, the
top 20 headwords of a written-Turkish frequency dictionary (Göz 2003), a
default Turkish function-word list, and a tiny sample lemma dictionary.
"""

from __future__ import annotations

from functools import lru_cache
from importlib import resources

from .alphabet import TURKISH
from .counts import LetterHistogram, parse_histogram_csv
from .errors import FormatError
from .lexicon import FrequencyList, LemmaDictionary, parse_frequency_list, parse_lemma_dictionary

NOVELS = ("snow", "red", "black-book", "white-castle")

_TOP20_FILES = {
    "snow": "snow_top20.csv",
    "red": "red_top20.csv",
    "black-book": "black_book_top20.csv",
    "white-castle": "white_castle_top20.csv",
}


def _read(name: str) -> str:
    return (resources.files(__package__ + ".data") / name).read_text(encoding="utf-8")


@lru_cache(maxsize=None)
def snow_letter_counts() -> LetterHistogram:
    """Published letter histogram of the novel Snow (651,909 letters)."""
    return parse_histogram_csv(_read("snow_letters.csv"), TURKISH, path="snow_letters.csv")


@lru_cache(maxsize=None)
def dictionary_top20() -> FrequencyList:
    """Top 20 headwords of written Turkish (Göz 2003 frequency dictionary)."""
    return parse_frequency_list(_read("goz2003_top20.csv"), name="goz2003", path="goz2003_top20.csv")


@lru_cache(maxsize=None)
def novel_top20(novel: str) -> FrequencyList:
    """Published top-20 word list of one of the four novels (see NOVELS)."""
    try:
        fname = _TOP20_FILES[novel]
    except KeyError:
        raise ValueError(f"unknown novel {novel!r}; expected one of {NOVELS}") from None
    return parse_frequency_list(_read(fname), name=novel, path=fname)


@lru_cache(maxsize=None)
def zipf_order_strings() -> dict[str, str]:
    """Published rarest-to-commonest letter order strings, verbatim.

    Two of the published strings contain typos (see the data file); they are
    kept as printed.
    """
    out = {}
    for lineno, raw in enumerate(_read("zipf_orders.tsv").splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split("\t")
        if len(fields) != 2:
            raise FormatError("expected novel<TAB>order", path="zipf_orders.tsv", line=lineno)
        out[fields[0]] = fields[1]
    return out


@lru_cache(maxsize=None)
def default_function_words() -> frozenset[str]:
    """The bundled Turkish function-word list."""
    words = set()
    for raw in _read("function_words_tr.txt").splitlines():
        line = raw.strip()
        if line and not line.startswith("#"):
            words.add(line)
    return frozenset(words)


@lru_cache(maxsize=None)
def sample_lemmas() -> LemmaDictionary:
    """The bundled sample lemma dictionary (illustrative, not exhaustive)."""
    return parse_lemma_dictionary(_read("sample_lemmas.tsv"), name="sample_lemmas", path="sample_lemmas.tsv")
