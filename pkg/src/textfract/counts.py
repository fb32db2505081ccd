"""Letter histograms, token histograms, and frequency-ranked tables."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterator, Mapping, Union

from . import _kernels
from ._scan_tables import prepare
from .alphabet import Alphabet
from .errors import AlphabetMismatchError, EmptyInputError, FormatError
from .normalize import NormalizedText, TokenSequence


@dataclass(frozen=True)
class LetterHistogram:
    """Letter counts in alphabet order.

    counts[k] is the count for the letter at interval k+1 (intervals are the
    1-based alphabet positions). Letters that never occur keep a zero slot so
    the profile always spans the whole alphabet.
    """

    alphabet: Alphabet
    counts: tuple[int, ...]

    def __post_init__(self):
        if len(self.counts) != self.alphabet.size:
            raise ValueError(
                f"expected {self.alphabet.size} counts for alphabet "
                f"{self.alphabet.name or '?'}, got {len(self.counts)}"
            )
        for c in self.counts:
            if not isinstance(c, int) or c < 0:
                raise ValueError(f"invalid letter count {c!r}")

    @property
    def total(self) -> int:
        return sum(self.counts)

    def count_at(self, interval: int) -> int:
        """Count for the letter at a 1-based alphabet position."""
        if not 1 <= interval <= self.alphabet.size:
            raise ValueError(f"interval {interval} out of range 1..{self.alphabet.size}")
        return self.counts[interval - 1]

    def percentages(self) -> tuple[float, ...]:
        """Letter shares as percentages of the total (sums to 100)."""
        total = self.total
        if total == 0:
            raise EmptyInputError("empty histogram has no percentage profile")
        return tuple(100.0 * c / total for c in self.counts)

    def items(self) -> Iterator[tuple[str, int, int]]:
        """Yield (uppercase letter, interval, count) in alphabet order."""
        for i, (upper, _) in enumerate(self.alphabet.letters, start=1):
            yield upper, i, self.counts[i - 1]


def letter_histogram(text: NormalizedText, alphabet: Alphabet | None = None) -> LetterHistogram:
    """Count the letters of a normalized text into alphabet order.

    The histogram total always equals len(text.letters).
    """
    if alphabet is not None and alphabet != text.alphabet:
        raise AlphabetMismatchError(
            "text was normalized under a different alphabet than requested"
        )
    counts = _kernels.count_letters(text.letters, prepare(text.alphabet))
    return LetterHistogram(text.alphabet, tuple(counts))


def token_histogram(tokens: TokenSequence) -> dict[str, int]:
    """Token counts by folded surface form."""
    return dict(Counter(tokens.tokens))


@dataclass(frozen=True)
class RankedEntry:
    rank: int
    label: str
    count: int


@dataclass(frozen=True)
class RankedTable:
    """Items ranked by descending count; rank 1 is the most frequent.

    Ties are broken deterministically (alphabet position for letters,
    codepoint order for words); zero-count items are excluded.
    """

    entries: tuple[RankedEntry, ...]
    kind: str = ""

    def __post_init__(self):
        if not self.entries:
            raise EmptyInputError("ranked table has no entries")
        prev = None
        for i, entry in enumerate(self.entries, start=1):
            if entry.rank != i:
                raise ValueError(f"ranks must run 1..{len(self.entries)}, got {entry.rank} at {i}")
            if entry.count <= 0:
                raise ValueError(f"rank {i}: non-positive count {entry.count}")
            if prev is not None and entry.count > prev:
                raise ValueError(f"rank {i}: counts must be non-increasing")
            prev = entry.count

    def __len__(self) -> int:
        return len(self.entries)

    @property
    def total(self) -> int:
        return sum(e.count for e in self.entries)

    def relative_frequencies(self) -> tuple[float, ...]:
        total = self.total
        return tuple(e.count / total for e in self.entries)


def zipf_rank(source: Union[LetterHistogram, Mapping[str, int]], kind: str = "") -> RankedTable:
    """Rank letters or tokens by descending count.

    Letter histograms rank uppercase letter labels with ties broken by
    alphabet position; mappings (token histograms) break ties by label.
    Zero-count items are dropped; all-zero input is an error.
    """
    if isinstance(source, LetterHistogram):
        items = [
            (upper, count, interval)
            for upper, interval, count in source.items()
            if count > 0
        ]
        items.sort(key=lambda t: (-t[1], t[2]))
        kind = kind or "letters"
    else:
        for label, count in source.items():
            if count < 0:
                raise ValueError(f"negative count for {label!r}")
        items = [(label, count, 0) for label, count in source.items() if count > 0]
        items.sort(key=lambda t: (-t[1], t[0]))
        kind = kind or "words"
    if not items:
        raise EmptyInputError("nothing to rank: all counts are zero")
    entries = tuple(
        RankedEntry(rank, label, count)
        for rank, (label, count, _) in enumerate(items, start=1)
    )
    return RankedTable(entries, kind=kind)


def zipf_order_string(table: RankedTable) -> str:
    """Labels concatenated from least to most frequent.

    For letter tables this is the compact rarest-to-commonest signature
    string of a text.
    """
    return "".join(entry.label for entry in reversed(table.entries))


def filter_tokens(tokens: TokenSequence, words, mode: str = "keep") -> TokenSequence:
    """Keep or remove the tokens that belong to a word set.

    mode="keep" retains only members of the set (e.g. a function-word list);
    mode="remove" drops them.
    """
    if mode not in ("keep", "remove"):
        raise ValueError(f"mode must be 'keep' or 'remove', got {mode!r}")
    word_set = frozenset(words)
    if not word_set:
        raise EmptyInputError("empty word set")
    if mode == "keep":
        kept = tuple(t for t in tokens.tokens if t in word_set)
    else:
        kept = tuple(t for t in tokens.tokens if t not in word_set)
    return TokenSequence(kept, source_id=tokens.source_id)


def histogram_csv(hist: LetterHistogram, comments: tuple[str, ...] = ()) -> str:
    """Render a letter histogram as CSV (letter,interval,count,percent)."""
    lines = [f"# {c}" for c in comments]
    lines.append("letter,interval,count,percent")
    total = hist.total
    for upper, interval, count in hist.items():
        pct = format(100.0 * count / total, ".6g") if total else ""
        lines.append(f"{upper},{interval},{count},{pct}")
    return "\n".join(lines) + "\n"


def parse_histogram_csv(text: str, alphabet: Alphabet, path=None) -> LetterHistogram:
    """Parse letter,interval,count[,percent] CSV into a histogram.

    '#' comment lines are skipped; the header row is required. Letters
    missing from the file get a zero count; duplicate or misplaced letters
    are an error.
    """
    counts = [0] * alphabet.size
    seen = set()
    header_done = False
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = [f.strip() for f in line.split(",")]
        if not header_done:
            if [f.lower() for f in fields[:3]] != ["letter", "interval", "count"]:
                raise FormatError(
                    "expected header letter,interval,count", path=path, line=lineno
                )
            header_done = True
            continue
        if len(fields) < 3:
            raise FormatError(f"expected at least 3 fields, got {len(fields)}", path=path, line=lineno)
        letter, interval_s, count_s = fields[0], fields[1], fields[2]
        try:
            interval = int(interval_s)
            count = int(count_s)
        except ValueError:
            raise FormatError(f"bad integer in row {fields!r}", path=path, line=lineno) from None
        if count < 0:
            raise FormatError(f"negative count for {letter!r}", path=path, line=lineno)
        try:
            expected = alphabet.interval(letter)
        except Exception:
            raise FormatError(f"{letter!r} is not in the alphabet", path=path, line=lineno) from None
        if interval != expected:
            raise FormatError(
                f"{letter!r} has interval {expected}, file says {interval}", path=path, line=lineno
            )
        if interval in seen:
            raise FormatError(f"duplicate letter {letter!r}", path=path, line=lineno)
        seen.add(interval)
        counts[interval - 1] = count
    if not header_done:
        raise FormatError("missing header letter,interval,count", path=path)
    return LetterHistogram(alphabet, tuple(counts))


def load_letter_histogram(path, alphabet: Alphabet) -> LetterHistogram:
    """Load a letter,interval,count[,percent] CSV file."""
    with open(path, "r", encoding="utf-8-sig") as fh:
        return parse_histogram_csv(fh.read(), alphabet, path=str(path))


def load_word_list(path) -> frozenset[str]:
    """Load a word set: one folded word per line, '#' comments allowed."""
    words = set()
    with open(path, "r", encoding="utf-8-sig") as fh:
        for raw in fh:
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            words.add(line)
    if not words:
        raise FormatError("word list is empty", path=str(path))
    return frozenset(words)
