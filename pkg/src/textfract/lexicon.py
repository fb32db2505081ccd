"""Lemma dictionaries, headword frequency lists, and list comparison."""

from __future__ import annotations

import warnings
from collections import Counter
from dataclasses import dataclass
from types import MappingProxyType
from typing import Mapping

from .errors import FormatError
from .normalize import TokenSequence

PROPER_NOUN_TAGS = frozenset({"propn", "np", "proper"})


@dataclass(frozen=True)
class LemmaEntry:
    headword: str
    pos: str | None = None


@dataclass(frozen=True)
class LemmaDictionary:
    """Surface form -> headword mapping with optional part-of-speech tags.

    Unknown surface forms fall back to themselves, so a dictionary is always
    total over any token stream.
    """

    entries: Mapping[str, LemmaEntry]
    name: str = ""

    def __post_init__(self):
        object.__setattr__(self, "entries", MappingProxyType(dict(self.entries)))

    def __len__(self) -> int:
        return len(self.entries)

    def headword(self, surface: str) -> str:
        entry = self.entries.get(surface)
        return entry.headword if entry is not None else surface

    def entry(self, surface: str) -> LemmaEntry | None:
        return self.entries.get(surface)

    def is_proper_noun(self, surface: str) -> bool:
        entry = self.entries.get(surface)
        return (
            entry is not None
            and entry.pos is not None
            and entry.pos.lower() in PROPER_NOUN_TAGS
        )


def parse_lemma_dictionary(text: str, name: str = "", path=None) -> LemmaDictionary:
    """Parse surface<TAB>headword[<TAB>pos] lines.

    Blank lines and lines starting with '#' are skipped. Duplicate surface
    forms are an error reporting both line numbers.
    """
    entries: dict[str, LemmaEntry] = {}
    first_line: dict[str, int] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = [f.strip() for f in line.split("\t")]
        if len(fields) not in (2, 3):
            raise FormatError(
                f"expected surface<TAB>headword[<TAB>pos], got {len(fields)} fields",
                path=path,
                line=lineno,
            )
        surface, headword = fields[0], fields[1]
        pos = fields[2] if len(fields) == 3 else None
        if not surface or not headword:
            raise FormatError("empty surface or headword", path=path, line=lineno)
        if surface in entries:
            raise FormatError(
                f"duplicate surface form {surface!r} (first seen on line {first_line[surface]})",
                path=path,
                line=lineno,
            )
        entries[surface] = LemmaEntry(headword, pos)
        first_line[surface] = lineno
    return LemmaDictionary(entries, name=name)


def load_lemma_dictionary(path, name: str | None = None) -> LemmaDictionary:
    """Load a surface<TAB>headword[<TAB>pos] TSV file."""
    import os

    with open(path, "r", encoding="utf-8-sig") as fh:
        text = fh.read()
    if name is None:
        name = os.path.splitext(os.path.basename(str(path)))[0]
    return parse_lemma_dictionary(text, name=name, path=str(path))


@dataclass(frozen=True)
class FrequencyRow:
    rank: int
    headword: str
    count: int


@dataclass(frozen=True)
class FrequencyList:
    """Headword list ranked by descending count.

    token_total counts the running words behind the list, type_total the
    distinct surface forms, headword_total the distinct headwords (the rows).
    lemmas names the dictionary that was applied, or "none".
    """

    rows: tuple[FrequencyRow, ...]
    token_total: int
    type_total: int
    headword_total: int
    name: str = ""
    lemmas: str = "none"

    def __post_init__(self):
        if self.headword_total != len(self.rows):
            raise ValueError("headword_total must equal the number of rows")
        if not self.headword_total <= self.type_total <= self.token_total:
            raise ValueError(
                "expected headword_total <= type_total <= token_total, got "
                f"{self.headword_total}/{self.type_total}/{self.token_total}"
            )
        prev = None
        total = 0
        for i, row in enumerate(self.rows, start=1):
            if row.rank != i:
                raise ValueError(f"ranks must run 1..{len(self.rows)}, got {row.rank} at {i}")
            if row.count <= 0:
                raise ValueError(f"rank {i}: non-positive count")
            if prev is not None and row.count > prev:
                raise ValueError(f"rank {i}: counts must be non-increasing")
            prev = row.count
            total += row.count
        if total != self.token_total:
            raise ValueError(
                f"counts sum to {total}, token_total says {self.token_total}"
            )

    def __len__(self) -> int:
        return len(self.rows)

    def top(self, k: int) -> tuple[FrequencyRow, ...]:
        if k < 1:
            raise ValueError(f"k must be positive, got {k}")
        return self.rows[:k]


def build_frequency_list(
    tokens: TokenSequence,
    dictionary: LemmaDictionary | None = None,
    *,
    keep_proper_nouns: bool = True,
    name: str = "",
) -> FrequencyList:
    """Aggregate a token stream into a ranked headword list.

    With a dictionary, each token is mapped to its headword (identity for
    unknown forms); keep_proper_nouns=False drops tokens whose dictionary
    entry is tagged as a proper noun (and is a no-op without tags). Ranking
    is by descending count with ties broken by codepoint order.
    """
    surfaces = list(tokens)
    if dictionary is not None and not keep_proper_nouns:
        surfaces = [s for s in surfaces if not dictionary.is_proper_noun(s)]
    if dictionary is None:
        counter = Counter(surfaces)
    else:
        counter = Counter(dictionary.headword(s) for s in surfaces)
    ranked = sorted(counter.items(), key=lambda kv: (-kv[1], kv[0]))
    rows = tuple(
        FrequencyRow(rank, word, count)
        for rank, (word, count) in enumerate(ranked, start=1)
    )
    lemmas = "none"
    if dictionary is not None:
        lemmas = dictionary.name or "unnamed"
    return FrequencyList(
        rows=rows,
        token_total=len(surfaces),
        type_total=len(set(surfaces)),
        headword_total=len(rows),
        name=name or tokens.source_id,
        lemmas=lemmas,
    )


@dataclass(frozen=True)
class ListComparison:
    """Overlap metrics between the top-k slices of two frequency lists.

    shared_items is ordered by rank in the first list. spearman_shared is
    the rank correlation after re-ranking within the shared set (None below
    two shared items); displacement is the mean absolute difference of the
    original ranks over the shared set (None with no shared items).
    """

    k: int
    jaccard_top_k: float
    shared_items: tuple[str, ...]
    spearman_shared: float | None
    displacement: float | None

    @property
    def shared_count(self) -> int:
        return len(self.shared_items)


def compare_lists(a: FrequencyList, b: FrequencyList, k: int = 20) -> ListComparison:
    """Compare the top-k slices of two frequency lists.

    k larger than both lists is clamped to the longer list (with a warning).
    """
    if k < 1:
        raise ValueError(f"k must be positive, got {k}")
    longest = max(len(a.rows), len(b.rows))
    if longest == 0:
        raise ValueError("cannot compare empty frequency lists")
    if k > longest:
        warnings.warn(
            f"k={k} exceeds both list lengths; clamped to {longest}",
            stacklevel=2,
        )
        k = longest
    rank_a = {row.headword: row.rank for row in a.rows[:k]}
    rank_b = {row.headword: row.rank for row in b.rows[:k]}
    shared = tuple(w for w in rank_a if w in rank_b)
    union = len(set(rank_a) | set(rank_b))
    jaccard = len(shared) / union if union else 0.0
    if len(shared) >= 2:
        by_a = {w: i for i, w in enumerate(sorted(shared, key=rank_a.get), start=1)}
        by_b = {w: i for i, w in enumerate(sorted(shared, key=rank_b.get), start=1)}
        n = len(shared)
        d2 = sum((by_a[w] - by_b[w]) ** 2 for w in shared)
        spearman = 1.0 - 6.0 * d2 / (n * (n * n - 1))
    else:
        spearman = None
    if shared:
        displacement = sum(abs(rank_a[w] - rank_b[w]) for w in shared) / len(shared)
    else:
        displacement = None
    return ListComparison(
        k=k,
        jaccard_top_k=jaccard,
        shared_items=shared,
        spearman_shared=spearman,
        displacement=displacement,
    )


def frequency_list_csv(flist: FrequencyList, comments: tuple[str, ...] = ()) -> str:
    """Render a frequency list as CSV (rank,headword,count,relfreq)."""
    lines = [f"# {c}" for c in comments]
    lines.append("rank,headword,count,relfreq")
    for row in flist.rows:
        rel = format(row.count / flist.token_total, ".6g")
        lines.append(f"{row.rank},{row.headword},{row.count},{rel}")
    return "\n".join(lines) + "\n"


def parse_frequency_list(text: str, name: str = "", path=None) -> FrequencyList:
    """Parse rank,headword,count[,relfreq] CSV into a FrequencyList.

    '#' comment lines are skipped, the header row is required, ranks must be
    consecutive from 1 and counts non-increasing. Loaded lists have no
    surface-form information, so type_total == headword_total.
    """
    rows = []
    header_done = False
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = [f.strip() for f in line.split(",")]
        if not header_done:
            if [f.lower() for f in fields[:3]] != ["rank", "headword", "count"]:
                raise FormatError("expected header rank,headword,count", path=path, line=lineno)
            header_done = True
            continue
        if len(fields) < 3:
            raise FormatError(f"expected at least 3 fields, got {len(fields)}", path=path, line=lineno)
        try:
            rank = int(fields[0])
            count = int(fields[2])
        except ValueError:
            raise FormatError(f"bad integer in row {fields!r}", path=path, line=lineno) from None
        if not fields[1]:
            raise FormatError("empty headword", path=path, line=lineno)
        rows.append(FrequencyRow(rank, fields[1], count))
    if not header_done:
        raise FormatError("missing header rank,headword,count", path=path)
    token_total = sum(r.count for r in rows)
    try:
        return FrequencyList(
            rows=tuple(rows),
            token_total=token_total,
            type_total=len(rows),
            headword_total=len(rows),
            name=name,
        )
    except ValueError as exc:
        raise FormatError(str(exc), path=path) from None


def load_frequency_list(path, name: str | None = None) -> FrequencyList:
    """Load a rank,headword,count[,relfreq] CSV file."""
    import os

    with open(path, "r", encoding="utf-8-sig") as fh:
        text = fh.read()
    if name is None:
        name = os.path.splitext(os.path.basename(str(path)))[0]
    return parse_frequency_list(text, name=name, path=str(path))
