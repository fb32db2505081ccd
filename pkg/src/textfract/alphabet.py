"""Ordered alphabets with explicit case-folding tables.

An :class:`Alphabet` is an ordered sequence of (uppercase, lowercase) letter
pairs. The position of a letter in that order is its *interval*: a 1-based
index used as the abscissa of the alphabetical frequency profile. Index 0 is
reserved for the placeholder preceding the first letter and is never assigned
to a real letter.

Case folding is table-driven (upper form -> lower form), never delegated to
locale-aware library calls; this is what makes dotted/dotless I behave
correctly for Turkish regardless of process locale.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from .errors import AlphabetError


@dataclass(frozen=True)
class Alphabet:
    """Ordered letter inventory.

    Args:
        letters: (upper, lower) pairs in alphabet order. Each form is a
            single code point; a caseless letter may use the same code point
            for both forms.
        name: optional label used in reports.
    """

    letters: tuple[tuple[str, str], ...]
    name: str = ""

    def __post_init__(self):
        if not self.letters:
            raise AlphabetError("alphabet has no letters")
        uppers = []
        lowers = []
        for pair in self.letters:
            if len(pair) != 2:
                raise AlphabetError(f"letter entry {pair!r} is not an (upper, lower) pair")
            upper, lower = pair
            for form in (upper, lower):
                if not isinstance(form, str) or len(form) != 1:
                    raise AlphabetError(f"letter form {form!r} is not a single code point")
            uppers.append(upper)
            lowers.append(lower)
        if len(set(lowers)) != len(lowers):
            raise AlphabetError("duplicate lowercase letter form")
        if len(set(uppers)) != len(uppers):
            raise AlphabetError("duplicate uppercase letter form")
        for upper, lower in self.letters:
            # An upper form may not double as the lower form of another letter:
            # the fold map would be ambiguous.
            if upper != lower and upper in set(lowers):
                raise AlphabetError(f"letter form {upper!r} is both upper and lower case")

    @property
    def size(self) -> int:
        """Number of letters (K)."""
        return len(self.letters)

    @cached_property
    def fold_map(self) -> dict[str, str]:
        """Mapping from either case form to the lowercase form."""
        table = {}
        for upper, lower in self.letters:
            table[lower] = lower
            table[upper] = lower
        return table

    @cached_property
    def _interval_by_form(self) -> dict[str, int]:
        table = {}
        for i, (upper, lower) in enumerate(self.letters, start=1):
            table[lower] = i
            table[upper] = i
        return table

    def __contains__(self, ch: str) -> bool:
        return ch in self._interval_by_form

    def interval(self, letter: str) -> int:
        """1-based position of a letter (either case form) in the alphabet."""
        try:
            return self._interval_by_form[letter]
        except KeyError:
            raise AlphabetError(f"{letter!r} is not a letter of alphabet {self.name or '?'}") from None

    def lower_at(self, interval: int) -> str:
        """Lowercase form of the letter at a 1-based position."""
        if not 1 <= interval <= self.size:
            raise AlphabetError(f"interval {interval} out of range 1..{self.size}")
        return self.letters[interval - 1][1]

    def upper_at(self, interval: int) -> str:
        """Uppercase form of the letter at a 1-based position."""
        if not 1 <= interval <= self.size:
            raise AlphabetError(f"interval {interval} out of range 1..{self.size}")
        return self.letters[interval - 1][0]

    def fold(self, ch: str) -> str | None:
        """Lowercase form for an alphabet letter, None for anything else."""
        return self.fold_map.get(ch)

    @classmethod
    def parse(cls, text: str, name: str = "") -> "Alphabet":
        """Parse an alphabet definition.

        One letter per line as ``UPPER<TAB>lower``; blank lines and lines
        starting with ``#`` are skipped.
        """
        pairs = []
        for lineno, raw in enumerate(text.splitlines(), start=1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            fields = line.split("\t")
            if len(fields) != 2:
                raise AlphabetError(f"line {lineno}: expected UPPER<TAB>lower, got {raw!r}")
            upper, lower = fields[0].strip(), fields[1].strip()
            if len(upper) != 1 or len(lower) != 1:
                raise AlphabetError(f"line {lineno}: letter forms must be single code points")
            pairs.append((upper, lower))
        return cls(tuple(pairs), name=name)

    @classmethod
    def from_file(cls, path, name: str | None = None) -> "Alphabet":
        """Load an alphabet definition from a UTF-8 file (see :meth:`parse`)."""
        import os

        with open(path, "r", encoding="utf-8-sig") as fh:
            text = fh.read()
        if name is None:
            name = os.path.splitext(os.path.basename(str(path)))[0]
        try:
            return cls.parse(text, name=name)
        except AlphabetError as exc:
            raise AlphabetError(f"{path}: {exc}") from None


# 29-letter Turkish alphabet. The pairings are the whole point: I folds to
# dotless ı and İ folds to dotted i.
TURKISH = Alphabet(
    (
        ("A", "a"),
        ("B", "b"),
        ("C", "c"),
        ("Ç", "ç"),
        ("D", "d"),
        ("E", "e"),
        ("F", "f"),
        ("G", "g"),
        ("Ğ", "ğ"),
        ("H", "h"),
        ("I", "ı"),
        ("İ", "i"),
        ("J", "j"),
        ("K", "k"),
        ("L", "l"),
        ("M", "m"),
        ("N", "n"),
        ("O", "o"),
        ("Ö", "ö"),
        ("P", "p"),
        ("R", "r"),
        ("S", "s"),
        ("Ş", "ş"),
        ("T", "t"),
        ("U", "u"),
        ("Ü", "ü"),
        ("V", "v"),
        ("Y", "y"),
        ("Z", "z"),
    ),
    name="turkish",
)
