"""Exception types shared across the package."""


class TextfractError(Exception):
    """Base class for all errors raised by this package."""


class AlphabetError(TextfractError, ValueError):
    """Malformed alphabet definition or unknown letter."""


class AlphabetMismatchError(TextfractError, ValueError):
    """An operation received data prepared under a different alphabet."""


class TextDecodeError(TextfractError, ValueError):
    """Input file is not valid UTF-8.

    Attributes:
        path: the offending file, if known.
        offset: byte offset of the first invalid byte, relative to the
            start of the file (before BOM stripping).
    """

    def __init__(self, message, path=None, offset=None):
        super().__init__(message)
        self.path = path
        self.offset = offset


class FormatError(TextfractError, ValueError):
    """Malformed data file (CSV/TSV/word list).

    Attributes:
        path: the offending file, if known.
        line: 1-based line number of the first bad line, if known.
    """

    def __init__(self, message, path=None, line=None):
        super().__init__(message)
        self.path = path
        self.line = line

    def __str__(self):
        msg = super().__str__()
        where = ""
        if self.path is not None:
            where = f"{self.path}:"
        if self.line is not None:
            where = f"{where}{self.line}:" if where else f"line {self.line}:"
        return f"{where} {msg}" if where else msg


class FitError(TextfractError, ValueError):
    """A regression was requested on degenerate input."""


class EmptyInputError(TextfractError, ValueError):
    """An operation that needs data received none (e.g. all-zero counts)."""


class ConfigError(TextfractError, ValueError):
    """Invalid analysis configuration."""
