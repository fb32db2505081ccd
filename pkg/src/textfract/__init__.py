"""Letter and word frequency statistics for literary corpora.

The package measures how letter and word frequencies decay in a text:
rank-frequency (Zipf-style) power-law fits for letters, words and function
words, the power-law profile of letter share against alphabet position, the
box-counting dimension of the letter-frequency profile, and lemmatized
headword frequency lists with overlap metrics against reference lists.

The hot per-character scans run through an optional compiled kernel with a
pure-Python fallback; see textfract._kernels.
"""

from ._kernels import active_backend
from ._version import __version__
from .alphabet import TURKISH, Alphabet
from .boxdim import BoxCountSeries, BoxScale, ProfileEmbedding, box_count, box_dimension, embed_profile
from .counts import (
    LetterHistogram,
    RankedEntry,
    RankedTable,
    filter_tokens,
    histogram_csv,
    letter_histogram,
    load_letter_histogram,
    load_word_list,
    parse_histogram_csv,
    token_histogram,
    zipf_order_string,
    zipf_rank,
)
from .errors import (
    AlphabetError,
    AlphabetMismatchError,
    ConfigError,
    EmptyInputError,
    FitError,
    FormatError,
    TextDecodeError,
    TextfractError,
)
from .lexicon import (
    FrequencyList,
    FrequencyRow,
    LemmaDictionary,
    LemmaEntry,
    ListComparison,
    build_frequency_list,
    compare_lists,
    frequency_list_csv,
    load_frequency_list,
    load_lemma_dictionary,
    parse_frequency_list,
    parse_lemma_dictionary,
)
from .normalize import NormalizedText, TokenSequence, load_text, normalize, tokenize_words
from .powerlaw import (
    PowerLawFit,
    SweepRow,
    fit_line,
    fractal_dimension,
    semilog_fits,
    zipf_convention_sweep,
    zipf_dimension,
)
from .report import AnalysisConfig, CorpusReport, ReportBundle, emit_reports, run_analysis

__all__ = [
    "__version__",
    "active_backend",
    "Alphabet",
    "TURKISH",
    "AlphabetError",
    "AlphabetMismatchError",
    "ConfigError",
    "EmptyInputError",
    "FitError",
    "FormatError",
    "TextDecodeError",
    "TextfractError",
    "load_text",
    "normalize",
    "tokenize_words",
    "NormalizedText",
    "TokenSequence",
    "LetterHistogram",
    "letter_histogram",
    "token_histogram",
    "RankedEntry",
    "RankedTable",
    "zipf_rank",
    "zipf_order_string",
    "filter_tokens",
    "histogram_csv",
    "parse_histogram_csv",
    "load_letter_histogram",
    "load_word_list",
    "PowerLawFit",
    "SweepRow",
    "fit_line",
    "fractal_dimension",
    "zipf_dimension",
    "semilog_fits",
    "zipf_convention_sweep",
    "ProfileEmbedding",
    "embed_profile",
    "box_count",
    "BoxScale",
    "BoxCountSeries",
    "box_dimension",
    "LemmaEntry",
    "LemmaDictionary",
    "load_lemma_dictionary",
    "parse_lemma_dictionary",
    "FrequencyRow",
    "FrequencyList",
    "build_frequency_list",
    "frequency_list_csv",
    "parse_frequency_list",
    "load_frequency_list",
    "ListComparison",
    "compare_lists",
    "AnalysisConfig",
    "CorpusReport",
    "ReportBundle",
    "run_analysis",
    "emit_reports",
]
