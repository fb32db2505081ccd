"""Command-line interface.

Subcommands slice the analysis: letters/words/funcwords print frequency
tables and rank-frequency fits, fractal prints the alphabet-position fit and
the model comparison, boxdim the box-counting series, freqlist the headword
list, compare the overlap metrics, and report runs everything and writes the
output files.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from ._version import __version__
from .alphabet import TURKISH, Alphabet
from .boxdim import box_dimension, embed_profile
from .counts import (
    filter_tokens,
    letter_histogram,
    load_word_list,
    token_histogram,
    zipf_order_string,
    zipf_rank,
)
from .datasets import default_function_words
from .errors import ConfigError, TextfractError
from .lexicon import build_frequency_list, compare_lists, load_frequency_list, load_lemma_dictionary
from .normalize import load_text, normalize, tokenize_words
from .powerlaw import fractal_dimension, semilog_fits, zipf_convention_sweep, zipf_dimension
from .report import AnalysisConfig, emit_reports, run_analysis

_FMT = ".6g"


def _fmt(x: float) -> str:
    return format(x + 0.0 if x == 0 else x, _FMT)


def _color_enabled() -> bool:
    return sys.stdout.isatty() and not os.environ.get("TEXTFRACT_NO_COLOR")


def _heading(text: str) -> str:
    if _color_enabled():
        return f"\x1b[1;36m{text}\x1b[0m"
    return text


def _fit_line_text(label: str, fit) -> str:
    return (
        f"{label}: D = {_fmt(fit.exponent)}, R² = {_fmt(fit.r_squared)} "
        f"(n = {fit.n_points}, {fit.transform})"
    )


def _parse_m_range(text: str) -> tuple[int, ...]:
    text = text.strip()
    try:
        if ".." in text:
            lo_s, hi_s = text.split("..", 1)
            lo, hi = int(lo_s), int(hi_s)
            if hi < lo:
                raise ValueError
            return tuple(range(lo, hi + 1))
        return tuple(int(part) for part in text.split(","))
    except ValueError:
        raise ConfigError(f"bad m-range {text!r}; use e.g. 2..8 or 2,3,4") from None


def _build_config(args, require_corpora: bool = True) -> AnalysisConfig:
    base = {}
    config_path = getattr(args, "config", None)
    if config_path:
        with open(config_path, "r", encoding="utf-8") as fh:
            try:
                base = json.load(fh)
            except json.JSONDecodeError as exc:
                raise ConfigError(f"{config_path}: invalid JSON ({exc})") from None
        if not isinstance(base, dict):
            raise ConfigError(f"{config_path}: config must be a JSON object")
    merged = dict(base)

    def put(key, value):
        if value is not None:
            merged[key] = value

    put("corpora", tuple(args.corpus) if getattr(args, "corpus", None) else None)
    put("alphabet", getattr(args, "alphabet", None))
    put("lemmas", getattr(args, "lemmas", None))
    put("funcwords", getattr(args, "funcwords", None))
    m_range = getattr(args, "m_range", None)
    put("m_range", _parse_m_range(m_range) if m_range else None)
    put("out_dir", getattr(args, "out", None))
    formats = getattr(args, "formats", None)
    put("formats", tuple(f.strip() for f in formats.split(",") if f.strip()) if formats else None)
    put("compare_k", getattr(args, "k", None))
    put("box_mode", getattr(args, "box_mode", None))
    if getattr(args, "keep_apostrophe_suffix", False):
        merged["strip_apostrophe_suffix"] = False
    if require_corpora and not merged.get("corpora"):
        raise ConfigError("no corpora given (use --corpus)")
    return AnalysisConfig.from_mapping(merged)


def _load_alphabet(config: AnalysisConfig) -> Alphabet:
    if config.alphabet is not None:
        return Alphabet.from_file(config.alphabet)
    return TURKISH


def _corpus_slices(config: AnalysisConfig, alphabet: Alphabet):
    """Yield (path, raw text) per corpus, printing failures to stderr."""
    failures = 0
    for path in config.corpora:
        try:
            yield path, load_text(path)
        except (TextfractError, OSError) as exc:
            failures += 1
            print(f"error: {exc}", file=sys.stderr)
    if failures:
        raise SystemExit(1)


def cmd_letters(args) -> int:
    config = _build_config(args)
    alphabet = _load_alphabet(config)
    for path, raw in _corpus_slices(config, alphabet):
        norm = normalize(raw, alphabet, source_id=path)
        hist = letter_histogram(norm)
        print(_heading(f"== letters: {path} =="))
        print(
            f"letters = {hist.total}, dropped = {norm.dropped_count}, "
            f"separators = {norm.separator_count}"
        )
        print("letter,interval,count,percent")
        total = hist.total
        for upper, interval, count in hist.items():
            pct = _fmt(100.0 * count / total) if total else ""
            print(f"{upper},{interval},{count},{pct}")
        table = zipf_rank(hist)
        print(f"zipf order: {zipf_order_string(table)}")
        print(_fit_line_text("rank-frequency fit", zipf_dimension(table)))
    return 0


def cmd_words(args) -> int:
    config = _build_config(args)
    alphabet = _load_alphabet(config)
    for path, raw in _corpus_slices(config, alphabet):
        tokens = tokenize_words(
            raw, alphabet,
            strip_apostrophe_suffix=config.strip_apostrophe_suffix,
            source_id=path,
        )
        table = zipf_rank(token_histogram(tokens), kind="words")
        print(_heading(f"== words: {path} =="))
        print(f"tokens = {len(tokens)}, distinct = {len(table)}")
        print("rank,word,count,relfreq")
        total = table.total
        for e in table.entries[: args.top]:
            print(f"{e.rank},{e.label},{e.count},{_fmt(e.count / total)}")
        print(_fit_line_text("rank-frequency fit", zipf_dimension(table)))
    return 0


def cmd_funcwords(args) -> int:
    config = _build_config(args)
    alphabet = _load_alphabet(config)
    words = (
        load_word_list(config.funcwords)
        if config.funcwords is not None
        else default_function_words()
    )
    list_name = config.funcwords or "built-in"
    for path, raw in _corpus_slices(config, alphabet):
        tokens = tokenize_words(
            raw, alphabet,
            strip_apostrophe_suffix=config.strip_apostrophe_suffix,
            source_id=path,
        )
        kept = filter_tokens(tokens, words, mode="keep")
        print(_heading(f"== function words: {path} =="))
        print(f"list = {list_name} ({len(words)} words), matched tokens = {len(kept)}")
        if len(kept) == 0:
            print("no function-word tokens found")
            continue
        table = zipf_rank(token_histogram(kept), kind="function words")
        print("rank,word,count,relfreq")
        total = table.total
        for e in table.entries[: args.top]:
            print(f"{e.rank},{e.label},{e.count},{_fmt(e.count / total)}")
        if len(table) >= 2:
            print(_fit_line_text("rank-frequency fit", zipf_dimension(table)))
    return 0


def cmd_fractal(args) -> int:
    config = _build_config(args)
    alphabet = _load_alphabet(config)
    for path, raw in _corpus_slices(config, alphabet):
        norm = normalize(raw, alphabet, source_id=path)
        hist = letter_histogram(norm)
        print(_heading(f"== alphabet-position fit: {path} =="))
        print(_fit_line_text("profile fit", fractal_dimension(hist)))
        table = zipf_rank(hist)
        loglog = zipf_dimension(table, orientation="display")
        sx, sy = semilog_fits(table, orientation="display")
        print("model comparison along the ascending frequency order:")
        print(_fit_line_text("  loglog", loglog))
        print(_fit_line_text("  semilog_x", sx))
        print(_fit_line_text("  semilog_y", sy))
        if args.sweep:
            print("convention sweep (orientation, scale, exclusion, D, R²):")
            for row in zipf_convention_sweep(table):
                print(
                    f"  {row.orientation},{row.scale},{row.exclusion},"
                    f"{_fmt(row.exponent)},{_fmt(row.r_squared)}"
                )
    return 0


def cmd_boxdim(args) -> int:
    config = _build_config(args)
    alphabet = _load_alphabet(config)
    for path, raw in _corpus_slices(config, alphabet):
        norm = normalize(raw, alphabet, source_id=path)
        hist = letter_histogram(norm)
        embedding = embed_profile(hist, mode=config.box_mode)
        series = box_dimension(embedding, config.m_range)
        print(_heading(f"== box counting ({series.mode}): {path} =="))
        print("m,r,N,log_inv_r,log_N,dim_ratio")
        for s in series.scales:
            print(
                f"{s.m},{_fmt(s.r)},{s.n_boxes},{_fmt(s.log_inv_r)},"
                f"{_fmt(s.log_n)},{_fmt(s.dim_ratio)}"
            )
        print(_fit_line_text("dimension fit", series.fit))
    return 0


def cmd_freqlist(args) -> int:
    config = _build_config(args)
    alphabet = _load_alphabet(config)
    lemma_dict = (
        load_lemma_dictionary(config.lemmas) if config.lemmas is not None else None
    )
    for path, raw in _corpus_slices(config, alphabet):
        tokens = tokenize_words(
            raw, alphabet,
            strip_apostrophe_suffix=config.strip_apostrophe_suffix,
            source_id=path,
        )
        flist = build_frequency_list(
            tokens, lemma_dict, keep_proper_nouns=not args.drop_proper_nouns
        )
        print(_heading(f"== frequency list: {path} =="))
        print(
            f"lemmas = {flist.lemmas}, tokens = {flist.token_total}, "
            f"types = {flist.type_total}, headwords = {flist.headword_total}"
        )
        print("rank,headword,count,relfreq")
        for row in flist.top(args.top):
            print(f"{row.rank},{row.headword},{row.count},{_fmt(row.count / flist.token_total)}")
    return 0


def cmd_compare(args) -> int:
    if args.lists:
        if len(args.lists) < 2:
            raise ConfigError("--lists needs at least two files")
        flists = [load_frequency_list(p) for p in args.lists]
        k = args.k if args.k is not None else 20
    else:
        config = _build_config(args)
        if len(config.corpora) < 2:
            raise ConfigError("compare needs at least two corpora (or --lists)")
        alphabet = _load_alphabet(config)
        lemma_dict = (
            load_lemma_dictionary(config.lemmas) if config.lemmas is not None else None
        )
        flists = []
        for path, raw in _corpus_slices(config, alphabet):
            tokens = tokenize_words(
                raw, alphabet,
                strip_apostrophe_suffix=config.strip_apostrophe_suffix,
                source_id=path,
            )
            flists.append(build_frequency_list(tokens, lemma_dict, name=path))
        k = config.compare_k
    records = []
    for i in range(len(flists)):
        for j in range(i + 1, len(flists)):
            cmp = compare_lists(flists[i], flists[j], k)
            records.append(
                {
                    "a": flists[i].name,
                    "b": flists[j].name,
                    "k": cmp.k,
                    "jaccard_top_k": float(format(cmp.jaccard_top_k, _FMT)),
                    "shared_count": cmp.shared_count,
                    "shared_items": list(cmp.shared_items),
                    "spearman_shared": (
                        float(format(cmp.spearman_shared, _FMT))
                        if cmp.spearman_shared is not None
                        else None
                    ),
                    "displacement": (
                        float(format(cmp.displacement, _FMT))
                        if cmp.displacement is not None
                        else None
                    ),
                }
            )
    print(json.dumps(records, sort_keys=True, indent=2, ensure_ascii=False))
    return 0


def cmd_report(args) -> int:
    config = _build_config(args)
    bundle = run_analysis(config)
    paths = emit_reports(bundle)
    print(_heading(f"== report: {len(bundle.reports)} corpora =="))
    for path in paths:
        print(f"wrote {path}")
    for err in bundle.errors:
        print(f"error: {err}", file=sys.stderr)
    return 0 if bundle.ok else 1


def _add_common(parser: argparse.ArgumentParser, *, corpora: bool = True):
    if corpora:
        parser.add_argument(
            "--corpus",
            action="extend",
            nargs="+",
            metavar="PATH",
            default=None,
            help="corpus text file (repeat or list several)",
        )
    parser.add_argument("--alphabet", metavar="PATH", help="alphabet file (UPPER<TAB>lower); default: Turkish")
    parser.add_argument(
        "--keep-apostrophe-suffix",
        action="store_true",
        help="keep full surface forms instead of cutting tokens at in-word apostrophes",
    )
    parser.add_argument("--config", metavar="PATH", help="JSON config file; explicit flags win")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="textfract",
        description="Letter and word frequency statistics for literary corpora.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("letters", help="letter histogram, order string, rank-frequency fit")
    _add_common(p)
    p.set_defaults(func=cmd_letters)

    p = sub.add_parser("words", help="word frequency table and rank-frequency fit")
    _add_common(p)
    p.add_argument("--top", type=int, default=20, help="rows to print (default 20)")
    p.set_defaults(func=cmd_words)

    p = sub.add_parser("funcwords", help="function-word frequency table and fit")
    _add_common(p)
    p.add_argument("--funcwords", metavar="PATH", help="word list file; default: built-in Turkish list")
    p.add_argument("--top", type=int, default=20, help="rows to print (default 20)")
    p.set_defaults(func=cmd_funcwords)

    p = sub.add_parser("fractal", help="letter-share power law and model comparison")
    _add_common(p)
    p.add_argument("--sweep", action="store_true", help="also print the fit-convention sweep")
    p.set_defaults(func=cmd_fractal)

    p = sub.add_parser("boxdim", help="box-counting dimension of the letter profile")
    _add_common(p)
    p.add_argument("--m-range", metavar="SPEC", help="grid scales, e.g. 2..8 or 2,3,4 (default 2..8)")
    p.add_argument("--box-mode", choices=("points", "polyline"), help="what to cover (default points)")
    p.set_defaults(func=cmd_boxdim)

    p = sub.add_parser("freqlist", help="headword frequency list")
    _add_common(p)
    p.add_argument("--lemmas", metavar="PATH", help="lemma dictionary TSV (surface<TAB>headword[<TAB>pos])")
    p.add_argument("--top", type=int, default=20, help="rows to print (default 20)")
    p.add_argument(
        "--drop-proper-nouns",
        action="store_true",
        help="drop tokens whose dictionary entry is tagged as a proper noun",
    )
    p.set_defaults(func=cmd_freqlist)

    p = sub.add_parser("compare", help="overlap metrics between frequency lists")
    _add_common(p)
    p.add_argument("--lemmas", metavar="PATH", help="lemma dictionary TSV")
    p.add_argument("--k", type=int, default=None, help="top-k depth (default 20)")
    p.add_argument(
        "--lists",
        nargs="+",
        metavar="CSV",
        help="compare saved rank,headword,count CSV files instead of corpora",
    )
    p.set_defaults(func=cmd_compare)

    p = sub.add_parser("report", help="run the full analysis and write csv/json/svg reports")
    _add_common(p)
    p.add_argument("--lemmas", metavar="PATH", help="lemma dictionary TSV")
    p.add_argument("--funcwords", metavar="PATH", help="function-word list file")
    p.add_argument("--m-range", metavar="SPEC", help="grid scales, e.g. 2..8 or 2,3,4 (default 2..8)")
    p.add_argument("--box-mode", choices=("points", "polyline"), help="what to cover (default points)")
    p.add_argument("--out", metavar="DIR", help="output directory (default textfract-out)")
    p.add_argument("--formats", metavar="LIST", help="comma list from csv,json,svg (default all)")
    p.add_argument("--k", type=int, default=None, help="top-k depth for comparisons (default 20)")
    p.set_defaults(func=cmd_report)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except SystemExit as exc:
        if exc.code is None:
            return 0
        return exc.code if isinstance(exc.code, int) else 2
    except (TextfractError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
