"""End-to-end analysis pipeline and deterministic report emission.

run_analysis turns a configuration into per-corpus results plus pairwise
frequency-list comparisons; emit_reports writes them as CSV/JSON/SVG files.
Emission is byte-deterministic: the same corpora and configuration always
produce identical files (numbers rounded to six significant digits before
serialization, sorted JSON keys, no timestamps).
"""

from __future__ import annotations

import hashlib
import json
import math
import os
import re
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path

from ._version import __version__
from .alphabet import TURKISH, Alphabet
from .boxdim import BoxCountSeries, box_dimension, embed_profile, MODES, _point_cells, _polyline_cells
from .counts import (
    LetterHistogram,
    RankedTable,
    filter_tokens,
    histogram_csv,
    letter_histogram,
    load_word_list,
    token_histogram,
    zipf_order_string,
    zipf_rank,
)
from .datasets import default_function_words
from .errors import ConfigError, EmptyInputError, TextfractError
from .lexicon import (
    FrequencyList,
    ListComparison,
    build_frequency_list,
    compare_lists,
    frequency_list_csv,
    load_lemma_dictionary,
)
from .normalize import load_text, normalize, tokenize_words
from .powerlaw import PowerLawFit, fractal_dimension, semilog_fits, zipf_dimension
from .svg import render_bars, render_box_grid, render_scatter

FORMATS = ("csv", "json", "svg")

DEFAULT_M_RANGE = (2, 3, 4, 5, 6, 7, 8)


def round_sig(x: float, digits: int = 6) -> float:
    """Round to significant digits (round-half-even, via the g format)."""
    if not math.isfinite(x):
        raise ValueError(f"cannot serialize non-finite value {x}")
    # + 0.0 folds -0.0 into 0.0 so degenerate fits never print "-0"
    return float(format(x, f".{digits}g")) + 0.0


def jnum(x: float) -> str:
    """The exact string a rounded number gets in the JSON output."""
    return json.dumps(round_sig(x))


@dataclass(frozen=True)
class AnalysisConfig:
    """Everything a full analysis run depends on.

    alphabet/lemmas/funcwords are file paths; None selects the built-in
    Turkish alphabet, no lemmatization, and the bundled function-word list
    respectively.
    """

    corpora: tuple[str, ...]
    alphabet: str | None = None
    lemmas: str | None = None
    funcwords: str | None = None
    m_range: tuple[int, ...] = DEFAULT_M_RANGE
    out_dir: str = "textfract-out"
    formats: tuple[str, ...] = FORMATS
    compare_k: int = 20
    strip_apostrophe_suffix: bool = True
    box_mode: str = "points"

    def __post_init__(self):
        if not self.corpora:
            raise ConfigError("no corpora given")
        if not self.formats:
            raise ConfigError("no output formats selected")
        for fmt in self.formats:
            if fmt not in FORMATS:
                raise ConfigError(f"unknown format {fmt!r}; expected one of {FORMATS}")
        if len(set(self.formats)) != len(self.formats):
            raise ConfigError("duplicate output format")
        ms = list(self.m_range)
        if len(ms) < 2:
            raise ConfigError("m_range needs at least two scales")
        if sorted(set(ms)) != ms:
            raise ConfigError("m_range must be strictly increasing")
        if ms[0] < 1:
            raise ConfigError("m_range values must be >= 1")
        if self.compare_k < 1:
            raise ConfigError("compare_k must be positive")
        if self.box_mode not in MODES:
            raise ConfigError(f"box_mode must be one of {MODES}")

    @classmethod
    def from_mapping(cls, mapping) -> "AnalysisConfig":
        """Build a config from a plain dict (e.g. parsed JSON)."""
        known = {f: None for f in cls.__dataclass_fields__}
        unknown = [k for k in mapping if k not in known]
        if unknown:
            raise ConfigError(f"unknown config keys: {', '.join(sorted(unknown))}")
        kwargs = dict(mapping)
        for key in ("corpora", "m_range", "formats"):
            if key in kwargs and kwargs[key] is not None:
                kwargs[key] = tuple(kwargs[key])
        return cls(**kwargs)

    def to_mapping(self) -> dict:
        return {
            "corpora": list(self.corpora),
            "alphabet": self.alphabet,
            "lemmas": self.lemmas,
            "funcwords": self.funcwords,
            "m_range": list(self.m_range),
            "out_dir": self.out_dir,
            "formats": list(self.formats),
            "compare_k": self.compare_k,
            "strip_apostrophe_suffix": self.strip_apostrophe_suffix,
            "box_mode": self.box_mode,
        }

    def analysis_mapping(self) -> dict:
        """The config fields that determine report content.

        out_dir only says where files go, so it stays out of the manifest
        and the hash; identical analyses into different directories produce
        byte-identical reports.
        """
        mapping = self.to_mapping()
        del mapping["out_dir"]
        return mapping

    def config_hash(self) -> str:
        canonical = json.dumps(self.analysis_mapping(), sort_keys=True, separators=(",", ":"))
        return hashlib.sha256(canonical.encode("utf-8")).hexdigest()


@dataclass(frozen=True)
class CorpusReport:
    """All per-corpus results of one analysis run."""

    source: str
    slug: str
    alphabet_name: str
    lemmas_name: str
    histogram: LetterHistogram
    dropped_count: int
    separator_count: int
    token_count: int
    letters_table: RankedTable
    words_table: RankedTable
    funcwords_table: RankedTable | None
    zipf_order: str
    fits: dict[str, PowerLawFit]
    box: BoxCountSeries
    frequency_list: FrequencyList


@dataclass(frozen=True)
class ReportBundle:
    """The complete output of run_analysis."""

    config: AnalysisConfig
    reports: tuple[CorpusReport, ...]
    comparisons: tuple[tuple[str, str, ListComparison], ...]
    errors: tuple[str, ...] = field(default_factory=tuple)

    @property
    def ok(self) -> bool:
        return not self.errors


def _slugify(path: str) -> str:
    stem = Path(path).stem.lower()
    slug = re.sub(r"[^a-z0-9]+", "-", stem).strip("-")
    return slug or "corpus"


def _unique_slugs(paths) -> list[str]:
    slugs = []
    seen = {}
    for path in paths:
        base = _slugify(path)
        seen[base] = seen.get(base, 0) + 1
        slugs.append(base if seen[base] == 1 else f"{base}-{seen[base]}")
    return slugs


def _analyze_one(path: str, slug: str, alphabet: Alphabet, funcwords, lemma_dict, config: AnalysisConfig) -> CorpusReport:
    raw = load_text(path)
    norm = normalize(raw, alphabet, source_id=path)
    hist = letter_histogram(norm)
    tokens = tokenize_words(
        raw,
        alphabet,
        strip_apostrophe_suffix=config.strip_apostrophe_suffix,
        source_id=path,
    )
    if hist.total == 0:
        raise EmptyInputError(f"{path}: no alphabet letters found")
    if len(tokens) == 0:
        raise EmptyInputError(f"{path}: no word tokens found")

    letters_table = zipf_rank(hist)
    words_table = zipf_rank(token_histogram(tokens), kind="words")
    fits: dict[str, PowerLawFit] = {}
    fits["alphabetical"] = fractal_dimension(hist)
    fits["zipf_letters"] = zipf_dimension(letters_table)
    fits["zipf_words"] = zipf_dimension(words_table)

    func_tokens = filter_tokens(tokens, funcwords, mode="keep")
    funcwords_table = None
    if len(func_tokens) > 0:
        counts = token_histogram(func_tokens)
        if len(counts) >= 2:
            funcwords_table = zipf_rank(counts, kind="function words")
            fits["zipf_function_words"] = zipf_dimension(funcwords_table)

    # The three-model comparison for letters runs along the ascending
    # frequency order (display orientation); see the package docs.
    fits["letters_display_loglog"] = zipf_dimension(letters_table, orientation="display")
    sx, sy = semilog_fits(letters_table, orientation="display")
    fits["letters_display_semilog_x"] = sx
    fits["letters_display_semilog_y"] = sy

    embedding = embed_profile(hist, mode=config.box_mode, label=slug)
    box = box_dimension(embedding, config.m_range)
    freq = build_frequency_list(tokens, lemma_dict, name=slug)

    return CorpusReport(
        source=path,
        slug=slug,
        alphabet_name=alphabet.name or "custom",
        lemmas_name=lemma_dict.name if lemma_dict is not None else "none",
        histogram=hist,
        dropped_count=norm.dropped_count,
        separator_count=norm.separator_count,
        token_count=len(tokens),
        letters_table=letters_table,
        words_table=words_table,
        funcwords_table=funcwords_table,
        zipf_order=zipf_order_string(letters_table),
        fits=fits,
        box=box,
        frequency_list=freq,
    )


def run_analysis(config: AnalysisConfig) -> ReportBundle:
    """Run the full analysis for every corpus in the configuration.

    Per-corpus failures (unreadable file, bad encoding, empty text) are
    collected as error strings rather than aborting the whole run; the
    bundle is ok only when the error list is empty.
    """
    errors = []
    alphabet = TURKISH
    if config.alphabet is not None:
        alphabet = Alphabet.from_file(config.alphabet)
    funcwords = (
        load_word_list(config.funcwords)
        if config.funcwords is not None
        else default_function_words()
    )
    lemma_dict = (
        load_lemma_dictionary(config.lemmas) if config.lemmas is not None else None
    )

    slugs = _unique_slugs(config.corpora)

    def worker(arg):
        path, slug = arg
        try:
            return _analyze_one(path, slug, alphabet, funcwords, lemma_dict, config)
        except (TextfractError, OSError) as exc:
            return f"{path}: {exc}"

    jobs = list(zip(config.corpora, slugs))
    if len(jobs) > 1:
        with ThreadPoolExecutor(max_workers=min(8, len(jobs))) as pool:
            outcomes = list(pool.map(worker, jobs))
    else:
        outcomes = [worker(jobs[0])]

    reports = []
    for outcome in outcomes:
        if isinstance(outcome, str):
            errors.append(outcome)
        else:
            reports.append(outcome)

    comparisons = []
    for i in range(len(reports)):
        for j in range(i + 1, len(reports)):
            a, b = reports[i], reports[j]
            comparisons.append(
                (a.slug, b.slug, compare_lists(a.frequency_list, b.frequency_list, config.compare_k))
            )

    return ReportBundle(
        config=config,
        reports=tuple(reports),
        comparisons=tuple(comparisons),
        errors=tuple(errors),
    )


def _fit_record(fit: PowerLawFit) -> dict:
    return {
        "transform": fit.transform,
        "exponent": round_sig(fit.exponent),
        "prefactor": round_sig(fit.prefactor),
        "r_squared": round_sig(fit.r_squared),
        "n_points": fit.n_points,
    }


def _ranked_csv(table: RankedTable, label_field: str, comments) -> str:
    lines = [f"# {c}" for c in comments]
    lines.append(f"rank,{label_field},count,relfreq")
    total = table.total
    for e in table.entries:
        lines.append(f"{e.rank},{e.label},{e.count},{format(e.count / total, '.6g')}")
    return "\n".join(lines) + "\n"


def _boxcount_csv(box: BoxCountSeries, comments) -> str:
    lines = [f"# {c}" for c in comments]
    lines.append("m,r,N,log_inv_r,log_N,dim_ratio")
    for s in box.scales:
        lines.append(
            f"{s.m},{format(s.r, '.6g')},{s.n_boxes},"
            f"{format(s.log_inv_r, '.6g')},{format(s.log_n, '.6g')},{format(s.dim_ratio, '.6g')}"
        )
    return "\n".join(lines) + "\n"


def _report_json(report: CorpusReport, config: AnalysisConfig) -> dict:
    freq = report.frequency_list
    top = [
        {
            "rank": row.rank,
            "headword": row.headword,
            "count": row.count,
            "relfreq": round_sig(row.count / freq.token_total),
        }
        for row in freq.top(config.compare_k)
    ]
    return {
        "source": report.source,
        "slug": report.slug,
        "alphabet": report.alphabet_name,
        "lemmas": report.lemmas_name,
        "letters": {
            "total": report.histogram.total,
            "dropped": report.dropped_count,
            "separators": report.separator_count,
        },
        "tokens": {"total": report.token_count},
        "zipf_order": report.zipf_order,
        "fits": {name: _fit_record(fit) for name, fit in sorted(report.fits.items())},
        "box_counting": {
            "mode": report.box.mode,
            "dimension": round_sig(report.box.dimension),
            "r_squared": round_sig(report.box.fit.r_squared),
            "scales": [
                {
                    "m": s.m,
                    "r": round_sig(s.r),
                    "n_boxes": s.n_boxes,
                    "log_inv_r": round_sig(s.log_inv_r),
                    "log_n": round_sig(s.log_n),
                    "dim_ratio": round_sig(s.dim_ratio),
                }
                for s in report.box.scales
            ],
        },
        "frequency_list": {
            "token_total": freq.token_total,
            "type_total": freq.type_total,
            "headword_total": freq.headword_total,
            "top": top,
        },
    }


def _corpus_svgs(report: CorpusReport) -> dict[str, str]:
    hist = report.histogram
    pcts = hist.percentages()
    labels = [upper for upper, _, _ in hist.items()]
    out = {}

    out["profile_bars.svg"] = render_bars(
        labels,
        pcts,
        title=f"Letter profile: {report.slug}",
        ylabel="share of letters (%)",
        annotations=(f"letters = {hist.total}",),
    )

    fit = report.fits["alphabetical"]
    pairs = [
        (math.log(1.0 / interval), math.log(100.0 * count / hist.total))
        for _, interval, count in hist.items()
        if count > 0
    ]
    out["alphabetical_fit.svg"] = render_scatter(
        pairs,
        title=f"Letter share vs alphabet position: {report.slug}",
        xlabel="log(1 / position)",
        ylabel="log(share %)",
        fit=(fit.slope, fit.intercept),
        annotations=(
            f"D = {jnum(fit.exponent)}",
            f"R² = {jnum(fit.r_squared)}",
        ),
    )

    for key, table, word_label in (
        ("zipf_letters", report.letters_table, "letter"),
        ("zipf_words", report.words_table, "word"),
        ("zipf_function_words", report.funcwords_table, "function word"),
    ):
        if table is None or key not in report.fits:
            continue
        zfit = report.fits[key]
        rel = table.relative_frequencies()
        points = [(math.log(i), math.log(p)) for i, p in enumerate(rel, start=1)]
        out[f"{key}_fit.svg"] = render_scatter(
            points,
            title=f"{word_label.capitalize()} rank-frequency: {report.slug}",
            xlabel="log(rank)",
            ylabel="log(relative frequency)",
            fit=(zfit.slope, zfit.intercept),
            annotations=(
                f"D = {jnum(zfit.exponent)}",
                f"R² = {jnum(zfit.r_squared)}",
            ),
        )

    box = report.box
    mid = box.scales[len(box.scales) // 2]
    embedding = embed_profile(hist, mode=box.mode, label=report.slug)
    n = 1 << mid.m
    if box.mode == "points":
        cells = _point_cells(embedding.points, n)
    else:
        cells = _polyline_cells(embedding.points, n)
    out["box_grid.svg"] = render_box_grid(
        embedding.points,
        cells,
        mid.m,
        title=f"Grid cover at r = 1/{n}: {report.slug}",
        annotations=(f"N = {mid.n_boxes}",),
    )
    out["box_fit.svg"] = render_scatter(
        [(s.log_inv_r, s.log_n) for s in box.scales],
        title=f"Box counts: {report.slug}",
        xlabel="log(1 / r)",
        ylabel="log(N)",
        fit=(box.fit.slope, box.fit.intercept),
        annotations=(
            f"D = {jnum(box.dimension)}",
            f"R² = {jnum(box.fit.r_squared)}",
        ),
    )
    return out


def _dump_json(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def emit_reports(bundle: ReportBundle, out_dir: str | None = None) -> list[str]:
    """Write a bundle to disk; returns the written paths (manifest last).

    The manifest is always written; the csv/json/svg files are gated by the
    configured formats. Everything is UTF-8 with newline-only line endings.
    """
    config = bundle.config
    root = Path(out_dir if out_dir is not None else config.out_dir)
    root.mkdir(parents=True, exist_ok=True)
    written = []

    def put(relpath: str, content: str):
        path = root / relpath
        path.parent.mkdir(parents=True, exist_ok=True)
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(content)
        written.append(relpath)

    formats = set(config.formats)
    for report in bundle.reports:
        base_comments = (f"corpus: {report.source}", f"alphabet: {report.alphabet_name}")
        if "csv" in formats:
            put(f"{report.slug}/letters.csv", histogram_csv(report.histogram, base_comments))
            put(
                f"{report.slug}/letters_ranked.csv",
                _ranked_csv(report.letters_table, "letter", base_comments),
            )
            put(
                f"{report.slug}/words_ranked.csv",
                _ranked_csv(report.words_table, "word", base_comments),
            )
            if report.funcwords_table is not None:
                put(
                    f"{report.slug}/funcwords_ranked.csv",
                    _ranked_csv(report.funcwords_table, "word", base_comments),
                )
            put(
                f"{report.slug}/freqlist.csv",
                frequency_list_csv(
                    report.frequency_list,
                    base_comments + (f"lemmas: {report.lemmas_name}",),
                ),
            )
            put(f"{report.slug}/boxcount.csv", _boxcount_csv(report.box, base_comments))
        if "json" in formats:
            put(f"{report.slug}/report.json", _dump_json(_report_json(report, config)))
        if "svg" in formats:
            for name, content in sorted(_corpus_svgs(report).items()):
                put(f"{report.slug}/{name}", content)

    if "json" in formats and bundle.comparisons:
        records = []
        for slug_a, slug_b, cmp in bundle.comparisons:
            records.append(
                {
                    "a": slug_a,
                    "b": slug_b,
                    "k": cmp.k,
                    "jaccard_top_k": round_sig(cmp.jaccard_top_k),
                    "shared_count": cmp.shared_count,
                    "shared_items": list(cmp.shared_items),
                    "spearman_shared": (
                        round_sig(cmp.spearman_shared) if cmp.spearman_shared is not None else None
                    ),
                    "displacement": (
                        round_sig(cmp.displacement) if cmp.displacement is not None else None
                    ),
                }
            )
        put("comparisons.json", _dump_json(records))

    manifest = {
        "version": __version__,
        "config": config.analysis_mapping(),
        "config_hash": config.config_hash(),
        "reports": [{"slug": r.slug, "source": r.source} for r in bundle.reports],
        "comparisons": len(bundle.comparisons),
        "errors": list(bundle.errors),
        "files": sorted(written),
    }
    put("manifest.json", _dump_json(manifest))
    return [str(root / rel) for rel in written]
