"""Command-line interface, exercised through main(argv)."""

from __future__ import annotations

import json

import pytest

from textfract.cli import main

TEXT = (
    "Kar yağıyordu ve şehir sessizdi. Ka otele döndü ve pencereden karın "
    "yağışını seyretti. Kars'a giden yollar kapalıydı ama o gece her şey "
    "çok güzeldi. Kar, hep kar."
)


@pytest.fixture
def corpus(corpus_factory):
    return str(corpus_factory(TEXT, "kar.txt"))


@pytest.fixture
def corpus_b(corpus_factory):
    return str(
        corpus_factory(
            "Kırmızı bir gül açtı ve herkes onu seyretti. Gece gelince "
            "soldu ama ressam onu çoktan çizmişti.",
            "gul.txt",
        )
    )


# --- letters ------------------------------------------------------------------


def test_letters_output(corpus, capsys):
    assert main(["letters", "--corpus", corpus]) == 0
    out = capsys.readouterr().out
    assert "letter,interval,count,percent" in out
    assert out.count("\n") > 30  # 29 letter rows plus chrome
    assert "zipf order:" in out
    assert "rank-frequency fit: D = " in out


def test_letters_missing_corpus_flag(corpus, capsys):
    rc = main(["letters"])
    assert rc == 2
    assert "corpus" in capsys.readouterr().err


def test_letters_missing_file(tmp_path, capsys):
    rc = main(["letters", "--corpus", str(tmp_path / "ghost.txt")])
    assert rc == 1
    assert "ghost.txt" in capsys.readouterr().err


# --- words / funcwords ----------------------------------------------------------


def test_words_top(corpus, capsys):
    assert main(["words", "--corpus", corpus, "--top", "3"]) == 0
    out = capsys.readouterr().out
    assert "rank,word,count,relfreq" in out
    assert "1,kar," in out  # most frequent token


def test_words_keep_apostrophe_suffix(corpus, capsys):
    assert main(["words", "--corpus", corpus, "--top", "40"]) == 0
    default = capsys.readouterr().out
    assert ",kars," in default
    assert (
        main(["words", "--corpus", corpus, "--top", "40", "--keep-apostrophe-suffix"])
        == 0
    )
    kept = capsys.readouterr().out
    assert ",kars'a," in kept


def test_funcwords_builtin_list(corpus, capsys):
    assert main(["funcwords", "--corpus", corpus, "--top", "5"]) == 0
    out = capsys.readouterr().out
    assert "ve" in out
    assert "matched tokens" in out


def test_funcwords_custom_list(corpus, corpus_factory, capsys):
    words = corpus_factory("ve\nama\n", "mylist.txt")
    assert main(["funcwords", "--corpus", corpus, "--funcwords", str(words)]) == 0
    out = capsys.readouterr().out
    assert "1,ve," in out
    assert "ama" in out


# --- fractal / boxdim ------------------------------------------------------------


def test_fractal_fit_and_model_comparison(corpus, capsys):
    assert main(["fractal", "--corpus", corpus]) == 0
    out = capsys.readouterr().out
    assert "profile fit: D = " in out
    assert "loglog:" in out and "semilog_x:" in out and "semilog_y:" in out


def test_fractal_sweep(corpus, capsys):
    assert main(["fractal", "--corpus", corpus, "--sweep"]) == 0
    out = capsys.readouterr().out
    assert "convention sweep" in out
    assert out.count("display,") == 4
    assert out.count("rank,") >= 4


def test_boxdim_table(corpus, capsys):
    assert main(["boxdim", "--corpus", corpus, "--m-range", "2..4"]) == 0
    out = capsys.readouterr().out
    assert "m,r,N,log_inv_r,log_N,dim_ratio" in out
    assert "\n2,0.25," in out
    assert "dimension fit: D = " in out


def test_boxdim_polyline_mode(corpus, capsys):
    assert main(["boxdim", "--corpus", corpus, "--box-mode", "polyline"]) == 0
    out = capsys.readouterr().out
    assert "(polyline)" in out


def test_boxdim_comma_m_range(corpus, capsys):
    assert main(["boxdim", "--corpus", corpus, "--m-range", "2,5"]) == 0
    out = capsys.readouterr().out
    assert "\n2,0.25," in out
    assert "\n5,0.03125," in out


def test_bad_m_range_is_usage_error(corpus, capsys):
    assert main(["boxdim", "--corpus", corpus, "--m-range", "banana"]) == 2
    assert main(["boxdim", "--corpus", corpus, "--m-range", "8..2"]) == 2


# --- freqlist --------------------------------------------------------------------


def test_freqlist_plain(corpus, capsys):
    assert main(["freqlist", "--corpus", corpus, "--top", "5"]) == 0
    out = capsys.readouterr().out
    assert "lemmas = none" in out
    assert "rank,headword,count,relfreq" in out


def test_freqlist_with_lemmas_and_propn(corpus, corpus_factory, capsys):
    lem = corpus_factory("ka\tKa\tpropn\nkarın\tkar\n", "lem.tsv")
    assert main(["freqlist", "--corpus", corpus, "--lemmas", str(lem)]) == 0
    out = capsys.readouterr().out
    assert "lemmas = lem" in out
    assert ",Ka," in out
    assert main(
        [
            "freqlist",
            "--corpus",
            corpus,
            "--lemmas",
            str(lem),
            "--drop-proper-nouns",
        ]
    ) == 0
    out2 = capsys.readouterr().out
    assert ",Ka," not in out2


# --- compare ---------------------------------------------------------------------


def test_compare_saved_lists(tmp_path, capsys):
    from textfract.datasets import _read

    goz = tmp_path / "goz2003_top20.csv"
    red = tmp_path / "red_top20.csv"
    goz.write_text(_read("goz2003_top20.csv"), encoding="utf-8")
    red.write_text(_read("red_top20.csv"), encoding="utf-8")
    assert main(["compare", "--lists", str(goz), str(red), "--k", "20"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload[0]["shared_count"] == 13
    assert payload[0]["jaccard_top_k"] == pytest.approx(0.481481, abs=1e-6)
    assert payload[0]["spearman_shared"] == pytest.approx(0.769231, abs=1e-6)


def test_compare_corpora_pairwise(corpus, corpus_b, capsys):
    assert main(["compare", "--corpus", corpus, corpus_b, "--k", "5"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert len(payload) == 1
    assert payload[0]["k"] == 5


def test_compare_needs_two_sources(corpus, capsys):
    assert main(["compare", "--corpus", corpus]) == 2


# --- report ----------------------------------------------------------------------


def test_report_end_to_end(corpus, corpus_b, tmp_path, capsys):
    out = tmp_path / "rep"
    rc = main(
        [
            "report",
            "--corpus",
            corpus,
            corpus_b,
            "--out",
            str(out),
            "--formats",
            "csv,json",
            "--k",
            "5",
        ]
    )
    assert rc == 0
    assert (out / "manifest.json").is_file()
    manifest = json.loads((out / "manifest.json").read_text(encoding="utf-8"))
    assert manifest["comparisons"] == 1
    suffixes = {p.suffix for p in out.rglob("*") if p.is_file()}
    assert ".svg" not in suffixes


def test_report_partial_failure_exit_code(corpus, tmp_path, capsys):
    out = tmp_path / "rep"
    rc = main(
        ["report", "--corpus", corpus, str(tmp_path / "ghost.txt"), "--out", str(out)]
    )
    assert rc == 1
    manifest = json.loads((out / "manifest.json").read_text(encoding="utf-8"))
    assert len(manifest["errors"]) == 1


def test_report_config_file_merge(corpus, tmp_path, capsys):
    cfg = tmp_path / "cfg.json"
    cfg.write_text(
        json.dumps({"formats": ["csv"], "m_range": [2, 3, 4]}), encoding="utf-8"
    )
    out = tmp_path / "rep"
    rc = main(
        ["report", "--corpus", corpus, "--config", str(cfg), "--out", str(out)]
    )
    assert rc == 0
    names = {p.name for p in out.rglob("*") if p.is_file()}
    assert "report.json" not in names  # config file's formats applied
    boxcsv = next(p for p in out.rglob("*box*.csv"))
    lines = boxcsv.read_text(encoding="utf-8").splitlines()
    data_rows = [l for l in lines if l and not l.startswith("#") and l[0].isdigit()]
    assert len(data_rows) == 3


def test_config_file_unknown_key(corpus, tmp_path, capsys):
    cfg = tmp_path / "cfg.json"
    cfg.write_text(json.dumps({"tyop": 1}), encoding="utf-8")
    rc = main(["letters", "--corpus", corpus, "--config", str(cfg)])
    assert rc == 2
    assert "tyop" in capsys.readouterr().err


def test_version_flag(capsys):
    assert main(["--version"]) == 0
    assert "textfract" in capsys.readouterr().out


def test_custom_alphabet(corpus_factory, capsys):
    alpha = corpus_factory("A\ta\nB\tb\nC\tc\n", "abc.txt")
    corpus = corpus_factory("abc cab bac", "tiny.txt")
    assert main(["letters", "--corpus", str(corpus), "--alphabet", str(alpha)]) == 0
    out = capsys.readouterr().out
    assert "A,1,3," in out
    assert "C,3,3," in out
