"""Benchmark the compiled scanning kernels against the pure-Python fallback.

Generates a synthetic Turkish-like corpus (seeded, so runs are comparable),
then times scan_letters / scan_tokens / count_letters under both backends.

Usage:
    python3 benchmarks/bench_kernels.py [--size-mb 8] [--repeats 3] [--seed 1234]
"""

from __future__ import annotations

import argparse
import random
import time

from textfract._scan_tables import prepare
from textfract import _scan_py
from textfract.alphabet import TURKISH

try:
    from textfract import _speedups
except ImportError:
    _speedups = None

# Rough Turkish letter weights so the synthetic text exercises the same
# fold-table paths as real input.
_WEIGHTED = (
    ("a", 12), ("e", 9), ("i", 8), ("n", 7), ("r", 7), ("l", 6), ("ı", 5),
    ("k", 5), ("d", 5), ("m", 4), ("u", 3), ("t", 3), ("s", 3), ("y", 3),
    ("o", 3), ("b", 3), ("ü", 2), ("ş", 2), ("z", 2), ("g", 1), ("ç", 1),
    ("ğ", 1), ("c", 1), ("h", 1), ("v", 1), ("p", 1), ("ö", 1), ("f", 1),
    ("j", 1),
)


def synthetic_text(size_bytes: int, seed: int) -> str:
    rng = random.Random(seed)
    letters = [ch for ch, w in _WEIGHTED for _ in range(w)]
    out = []
    n = 0
    while n < size_bytes:
        wordlen = rng.randint(2, 11)
        word = "".join(rng.choice(letters) for _ in range(wordlen))
        if rng.random() < 0.12:
            word = word.capitalize()
        if rng.random() < 0.05:
            word += "'" + rng.choice(("de", "da", "a", "e", "ta"))
        out.append(word)
        n += len(word.encode("utf-8")) + 1
        out.append("." if rng.random() < 0.08 else " ")
    return "".join(out)


def _time(fn, *args, repeats: int) -> float:
    best = float("inf")
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--size-mb", type=float, default=8.0)
    ap.add_argument("--repeats", type=int, default=3)
    ap.add_argument("--seed", type=int, default=1234)
    args = ap.parse_args()

    size = int(args.size_mb * 1024 * 1024)
    print(f"generating {args.size_mb:g} MB synthetic corpus (seed {args.seed})...")
    text = synthetic_text(size, args.seed)
    mb = len(text.encode("utf-8")) / (1024 * 1024)
    prep = prepare(TURKISH)
    letters, _, _ = _scan_py.scan_letters(text, prep)

    backends = [("pure", _scan_py)]
    if _speedups is not None:
        backends.append(("compiled", _speedups))
    else:
        print("compiled backend not available; timing pure only")

    cases = [
        ("scan_letters", lambda m: m.scan_letters(text, prep)),
        ("scan_tokens", lambda m: m.scan_tokens(text, prep, True)),
        ("count_letters", lambda m: m.count_letters(letters, prep)),
    ]

    print(f"{'kernel':<14} {'backend':<9} {'time (s)':>9} {'MB/s':>8} {'speedup':>8}")
    for name, call in cases:
        base = None
        for bname, mod in backends:
            t = _time(call, mod, repeats=args.repeats)
            if base is None:
                base = t
            print(f"{name:<14} {bname:<9} {t:>9.4f} {mb / t:>8.1f} {base / t:>7.2f}x")


if __name__ == "__main__":
    main()
