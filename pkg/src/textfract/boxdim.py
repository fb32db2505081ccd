"""Box-counting dimension of letter-frequency profiles.

The alphabet-ordered letter profile is embedded in the unit square
(x = scaled alphabet position, y = count scaled by the maximum), covered
with dyadic grids of side r = 2**-m, and the growth of the number of
occupied cells N(r) is fitted against 1/r in log-log space. Cells are
half-open [a*r, (a+1)*r) with coordinate 1.0 folded into the last cell, so
every point lands in exactly one cell.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import pairwise
from typing import Iterable

from .counts import LetterHistogram
from .errors import EmptyInputError, FitError
from .powerlaw import PowerLawFit, _make_fit

MODES = ("points", "polyline")


@dataclass(frozen=True)
class ProfileEmbedding:
    """A letter-frequency profile scaled into the unit square.

    points are (x, y) with x strictly increasing from 0 to 1 and max(y) == 1.
    mode selects what gets box-counted: the profile points alone, or the
    polyline connecting them.
    """

    points: tuple[tuple[float, float], ...]
    mode: str = "points"
    label: str = ""

    def __post_init__(self):
        if self.mode not in MODES:
            raise ValueError(f"mode must be one of {MODES}, got {self.mode!r}")
        if len(self.points) < 2:
            raise ValueError("embedding needs at least two points")
        prev = None
        top = 0.0
        for x, y in self.points:
            if not (0.0 <= x <= 1.0 and 0.0 <= y <= 1.0):
                raise ValueError(f"point ({x}, {y}) outside the unit square")
            if prev is not None and x <= prev:
                raise ValueError("x coordinates must be strictly increasing")
            prev = x
            top = max(top, y)
        if top != 1.0:
            raise ValueError("profile must be scaled so max(y) == 1")


def embed_profile(hist: LetterHistogram, mode: str = "points", label: str = "") -> ProfileEmbedding:
    """Embed a letter histogram in the unit square.

    x_k = (k-1)/(K-1) for the K alphabet positions, y_k = count / max count.
    """
    k = hist.alphabet.size
    if k < 2:
        raise ValueError("alphabet too small to embed")
    peak = max(hist.counts)
    if peak == 0:
        raise EmptyInputError("all-zero histogram cannot be embedded")
    points = tuple(
        ((i - 1) / (k - 1), count / peak)
        for i, count in enumerate(hist.counts, start=1)
    )
    return ProfileEmbedding(points, mode=mode, label=label or hist.alphabet.name)


def _scale_exponent(r: float) -> int:
    """m such that r == 2**-m, or an error for any other r."""
    if not 0.0 < r < 1.0:
        raise ValueError(f"box size must be in (0, 1), got {r}")
    mantissa, exp = math.frexp(r)
    if mantissa != 0.5:
        raise ValueError(f"box size must be a power of two (2**-m), got {r}")
    return 1 - exp


def _cell(v: float, n: int) -> int:
    idx = int(v * n)
    return n - 1 if idx >= n else idx


def _point_cells(points, n: int) -> set[tuple[int, int]]:
    return {(_cell(x, n), _cell(y, n)) for x, y in points}


def _fraction_cell(v: Fraction, n: int) -> int:
    idx = math.floor(v * n)
    return n - 1 if idx >= n else idx


def _segment_cells(p0, p1, n: int) -> Iterable[tuple[int, int]]:
    """Exact set of grid cells touched by one segment (endpoints included).

    Works in rational arithmetic: every parameter value where the segment
    crosses a cell boundary is enumerated, and the cells at those crossings
    and between them are collected. No tolerance knobs.
    """
    x0, y0 = p0
    x1, y1 = p1
    dx = x1 - x0
    dy = y1 - y0
    ts = {Fraction(0), Fraction(1)}
    for a0, d in ((x0, dx), (y0, dy)):
        if d == 0:
            continue
        lo, hi = (a0, a0 + d) if d > 0 else (a0 + d, a0)
        first = math.ceil(lo * n)
        last = math.floor(hi * n)
        for boundary in range(first, last + 1):
            t = (Fraction(boundary, n) - a0) / d
            if 0 <= t <= 1:
                ts.add(t)
    ordered = sorted(ts)
    cells = set()
    for t in ordered:
        px = x0 + t * dx
        py = y0 + t * dy
        cells.add((_fraction_cell(px, n), _fraction_cell(py, n)))
    for ta, tb in pairwise(ordered):
        tm = (ta + tb) / 2
        px = x0 + tm * dx
        py = y0 + tm * dy
        cells.add((_fraction_cell(px, n), _fraction_cell(py, n)))
    return cells


def _polyline_cells(points, n: int) -> set[tuple[int, int]]:
    exact = [(Fraction(x), Fraction(y)) for x, y in points]
    cells: set[tuple[int, int]] = set()
    for p0, p1 in pairwise(exact):
        cells.update(_segment_cells(p0, p1, n))
    return cells


def box_count(embedding: ProfileEmbedding, r: float) -> int:
    """Number of occupied cells of the dyadic grid with box size r = 2**-m."""
    m = _scale_exponent(r)
    n = 1 << m
    if embedding.mode == "points":
        return len(_point_cells(embedding.points, n))
    return len(_polyline_cells(embedding.points, n))


@dataclass(frozen=True)
class BoxScale:
    """One grid scale of a box-count series."""

    m: int
    r: float
    n_boxes: int
    log_inv_r: float
    log_n: float
    dim_ratio: float  # log N / log(1/r), the single-scale dimension estimate


@dataclass(frozen=True)
class BoxCountSeries:
    """Box counts across dyadic scales plus the log-log slope fit."""

    scales: tuple[BoxScale, ...]
    fit: PowerLawFit
    mode: str

    @property
    def dimension(self) -> float:
        return self.fit.exponent


def box_dimension(embedding: ProfileEmbedding, m_range: Iterable[int] = range(2, 9)) -> BoxCountSeries:
    """Box-counting dimension over a range of dyadic scales.

    m_range gives the scale exponents (box size 2**-m); the dimension is the
    slope of log N against log(1/r) across those scales. Occupied-cell
    counts never decrease as the grid refines, and for point mode they are
    capped by the number of profile points.
    """
    ms = sorted(set(int(m) for m in m_range))
    if len(ms) < 2:
        raise FitError("need at least two scales")
    if ms[0] < 1:
        raise ValueError(f"scale exponents must be >= 1, got {ms[0]}")
    scales = []
    for m in ms:
        r = 2.0 ** -m
        n_boxes = box_count(embedding, r)
        log_inv_r = m * math.log(2.0)
        log_n = math.log(n_boxes)
        scales.append(
            BoxScale(
                m=m,
                r=r,
                n_boxes=n_boxes,
                log_inv_r=log_inv_r,
                log_n=log_n,
                dim_ratio=log_n / log_inv_r,
            )
        )
    fit = _make_fit(
        "loglog",
        [s.log_inv_r for s in scales],
        [s.log_n for s in scales],
        sign=1.0,
    )
    return BoxCountSeries(tuple(scales), fit, embedding.mode)
