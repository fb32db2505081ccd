"""Least-squares line fits on transformed coordinates and the derived
frequency-decay dimensions.

All fits are unweighted ordinary least squares on transformed data (natural
logs internally; the resulting exponents and R-squared values are invariant
under the log base). Three transforms are supported:

    loglog     log y against log x   (power law y = c * x^slope)
    semilog_x  y against log x
    semilog_y  log y against x       (exponential decay)

Rank-frequency fits accept two orientations:

    rank     i = 1 is the most frequent item (the default);
    display  i = 1 is the least frequent item, i.e. positions along the
             ascending frequency-order string, the way letter profiles are
             conventionally drawn.

The two orientations answer the same question on reversed abscissae and give
different fits; both are first-class because published letter analyses are
frequently done in display space. zipf_convention_sweep enumerates the
documented conventions side by side.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence

from .counts import LetterHistogram, RankedTable
from .errors import FitError

TRANSFORMS = ("loglog", "semilog_x", "semilog_y")
ORIENTATIONS = ("rank", "display")


def fit_line(points: Iterable[tuple[float, float]]) -> tuple[float, float, float]:
    """Ordinary least squares line through (x, y) points.

    Returns (slope, intercept, r_squared). R-squared is
    1 - SS_res / SS_tot, clamped into [0, 1] against floating-point strays;
    if all y values are equal the horizontal line is an exact fit and
    r_squared is defined as 1.0. Fewer than two points, or all x equal,
    is an error.
    """
    pts = [(float(x), float(y)) for x, y in points]
    n = len(pts)
    if n < 2:
        raise FitError(f"need at least two points, got {n}")
    xs = [p[0] for p in pts]
    ys = [p[1] for p in pts]
    if min(xs) == max(xs):
        raise FitError("degenerate fit: all x values are equal")
    mx = math.fsum(xs) / n
    my = math.fsum(ys) / n
    sxx = math.fsum((x - mx) ** 2 for x in xs)
    sxy = math.fsum((x - mx) * (y - my) for x, y in pts)
    slope = sxy / sxx
    intercept = my - slope * mx
    ss_res = math.fsum((y - (intercept + slope * x)) ** 2 for x, y in pts)
    ss_tot = math.fsum((y - my) ** 2 for y in ys)
    r2 = 1.0 if ss_tot == 0.0 else 1.0 - ss_res / ss_tot
    return slope, intercept, min(1.0, max(0.0, r2))


@dataclass(frozen=True)
class PowerLawFit:
    """A two-parameter fit on transformed coordinates.

    exponent is the decay/growth magnitude under the producing operation's
    sign convention (documented there); prefactor is exp(intercept) of the
    fitted line, which for the loglog transform is the multiplicative
    constant of the power law. The raw slope and intercept stay available.
    """

    transform: str
    exponent: float
    prefactor: float
    r_squared: float
    n_points: int
    slope: float
    intercept: float

    def __post_init__(self):
        if self.transform not in TRANSFORMS:
            raise FitError(f"unknown transform {self.transform!r}")
        if not self.prefactor > 0.0:
            raise FitError(f"prefactor must be positive, got {self.prefactor}")
        if not 0.0 <= self.r_squared <= 1.0:
            raise FitError(f"r_squared out of [0, 1]: {self.r_squared}")
        if self.n_points < 2:
            raise FitError(f"n_points must be at least 2, got {self.n_points}")

    def to_record(self) -> dict:
        """The exported fit record."""
        return {
            "transform": self.transform,
            "exponent": self.exponent,
            "prefactor": self.prefactor,
            "r_squared": self.r_squared,
            "n_points": self.n_points,
        }


def _make_fit(transform: str, xs: Sequence[float], ys: Sequence[float], sign: float) -> PowerLawFit:
    slope, intercept, r2 = fit_line(zip(xs, ys))
    return PowerLawFit(
        transform=transform,
        exponent=sign * slope,
        prefactor=math.exp(intercept),
        r_squared=r2,
        n_points=len(xs),
        slope=slope,
        intercept=intercept,
    )


def fractal_dimension(hist: LetterHistogram) -> PowerLawFit:
    """Power-law exponent of letter share against alphabet position.

    Fits log(percent share) against log(1/interval) over letters with
    nonzero counts; the exponent D is the slope in that frame, i.e. the
    decay rate of F = c / interval**D. The near-arbitrary mapping of letters
    to alphabet positions usually makes this a very weak fit (tiny
    r_squared), which is itself the interesting measurement.
    """
    total = hist.total
    pairs = [
        (interval, count)
        for _, interval, count in hist.items()
        if count > 0
    ]
    if len(pairs) < 2:
        raise FitError("need at least two letters with nonzero counts")
    xs = [math.log(1.0 / interval) for interval, _ in pairs]
    ys = [math.log(100.0 * count / total) for _, count in pairs]
    return _make_fit("loglog", xs, ys, sign=1.0)


def _positions(n: int, orientation: str) -> list[int]:
    if orientation not in ORIENTATIONS:
        raise FitError(f"unknown orientation {orientation!r}")
    # rank: 1 = most frequent. display: 1 = least frequent.
    if orientation == "rank":
        return list(range(1, n + 1))
    return list(range(n, 0, -1))


def zipf_dimension(table: RankedTable, *, orientation: str = "rank") -> PowerLawFit:
    """Power-law decay exponent of a rank-frequency table.

    Fits log(relative frequency) against log(position). The stored exponent
    is positive for the natural direction in either orientation: with
    orientation="rank" it is -slope (frequency falls as rank grows), with
    orientation="display" it is +slope (frequency rises along the ascending
    order).
    """
    n = len(table)
    if n < 2:
        raise FitError("need at least two ranked entries")
    positions = _positions(n, orientation)
    rel = table.relative_frequencies()
    xs = [math.log(i) for i in positions]
    ys = [math.log(p) for p in rel]
    sign = -1.0 if orientation == "rank" else 1.0
    return _make_fit("loglog", xs, ys, sign=sign)


def semilog_fits(table: RankedTable, *, orientation: str = "rank") -> tuple[PowerLawFit, PowerLawFit]:
    """The two semilog alternatives to the full loglog rank-frequency fit.

    Returns (semilog_x, semilog_y): relative frequency against log(position),
    and log(relative frequency) against position. Exponent signs follow the
    same convention as zipf_dimension so the three models are comparable.
    """
    n = len(table)
    if n < 2:
        raise FitError("need at least two ranked entries")
    positions = _positions(n, orientation)
    rel = table.relative_frequencies()
    sign = -1.0 if orientation == "rank" else 1.0
    sx = _make_fit("semilog_x", [math.log(i) for i in positions], list(rel), sign=sign)
    sy = _make_fit("semilog_y", [float(i) for i in positions], [math.log(p) for p in rel], sign=sign)
    return sx, sy


@dataclass(frozen=True)
class SweepRow:
    """One convention in a rank-frequency fit sweep."""

    orientation: str
    scale: str      # "relfreq" or "counts"
    exclusion: str  # "all" or "drop_min"
    exponent: float
    r_squared: float


def zipf_convention_sweep(table: RankedTable) -> tuple[SweepRow, ...]:
    """Fit the rank-frequency power law under every documented convention.

    Conventions swept: orientation (rank/display), input scale (relative
    frequency vs raw counts; provably identical slope and r_squared, the
    scale only shifts the intercept), and exclusion of the minimum-count
    entries from the fit while positions are kept (the "drop the outlier
    from the trendline" move). Rows come in a fixed order.
    """
    n = len(table)
    if n < 3:
        raise FitError("sweep needs at least three ranked entries")
    total = table.total
    counts = [e.count for e in table.entries]
    min_count = min(counts)
    rows = []
    for orientation in ORIENTATIONS:
        positions = _positions(n, orientation)
        sign = -1.0 if orientation == "rank" else 1.0
        for scale in ("relfreq", "counts"):
            values = [c / total for c in counts] if scale == "relfreq" else counts
            for exclusion in ("all", "drop_min"):
                pairs = [
                    (i, v)
                    for i, v, c in zip(positions, values, counts)
                    if exclusion == "all" or c > min_count
                ]
                if len(pairs) < 2:
                    continue
                slope, _, r2 = fit_line(
                    (math.log(i), math.log(v)) for i, v in pairs
                )
                rows.append(
                    SweepRow(orientation, scale, exclusion, sign * slope, r2)
                )
    return tuple(rows)
