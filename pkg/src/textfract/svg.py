"""Hand-built SVG charts.

No plotting dependency: each function assembles a complete, self-contained
SVG document string. Output is deterministic -- fixed geometry and styling,
coordinates always formatted to two decimals, and annotation strings arrive
pre-formatted from the caller so chart text matches the numbers in the other
report files byte for byte.
"""

from __future__ import annotations

from xml.sax.saxutils import escape

_FONT = 'font-family="Helvetica, Arial, sans-serif"'
_POINT_FILL = "#2b6cb0"
_LINE_STROKE = "#c53030"
_BAR_FILL = "#2b6cb0"
_CELL_FILL = "#9ecae1"
_GRID_STROKE = "#d7dde4"
_AXIS_STROKE = "#444444"


def _f(v: float) -> str:
    return format(v, ".2f")


def _tick_label(v: float) -> str:
    return format(v, ".3g")


class _Frame:
    """Maps data coordinates into a padded plot rectangle."""

    def __init__(self, width, height, xmin, xmax, ymin, ymax,
                 pad_l=64, pad_r=20, pad_t=42, pad_b=50):
        if xmax <= xmin:
            xmin, xmax = xmin - 0.5, xmax + 0.5
        if ymax <= ymin:
            ymin, ymax = ymin - 0.5, ymax + 0.5
        self.width = width
        self.height = height
        self.xmin, self.xmax = xmin, xmax
        self.ymin, self.ymax = ymin, ymax
        self.left = pad_l
        self.top = pad_t
        self.plot_w = width - pad_l - pad_r
        self.plot_h = height - pad_t - pad_b

    def sx(self, x: float) -> float:
        return self.left + (x - self.xmin) / (self.xmax - self.xmin) * self.plot_w

    def sy(self, y: float) -> float:
        return self.top + (self.ymax - y) / (self.ymax - self.ymin) * self.plot_h

    @property
    def right(self) -> float:
        return self.left + self.plot_w

    @property
    def bottom(self) -> float:
        return self.top + self.plot_h


def _doc(width: int, height: int, body: list[str]) -> str:
    head = (
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">'
    )
    bg = f'<rect x="0" y="0" width="{width}" height="{height}" fill="#ffffff"/>'
    return "\n".join([head, bg, *body, "</svg>"]) + "\n"


def _frame_chrome(frame: _Frame, title: str, xlabel: str, ylabel: str,
                  xticks, yticks) -> list[str]:
    parts = []
    parts.append(
        f'<text x="{_f(frame.width / 2)}" y="24" text-anchor="middle" {_FONT} '
        f'font-size="15" font-weight="bold">{escape(title)}</text>'
    )
    for tx in xticks:
        px = frame.sx(tx)
        parts.append(
            f'<line x1="{_f(px)}" y1="{_f(frame.top)}" x2="{_f(px)}" '
            f'y2="{_f(frame.bottom)}" stroke="{_GRID_STROKE}" stroke-width="1"/>'
        )
        parts.append(
            f'<text x="{_f(px)}" y="{_f(frame.bottom + 18)}" text-anchor="middle" '
            f'{_FONT} font-size="11">{_tick_label(tx)}</text>'
        )
    for ty in yticks:
        py = frame.sy(ty)
        parts.append(
            f'<line x1="{_f(frame.left)}" y1="{_f(py)}" x2="{_f(frame.right)}" '
            f'y2="{_f(py)}" stroke="{_GRID_STROKE}" stroke-width="1"/>'
        )
        parts.append(
            f'<text x="{_f(frame.left - 8)}" y="{_f(py + 4)}" text-anchor="end" '
            f'{_FONT} font-size="11">{_tick_label(ty)}</text>'
        )
    parts.append(
        f'<rect x="{_f(frame.left)}" y="{_f(frame.top)}" width="{_f(frame.plot_w)}" '
        f'height="{_f(frame.plot_h)}" fill="none" stroke="{_AXIS_STROKE}" stroke-width="1"/>'
    )
    parts.append(
        f'<text x="{_f(frame.left + frame.plot_w / 2)}" y="{_f(frame.bottom + 38)}" '
        f'text-anchor="middle" {_FONT} font-size="12">{escape(xlabel)}</text>'
    )
    parts.append(
        f'<text x="18" y="{_f(frame.top + frame.plot_h / 2)}" text-anchor="middle" '
        f'{_FONT} font-size="12" '
        f'transform="rotate(-90 18 {_f(frame.top + frame.plot_h / 2)})">{escape(ylabel)}</text>'
    )
    return parts


def _annotation_block(frame: _Frame, annotations) -> list[str]:
    parts = []
    for i, line in enumerate(annotations):
        parts.append(
            f'<text x="{_f(frame.right - 10)}" y="{_f(frame.top + 18 + 16 * i)}" '
            f'text-anchor="end" {_FONT} font-size="12">{escape(line)}</text>'
        )
    return parts


def _spread(lo: float, hi: float, margin: float = 0.05) -> tuple[float, float]:
    span = hi - lo
    if span <= 0:
        return lo - 0.5, hi + 0.5
    return lo - margin * span, hi + margin * span


def _even_ticks(lo: float, hi: float, n: int = 5) -> list[float]:
    step = (hi - lo) / (n - 1)
    return [lo + i * step for i in range(n)]


def render_scatter(points, *, title: str, xlabel: str, ylabel: str,
                   fit: tuple[float, float] | None = None,
                   annotations=(), width: int = 640, height: int = 440) -> str:
    """Scatter plot with an optional fitted line y = slope*x + intercept."""
    pts = [(float(x), float(y)) for x, y in points]
    if not pts:
        raise ValueError("no points to plot")
    xmin, xmax = _spread(min(p[0] for p in pts), max(p[0] for p in pts))
    ymin, ymax = _spread(min(p[1] for p in pts), max(p[1] for p in pts))
    frame = _Frame(width, height, xmin, xmax, ymin, ymax)
    body = _frame_chrome(frame, title, xlabel, ylabel,
                         _even_ticks(xmin, xmax), _even_ticks(ymin, ymax))
    if fit is not None:
        slope, intercept = fit
        body.append(
            '<clipPath id="plot-area">'
            f'<rect x="{_f(frame.left)}" y="{_f(frame.top)}" '
            f'width="{_f(frame.plot_w)}" height="{_f(frame.plot_h)}"/></clipPath>'
        )
        x0, x1 = frame.xmin, frame.xmax
        y0, y1 = slope * x0 + intercept, slope * x1 + intercept
        body.append(
            f'<line clip-path="url(#plot-area)" x1="{_f(frame.sx(x0))}" y1="{_f(frame.sy(y0))}" '
            f'x2="{_f(frame.sx(x1))}" y2="{_f(frame.sy(y1))}" '
            f'stroke="{_LINE_STROKE}" stroke-width="1.5"/>'
        )
    for x, y in pts:
        body.append(
            f'<circle cx="{_f(frame.sx(x))}" cy="{_f(frame.sy(y))}" r="3.5" '
            f'fill="{_POINT_FILL}" fill-opacity="0.85"/>'
        )
    body.extend(_annotation_block(frame, annotations))
    return _doc(width, height, body)


def render_bars(labels, values, *, title: str, ylabel: str,
                annotations=(), width: int = 720, height: int = 420) -> str:
    """Bar chart with one labelled bar per item."""
    labels = list(labels)
    values = [float(v) for v in values]
    if not labels or len(labels) != len(values):
        raise ValueError("labels and values must be same nonzero length")
    top = max(values)
    if top <= 0:
        top = 1.0
    frame = _Frame(width, height, 0.0, float(len(labels)), 0.0, top * 1.05)
    body = _frame_chrome(frame, title, "", ylabel, [], _even_ticks(0.0, top * 1.05))
    slot = frame.plot_w / len(labels)
    bar_w = slot * 0.8
    for i, (label, value) in enumerate(zip(labels, values)):
        x = frame.left + i * slot + slot * 0.1
        y = frame.sy(value)
        body.append(
            f'<rect x="{_f(x)}" y="{_f(y)}" width="{_f(bar_w)}" '
            f'height="{_f(frame.bottom - y)}" fill="{_BAR_FILL}" fill-opacity="0.85"/>'
        )
        body.append(
            f'<text x="{_f(x + bar_w / 2)}" y="{_f(frame.bottom + 16)}" text-anchor="middle" '
            f'{_FONT} font-size="10">{escape(str(label))}</text>'
        )
    body.extend(_annotation_block(frame, annotations))
    return _doc(width, height, body)


def render_box_grid(points, cells, m: int, *, title: str,
                    annotations=(), width: int = 520) -> str:
    """Unit-square dyadic grid with occupied cells shaded and points drawn."""
    n = 1 << m
    height = width
    frame = _Frame(width, height, 0.0, 1.0, 0.0, 1.0, pad_l=46, pad_r=24, pad_t=42, pad_b=40)
    body = [
        f'<text x="{_f(width / 2)}" y="24" text-anchor="middle" {_FONT} '
        f'font-size="15" font-weight="bold">{escape(title)}</text>'
    ]
    cell_w = frame.plot_w / n
    cell_h = frame.plot_h / n
    for cx, cy in sorted(cells):
        x = frame.left + cx * cell_w
        y = frame.bottom - (cy + 1) * cell_h
        body.append(
            f'<rect x="{_f(x)}" y="{_f(y)}" width="{_f(cell_w)}" height="{_f(cell_h)}" '
            f'fill="{_CELL_FILL}" fill-opacity="0.7"/>'
        )
    for i in range(n + 1):
        px = frame.left + i * cell_w
        py = frame.top + i * cell_h
        body.append(
            f'<line x1="{_f(px)}" y1="{_f(frame.top)}" x2="{_f(px)}" y2="{_f(frame.bottom)}" '
            f'stroke="{_GRID_STROKE}" stroke-width="0.8"/>'
        )
        body.append(
            f'<line x1="{_f(frame.left)}" y1="{_f(py)}" x2="{_f(frame.right)}" y2="{_f(py)}" '
            f'stroke="{_GRID_STROKE}" stroke-width="0.8"/>'
        )
    body.append(
        f'<rect x="{_f(frame.left)}" y="{_f(frame.top)}" width="{_f(frame.plot_w)}" '
        f'height="{_f(frame.plot_h)}" fill="none" stroke="{_AXIS_STROKE}" stroke-width="1"/>'
    )
    for x, y in points:
        body.append(
            f'<circle cx="{_f(frame.sx(float(x)))}" cy="{_f(frame.sy(float(y)))}" r="3" '
            f'fill="{_POINT_FILL}"/>'
        )
    body.extend(_annotation_block(frame, annotations))
    return _doc(width, height, body)
