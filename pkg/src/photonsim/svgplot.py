"""Small hand-rolled SVG plots so the CLI has no plotting dependency."""

from __future__ import annotations

import math

import numpy as np

WIDTH = 720
HEIGHT = 480
MARGIN = 56
PALETTE = ("#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b")


def _ticks(lo: float, hi: float, n: int = 5) -> list[float]:
    """Round tick positions covering [lo, hi]."""
    if hi <= lo:
        hi = lo + 1.0
    raw = (hi - lo) / max(n, 1)
    power = 10.0 ** math.floor(math.log10(raw))
    step = min(s for s in (1.0, 2.0, 2.5, 5.0, 10.0) if s * power >= raw) * power
    first = math.ceil(lo / step) * step
    out = []
    value = first
    while value <= hi + 1e-9 * step:
        out.append(0.0 if abs(value) < 1e-12 * step else value)
        value += step
    return out


def _fmt(value: float) -> str:
    return f"{value:.6g}"


class _Canvas:
    def __init__(self, title: str, xlabel: str, ylabel: str):
        self.parts = [
            f'<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" '
            f'height="{HEIGHT}" viewBox="0 0 {WIDTH} {HEIGHT}">',
            f'<rect width="{WIDTH}" height="{HEIGHT}" fill="white"/>',
            f'<text x="{WIDTH / 2}" y="24" text-anchor="middle" '
            f'font-family="sans-serif" font-size="15">{title}</text>',
            f'<text x="{WIDTH / 2}" y="{HEIGHT - 10}" text-anchor="middle" '
            f'font-family="sans-serif" font-size="12">{xlabel}</text>',
            f'<text x="14" y="{HEIGHT / 2}" text-anchor="middle" '
            f'font-family="sans-serif" font-size="12" '
            f'transform="rotate(-90 14 {HEIGHT / 2})">{ylabel}</text>',
        ]

    def add(self, fragment: str) -> None:
        self.parts.append(fragment)

    def render(self) -> str:
        return "\n".join(self.parts + ["</svg>"]) + "\n"


def _frame(canvas: _Canvas, x_lo, x_hi, y_lo, y_hi):
    """Draw axes plus tick labels; return data-to-pixel transforms."""
    if x_hi <= x_lo:
        x_hi = x_lo + 1.0
    if y_hi <= y_lo:
        pad = abs(y_lo) if y_lo else 1.0
        y_lo, y_hi = y_lo - 0.5 * pad, y_lo + 0.5 * pad
    span_x = WIDTH - 2 * MARGIN
    span_y = HEIGHT - 2 * MARGIN

    def to_x(v):
        return MARGIN + span_x * (v - x_lo) / (x_hi - x_lo)

    def to_y(v):
        return HEIGHT - MARGIN - span_y * (v - y_lo) / (y_hi - y_lo)

    canvas.add(
        f'<rect x="{MARGIN}" y="{MARGIN}" width="{span_x}" height="{span_y}" '
        f'fill="none" stroke="#444" stroke-width="1"/>'
    )
    for tick in _ticks(x_lo, x_hi):
        px = to_x(tick)
        canvas.add(
            f'<line x1="{px:.1f}" y1="{HEIGHT - MARGIN}" x2="{px:.1f}" '
            f'y2="{HEIGHT - MARGIN + 5}" stroke="#444"/>'
            f'<text x="{px:.1f}" y="{HEIGHT - MARGIN + 18}" text-anchor="middle" '
            f'font-family="sans-serif" font-size="11">{_fmt(tick)}</text>'
        )
    for tick in _ticks(y_lo, y_hi):
        py = to_y(tick)
        canvas.add(
            f'<line x1="{MARGIN - 5}" y1="{py:.1f}" x2="{MARGIN}" y2="{py:.1f}" '
            f'stroke="#444"/>'
            f'<text x="{MARGIN - 8}" y="{py + 4:.1f}" text-anchor="end" '
            f'font-family="sans-serif" font-size="11">{_fmt(tick)}</text>'
        )
    return to_x, to_y


def line_plot(series, title: str = "", xlabel: str = "", ylabel: str = "") -> str:
    """Polyline plot; series is a list of (x array, y array, label)."""
    xs = np.concatenate([np.asarray(x, float) for x, _, _ in series])
    ys = np.concatenate([np.asarray(y, float) for _, y, _ in series])
    canvas = _Canvas(title, xlabel, ylabel)
    pad = 0.05 * (ys.max() - ys.min() or abs(ys.max()) or 1.0)
    to_x, to_y = _frame(canvas, xs.min(), xs.max(), ys.min() - pad, ys.max() + pad)
    for i, (x, y, label) in enumerate(series):
        color = PALETTE[i % len(PALETTE)]
        points = " ".join(
            f"{to_x(float(a)):.2f},{to_y(float(b)):.2f}"
            for a, b in zip(np.asarray(x, float), np.asarray(y, float))
        )
        canvas.add(
            f'<polyline points="{points}" fill="none" stroke="{color}" '
            f'stroke-width="1.6"/>'
        )
        if label:
            ly = MARGIN + 16 + 16 * i
            canvas.add(
                f'<line x1="{WIDTH - MARGIN - 110}" y1="{ly - 4}" '
                f'x2="{WIDTH - MARGIN - 88}" y2="{ly - 4}" stroke="{color}" '
                f'stroke-width="2"/>'
                f'<text x="{WIDTH - MARGIN - 82}" y="{ly}" '
                f'font-family="sans-serif" font-size="11">{label}</text>'
            )
    return canvas.render()


def site_heatmap(positions, intensity, title: str = "",
                 label: str = "intensity") -> str:
    """Lattice sites as circles shaded by a per-site non-negative value."""
    pos = np.asarray(positions, float)
    values = np.asarray(intensity, float)
    peak = values.max() or 1.0
    canvas = _Canvas(title, "x (um)", "y (um)")
    to_x, to_y = _frame(canvas, pos[:, 0].min(), pos[:, 0].max(),
                        pos[:, 1].min(), pos[:, 1].max())
    # fixed-point scale so output bytes do not depend on float repr quirks
    for (x, y), value in zip(pos, values):
        level = value / peak
        shade = int(round(242 * (1.0 - level)))
        radius = 2.0 + 4.0 * math.sqrt(level)
        canvas.add(
            f'<circle cx="{to_x(x):.2f}" cy="{to_y(y):.2f}" r="{radius:.2f}" '
            f'fill="rgb(255,{shade},{shade})" stroke="#999" stroke-width="0.3"/>'
        )
    canvas.add(
        f'<text x="{WIDTH - MARGIN}" y="{MARGIN - 8}" text-anchor="end" '
        f'font-family="sans-serif" font-size="11">red depth ~ {label}</text>'
    )
    return canvas.render()


def bar_plot(labels, values, title: str = "", ylabel: str = "") -> str:
    """Labeled vertical bars, one per category."""
    values = np.asarray(values, float)
    canvas = _Canvas(title, "", ylabel)
    lo = min(0.0, float(values.min()))
    hi = float(values.max() or 1.0)
    to_x, to_y = _frame(canvas, 0.0, float(len(values)), lo, hi * 1.1)
    zero = to_y(0.0)
    for i, (name, value) in enumerate(zip(labels, values)):
        left = to_x(i + 0.15)
        width = to_x(i + 0.85) - left
        top = to_y(float(value))
        canvas.add(
            f'<rect x="{left:.1f}" y="{min(top, zero):.1f}" width="{width:.1f}" '
            f'height="{abs(zero - top):.1f}" fill="{PALETTE[i % len(PALETTE)]}" '
            f'opacity="0.85"/>'
            f'<text x="{(left + width / 2):.1f}" y="{HEIGHT - MARGIN + 18}" '
            f'text-anchor="middle" font-family="sans-serif" font-size="11">{name}</text>'
        )
    return canvas.render()
