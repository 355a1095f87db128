"""Minimal static SVG rendering: line plots and heatmaps with contour
overlays.  Deliberately bare (axes, ticks, polylines, colored cells); any
publication styling belongs elsewhere."""

from __future__ import annotations

import math

import numpy as np

_W, _H = 640, 480
_ML, _MR, _MT, _MB = 70, 20, 20, 50


def _finite(values):
    vals = [v for v in values if math.isfinite(v)]
    return vals or [0.0]


def _scale(lo, hi, span, offset, log=False):
    if log:
        lo, hi = math.log10(lo), math.log10(hi)
        return lambda v: offset + (math.log10(v) - lo) / (hi - lo or 1.0) * span
    return lambda v: offset + (v - lo) / (hi - lo or 1.0) * span


def _ticks(lo, hi, log=False):
    if log:
        lo_e, hi_e = math.ceil(math.log10(lo)), math.floor(math.log10(hi))
        return [10.0 ** e for e in range(lo_e, hi_e + 1)][:8] or [lo, hi]
    return list(np.linspace(lo, hi, 5))


def _axes(parts, px, py, x_ticks, y_ticks, xlabel, ylabel):
    parts.append(f'<rect x="{_ML}" y="{_MT}" width="{_W - _ML - _MR}" '
                 f'height="{_H - _MT - _MB}" fill="none" stroke="black"/>')
    for t in x_ticks:
        x = px(t)
        parts.append(f'<line x1="{x:.2f}" y1="{_H - _MB}" x2="{x:.2f}" y2="{_H - _MB + 5}" stroke="black"/>')
        parts.append(f'<text x="{x:.2f}" y="{_H - _MB + 18}" font-size="11" text-anchor="middle">{t:.3g}</text>')
    for t in y_ticks:
        y = py(t)
        parts.append(f'<line x1="{_ML - 5}" y1="{y:.2f}" x2="{_ML}" y2="{y:.2f}" stroke="black"/>')
        parts.append(f'<text x="{_ML - 8}" y="{y + 4:.2f}" font-size="11" text-anchor="end">{t:.3g}</text>')
    parts.append(f'<text x="{(_ML + _W - _MR) / 2}" y="{_H - 12}" font-size="13" text-anchor="middle">{xlabel}</text>')
    parts.append(f'<text x="16" y="{(_MT + _H - _MB) / 2}" font-size="13" text-anchor="middle" '
                 f'transform="rotate(-90 16 {(_MT + _H - _MB) / 2})">{ylabel}</text>')


def line_plot_svg(series, xlabel="x", ylabel="y", log_x=False) -> str:
    """Render (x, y, color) polyline series; non-finite samples are skipped."""
    all_x = _finite([x for xs, _, _ in series for x in xs])
    all_y = _finite([y for _, ys, _ in series for y in ys])
    x_lo, x_hi = min(all_x), max(all_x)
    y_lo, y_hi = min(all_y), max(all_y)
    if y_lo == y_hi:
        y_lo, y_hi = y_lo - 1.0, y_hi + 1.0
    px = _scale(x_lo, x_hi, _W - _ML - _MR, _ML, log=log_x)
    py_lin = _scale(y_lo, y_hi, _H - _MT - _MB, 0.0)
    py = lambda v: _H - _MB - py_lin(v)

    parts = [f'<svg xmlns="http://www.w3.org/2000/svg" width="{_W}" height="{_H}" '
             f'viewBox="0 0 {_W} {_H}"><rect width="100%" height="100%" fill="white"/>']
    if y_lo < 0.0 < y_hi:
        parts.append(f'<line x1="{_ML}" y1="{py(0):.2f}" x2="{_W - _MR}" y2="{py(0):.2f}" '
                     f'stroke="#bbbbbb" stroke-dasharray="4 3"/>')
    for xs, ys, color in series:
        pts = " ".join(f"{px(x):.2f},{py(y):.2f}" for x, y in zip(xs, ys)
                       if math.isfinite(x) and math.isfinite(y))
        parts.append(f'<polyline points="{pts}" fill="none" stroke="{color}" stroke-width="1.5"/>')
    _axes(parts, px, py, _ticks(x_lo, x_hi, log=log_x), _ticks(y_lo, y_hi), xlabel, ylabel)
    parts.append("</svg>")
    return "\n".join(parts)


def _diverging_color(v, vmax):
    """Blue (negative) to white (zero) to red (positive)."""
    if not math.isfinite(v):
        return "#999999"
    t = max(-1.0, min(1.0, v / vmax)) if vmax > 0 else 0.0
    if t >= 0:
        g = int(round(255 * (1 - t)))
        return f"#ff{g:02x}{g:02x}"
    g = int(round(255 * (1 + t)))
    return f"#{g:02x}{g:02x}ff"


def heatmap_svg(grid, xlabel=None, ylabel=None) -> str:
    """Render a GridSweep as colored cells with zero-force contours overlaid."""
    xs = grid.x_axis.values()
    ys = grid.y_axis.values()
    finite = grid.values[np.isfinite(grid.values)]
    vmax = float(np.max(np.abs(finite))) if finite.size else 1.0
    log_x = grid.x_axis.spacing == "log"
    log_y = grid.y_axis.spacing == "log"
    px = _scale(xs[0], xs[-1], _W - _ML - _MR, _ML, log=log_x)
    py_lin = _scale(ys[0], ys[-1], _H - _MT - _MB, 0.0, log=log_y)
    py = lambda v: _H - _MB - py_lin(v)

    parts = [f'<svg xmlns="http://www.w3.org/2000/svg" width="{_W}" height="{_H}" '
             f'viewBox="0 0 {_W} {_H}"><rect width="100%" height="100%" fill="white"/>']
    # cell edges at midpoints between sample coordinates
    def edges(vals):
        mids = [(a + b) / 2 for a, b in zip(vals[:-1], vals[1:])]
        return [vals[0]] + mids + [vals[-1]]

    ex, ey = edges(list(xs)), edges(list(ys))
    for i in range(len(ys)):
        for j in range(len(xs)):
            x0, x1 = px(ex[j]), px(ex[j + 1])
            y0, y1 = py(ey[i + 1]), py(ey[i])
            parts.append(f'<rect x="{x0:.2f}" y="{y0:.2f}" width="{x1 - x0:.2f}" '
                         f'height="{y1 - y0:.2f}" fill="{_diverging_color(grid.values[i, j], vmax)}"/>')
    for line in grid.zero_contours:
        pts = " ".join(f"{px(x):.2f},{py(y):.2f}" for x, y in line)
        parts.append(f'<polyline points="{pts}" fill="none" stroke="black" '
                     f'stroke-width="1.5" stroke-dasharray="6 4"/>')
    _axes(parts, px, py, _ticks(xs[0], xs[-1], log=log_x), _ticks(ys[0], ys[-1], log=log_y),
          xlabel or grid.x_axis.parameter, ylabel or grid.y_axis.parameter)
    parts.append("</svg>")
    return "\n".join(parts)
