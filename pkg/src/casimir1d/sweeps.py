"""Parameter sweeps: force vs distance, force maps over parameter planes,
and zero-force contour extraction with bisection-refined vertices."""

from __future__ import annotations

import math
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field, replace

import numpy as np

from .errors import QuadratureError, RatioUndefinedError
from .force import CavityConfig, casimir_force, force_ratio
from .mirrors import CutoffProfile

AXIS_PARAMETERS = (
    "mu_both", "lambda_both", "beta_both", "q",
    "mu1", "mu2", "lambda1", "lambda2", "beta1", "beta2",
)


@dataclass(frozen=True)
class AxisSpec:
    """One swept parameter: which knob, its range, sample count and spacing."""

    parameter: str
    min: float
    max: float
    count: int
    spacing: str = "linear"

    def __post_init__(self):
        if self.parameter not in AXIS_PARAMETERS:
            raise ValueError(f"unknown axis parameter {self.parameter!r}")
        if not (math.isfinite(self.min) and math.isfinite(self.max) and self.min < self.max):
            raise ValueError(f"axis needs min < max, got [{self.min}, {self.max}]")
        if self.count < 2:
            raise ValueError(f"axis count must be >= 2, got {self.count}")
        if self.spacing not in ("linear", "log"):
            raise ValueError(f"spacing must be 'linear' or 'log', got {self.spacing!r}")
        if self.spacing == "log" and self.min <= 0.0:
            raise ValueError("log spacing requires min > 0")

    def values(self) -> np.ndarray:
        if self.spacing == "log":
            return np.geomspace(self.min, self.max, self.count)
        return np.linspace(self.min, self.max, self.count)


@dataclass
class GridSweep:
    """Force values on a rectangular parameter grid, row-major with the
    y axis outermost (values.shape == (y.count, x.count)), plus the
    extracted zero-force polylines as (n, 2) arrays of (x, y) points."""

    x_axis: AxisSpec
    y_axis: AxisSpec
    values: np.ndarray
    zero_contours: list = field(default_factory=list)


def _with_beta(mirror, beta):
    """Set the cutoff scale on a mirror; a bare mirror gets an exponential profile."""
    if mirror.cutoff.kind == "none":
        return replace(mirror, cutoff=CutoffProfile.exponential(beta))
    return replace(mirror, cutoff=replace(mirror.cutoff, beta=float(beta)))


def apply_parameter(cavity: CavityConfig, name: str, value: float) -> CavityConfig:
    """Return a copy of ``cavity`` with one named parameter replaced."""
    value = float(value)
    m1, m2, q = cavity.mirror1, cavity.mirror2, cavity.q
    if name == "q":
        return CavityConfig(m1, m2, value)
    if name == "mu1":
        return CavityConfig(replace(m1, mu=value), m2, q)
    if name == "mu2":
        return CavityConfig(m1, replace(m2, mu=value), q)
    if name == "lambda1":
        return CavityConfig(replace(m1, lam=value), m2, q)
    if name == "lambda2":
        return CavityConfig(m1, replace(m2, lam=value), q)
    if name == "beta1":
        return CavityConfig(_with_beta(m1, value), m2, q)
    if name == "beta2":
        return CavityConfig(m1, _with_beta(m2, value), q)
    if name == "mu_both":
        return CavityConfig(replace(m1, mu=value), replace(m2, mu=value), q)
    if name == "lambda_both":
        return CavityConfig(replace(m1, lam=value), replace(m2, lam=value), q)
    if name == "beta_both":
        return CavityConfig(_with_beta(m1, value), _with_beta(m2, value), q)
    raise ValueError(f"unknown axis parameter {name!r}")


def sweep_distance(base: CavityConfig, q_axis: AxisSpec, mode: str = "force",
                   rel_tol: float = 1e-8):
    """Evaluate force or cutoff/cutoff-free force ratio along a distance axis.

    Returns a list of (q, value) pairs.  In ratio mode a sample where the
    companion force vanishes is flagged with value = nan instead of
    failing the sweep.
    """
    if q_axis.parameter != "q":
        raise ValueError("sweep_distance requires a q axis")
    if mode not in ("force", "ratio"):
        raise ValueError(f"mode must be 'force' or 'ratio', got {mode!r}")
    out = []
    for q in q_axis.values():
        cavity = apply_parameter(base, "q", q)
        if mode == "force":
            out.append((float(q), casimir_force(cavity, rel_tol).force))
        else:
            try:
                out.append((float(q), force_ratio(cavity, rel_tol)))
            except RatioUndefinedError:
                out.append((float(q), math.nan))
    return out


def _plane_cell(task):
    """One grid cell; returns (row, col, force) with nan on quadrature failure."""
    i, j, cavity, rel_tol = task
    try:
        return i, j, casimir_force(cavity, rel_tol).force
    except QuadratureError:
        return i, j, math.nan


def resolve_workers(workers=None) -> int:
    """Worker count for plane sweeps, capped by the CASIMIR_THREADS variable."""
    cap = int(os.environ.get("CASIMIR_THREADS", "1"))
    if workers is None:
        workers = cap
    return max(1, min(int(workers), max(1, cap)))


def sweep_plane(x_axis: AxisSpec, y_axis: AxisSpec, fixed: CavityConfig,
                rel_tol: float = 1e-8, workers=None, contour_tol: float = 1e-10) -> GridSweep:
    """Fill a force matrix over two parameter axes, then extract the
    zero-force contours.

    Cells are independent pure evaluations; with workers > 1 they are
    computed in parallel and assembled into fixed matrix slots, so the
    result does not depend on evaluation order.  Cells whose quadrature
    fails are stored as nan and excluded from contouring.
    """
    if x_axis.parameter == y_axis.parameter:
        raise ValueError("plane axes must address distinct parameters")
    xs = x_axis.values()
    ys = y_axis.values()
    tasks = []
    for i, y in enumerate(ys):
        row_cavity = apply_parameter(fixed, y_axis.parameter, y)
        for j, x in enumerate(xs):
            tasks.append((i, j, apply_parameter(row_cavity, x_axis.parameter, x), rel_tol))

    values = np.full((y_axis.count, x_axis.count), np.nan)
    workers = resolve_workers(workers)
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_plane_cell, tasks, chunksize=max(1, len(tasks) // (4 * workers))))
    else:
        results = [_plane_cell(t) for t in tasks]
    for i, j, v in results:
        values[i, j] = v

    grid = GridSweep(x_axis=x_axis, y_axis=y_axis, values=values)
    grid.zero_contours = zero_force_contour(grid, fixed, tol=contour_tol, rel_tol=rel_tol)
    return grid


# marching-squares segment table: cell corners indexed 0..3 counterclockwise
# from the lower-left, edges b(ottom), r(ight), t(op), l(eft); keys are the
# 4-bit positive-corner masks, ambiguous saddles (5, 10) handled separately
_SEGMENTS = {
    1: [("l", "b")], 2: [("b", "r")], 3: [("l", "r")], 4: [("r", "t")],
    6: [("b", "t")], 7: [("t", "l")], 8: [("t", "l")], 9: [("b", "t")],
    11: [("t", "r")], 12: [("l", "r")], 13: [("b", "r")], 14: [("l", "b")],
}


def _edge_key(edge, i, j):
    # canonical grid-global identity of a cell edge, shared between neighbours
    if edge == "b":
        return ("h", i, j)
    if edge == "t":
        return ("h", i + 1, j)
    if edge == "l":
        return ("v", i, j)
    return ("v", i, j + 1)


def _refine_crossing(force_at, p_lo, p_hi, f_lo, f_hi, tol):
    """Bisect a sign change of the force along one axis parameter until
    |F| < tol at the crossing (or the bracket is exhausted)."""
    best_p, best_f = (p_lo, f_lo) if abs(f_lo) < abs(f_hi) else (p_hi, f_hi)
    for _ in range(200):
        if abs(best_f) < tol:
            break
        mid = 0.5 * (p_lo + p_hi)
        if mid == p_lo or mid == p_hi:
            break
        f_mid = force_at(mid)
        if abs(f_mid) < abs(best_f):
            best_p, best_f = mid, f_mid
        if (f_mid > 0.0) == (f_lo > 0.0):
            p_lo, f_lo = mid, f_mid
        else:
            p_hi, f_hi = mid, f_mid
    return best_p


def zero_force_contour(grid: GridSweep, base: CavityConfig,
                       tol: float = 1e-10, rel_tol: float = 1e-8):
    """Marching-squares extraction of the F = 0 level set.

    Each crossing edge is refined by re-evaluating the force along the
    edge until |F| < tol; saddle cells are disambiguated by the force sign
    at the cell centre.  Returns ordered, deduplicated polylines as
    (n, 2) arrays of (x, y) parameter points.
    """
    xs = grid.x_axis.values()
    ys = grid.y_axis.values()
    values = grid.values
    x_name = grid.x_axis.parameter
    y_name = grid.y_axis.parameter

    def force_xy(x, y):
        cavity = apply_parameter(apply_parameter(base, y_name, y), x_name, x)
        return casimir_force(cavity, rel_tol).force

    vertex_cache = {}

    def vertex(edge, i, j):
        key = _edge_key(edge, i, j)
        if key in vertex_cache:
            return key
        if key[0] == "h":
            gi, gj = key[1], key[2]
            y = ys[gi]
            p = _refine_crossing(lambda x: force_xy(x, y),
                                 xs[gj], xs[gj + 1], values[gi, gj], values[gi, gj + 1], tol)
            vertex_cache[key] = (float(p), float(y))
        else:
            gi, gj = key[1], key[2]
            x = xs[gj]
            p = _refine_crossing(lambda y: force_xy(x, y),
                                 ys[gi], ys[gi + 1], values[gi, gj], values[gi + 1, gj], tol)
            vertex_cache[key] = (float(x), float(p))
        return key

    segments = []
    ny, nx = values.shape
    for i in range(ny - 1):
        for j in range(nx - 1):
            corners = (values[i, j], values[i, j + 1], values[i + 1, j + 1], values[i + 1, j])
            if any(math.isnan(c) for c in corners):
                continue
            mask = sum(1 << k for k, c in enumerate(corners) if c > 0.0)
            if mask in (0, 15):
                continue
            if mask in (5, 10):
                # saddle: the centre sample's sign decides which diagonal
                # pair of corners the contour separates
                centre = force_xy(0.5 * (xs[j] + xs[j + 1]), 0.5 * (ys[i] + ys[i + 1]))
                centre_positive = centre > 0.0
                if mask == 5:
                    pairs = [("b", "r"), ("t", "l")] if centre_positive else [("l", "b"), ("r", "t")]
                else:
                    pairs = [("l", "b"), ("r", "t")] if centre_positive else [("b", "r"), ("t", "l")]
            else:
                pairs = _SEGMENTS[mask]
            for e1, e2 in pairs:
                k1 = vertex(e1, i, j)
                k2 = vertex(e2, i, j)
                if k1 != k2:
                    segments.append((k1, k2))

    return _chain_segments(segments, vertex_cache)


def _chain_segments(segments, vertex_cache):
    """Join shared-endpoint segments into ordered polylines (open chains
    first, then closed loops), dropping duplicates."""
    adjacency = {}
    seen = set()
    for a, b in segments:
        pair = (a, b) if a <= b else (b, a)
        if pair in seen:
            continue
        seen.add(pair)
        adjacency.setdefault(a, []).append(b)
        adjacency.setdefault(b, []).append(a)

    used = set()
    polylines = []

    def walk(start):
        chain = [start]
        current = start
        while True:
            step = None
            for nxt in adjacency[current]:
                pair = (current, nxt) if current <= nxt else (nxt, current)
                if pair not in used:
                    step = nxt
                    used.add(pair)
                    break
            if step is None:
                break
            chain.append(step)
            current = step
        return chain

    endpoints = sorted(k for k, nbrs in adjacency.items() if len(nbrs) == 1)
    for start in endpoints:
        if any(((start, n) if start <= n else (n, start)) not in used for n in adjacency[start]):
            chain = walk(start)
            if len(chain) > 1:
                polylines.append(chain)
    for start in sorted(adjacency):
        if any(((start, n) if start <= n else (n, start)) not in used for n in adjacency[start]):
            chain = walk(start)
            if len(chain) > 1:
                polylines.append(chain)

    return [np.array([vertex_cache[k] for k in chain]) for chain in polylines]


def _format(v):
    return f"{v:.11e}"


def write_grid_csv(grid: GridSweep, path):
    """Write the force matrix as ``x,y,F`` rows, one line per cell."""
    xs = grid.x_axis.values()
    ys = grid.y_axis.values()
    with open(path, "w") as fh:
        fh.write("x,y,F\n")
        for i, y in enumerate(ys):
            for j, x in enumerate(xs):
                fh.write(f"{_format(x)},{_format(y)},{_format(grid.values[i, j])}\n")


def write_contours_csv(grid: GridSweep, path):
    """Write contour polylines as ``contour_id,x,y`` rows."""
    with open(path, "w") as fh:
        fh.write("contour_id,x,y\n")
        for cid, line in enumerate(grid.zero_contours):
            for x, y in line:
                fh.write(f"{cid},{_format(x)},{_format(y)}\n")


def grid_to_dict(grid: GridSweep) -> dict:
    """JSON-ready representation: axis metadata, nested value arrays and
    the contour list."""
    def axis_dict(axis):
        return {"parameter": axis.parameter, "min": axis.min, "max": axis.max,
                "count": axis.count, "spacing": axis.spacing}

    round12 = lambda v: float(_format(v))
    return {
        "x_axis": axis_dict(grid.x_axis),
        "y_axis": axis_dict(grid.y_axis),
        "x": [round12(v) for v in grid.x_axis.values()],
        "y": [round12(v) for v in grid.y_axis.values()],
        "values": [[round12(v) for v in row] for row in grid.values],
        "contours": [[[round12(x), round12(y)] for x, y in line] for line in grid.zero_contours],
    }
