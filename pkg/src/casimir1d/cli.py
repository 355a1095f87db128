"""Command-line front end.

Subcommands: ``coeffs`` (scattering coefficients over a frequency grid),
``verify`` (scattering-matrix axiom report), ``force`` (Casimir force for
one cavity), ``sweep`` (1D or 2D parameter sweeps) and ``contour``
(zero-force contour extraction).  Numeric output carries 12 significant
digits; identical invocations produce byte-identical output.
"""

from __future__ import annotations

import argparse
import json
import math
import sys

import numpy as np

from .checks import transparency_profile, verify_axioms
from .errors import CasimirError
from .force import CavityConfig, ForceResult, casimir_force
from .mirrors import CutoffProfile, MirrorSpec, scattering_coefficients
from .sweeps import (
    AxisSpec,
    GridSweep,
    apply_parameter,
    grid_to_dict,
    resolve_workers,
    sweep_distance,
    sweep_plane,
    write_contours_csv,
    write_grid_csv,
)
from . import svg as _svg


def _fmt(v: float) -> str:
    return f"{v:.11e}"


def _cutoff(kind: str, beta: float) -> CutoffProfile:
    if kind == "none" or beta == 0.0:
        return CutoffProfile.none() if kind == "none" else CutoffProfile(kind, 0.0)
    return CutoffProfile(kind, beta)


def _add_single_mirror_args(p):
    p.add_argument("--mu", type=float, default=1.0, help="delta coupling strength (>= 0)")
    p.add_argument("--lambda", dest="lam", type=float, default=0.0,
                   help="delta-prime coupling strength")
    p.add_argument("--beta", type=float, default=0.0, help="cutoff scale")
    p.add_argument("--cutoff", choices=("none", "exp", "gauss"), default="exp",
                   help="cutoff profile applied to the delta-prime coupling")


def _add_cavity_args(p):
    p.add_argument("--mu1", type=float, default=1.0)
    p.add_argument("--mu2", type=float, default=1.0)
    p.add_argument("--lambda1", dest="lambda1", type=float, default=0.0)
    p.add_argument("--lambda2", dest="lambda2", type=float, default=0.0)
    p.add_argument("--beta1", type=float, default=0.0)
    p.add_argument("--beta2", type=float, default=0.0)
    p.add_argument("--cutoff", choices=("none", "exp", "gauss"), default="exp")
    p.add_argument("--q", type=float, default=1.0, help="mirror separation (> 0)")
    p.add_argument("--rel-tol", type=float, default=1e-8)


def _mirror_from(args) -> MirrorSpec:
    return MirrorSpec(mu=args.mu, lam=args.lam, cutoff=_cutoff(args.cutoff, args.beta))


def _cavity_from(args) -> CavityConfig:
    return CavityConfig(
        mirror1=MirrorSpec(mu=args.mu1, lam=args.lambda1, cutoff=_cutoff(args.cutoff, args.beta1)),
        mirror2=MirrorSpec(mu=args.mu2, lam=args.lambda2, cutoff=_cutoff(args.cutoff, args.beta2)),
        q=args.q,
    )


def _parse_axis(text: str) -> AxisSpec:
    parts = text.split(":")
    if len(parts) not in (4, 5):
        raise ValueError(f"axis spec {text!r} is not name:min:max:count[:spacing]")
    name, lo, hi, count = parts[0], float(parts[1]), float(parts[2]), int(parts[3])
    spacing = parts[4] if len(parts) == 5 else "linear"
    return AxisSpec(parameter=name, min=lo, max=hi, count=count, spacing=spacing)


def _write_text(path, text):
    if path:
        with open(path, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="casimir1d",
        description="Scattering coefficients and Casimir forces for "
                    "delta / delta-prime mirrors with high-frequency cutoffs "
                    "(natural units, c = hbar = 1).")
    sub = parser.add_subparsers(dest="subcommand", required=True)

    p = sub.add_parser("coeffs", help="scattering coefficients over a frequency grid")
    _add_single_mirror_args(p)
    p.add_argument("--omega-min", type=float, default=1e-2)
    p.add_argument("--omega-max", type=float, default=1e2)
    p.add_argument("--count", type=int, default=200)
    p.add_argument("--out", default=None)
    p.add_argument("--format", choices=("csv", "json", "svg"), default="csv")

    p = sub.add_parser("verify", help="scattering-matrix axiom report")
    _add_single_mirror_args(p)
    p.add_argument("--omega-min", type=float, default=1e-2)
    p.add_argument("--omega-max", type=float, default=1e3)
    p.add_argument("--samples", type=int, default=400)
    p.add_argument("--threshold", type=float, default=1e-10,
                   help="largest acceptable axiom residual")
    p.add_argument("--out", default=None)

    p = sub.add_parser("force", help="Casimir force for one cavity")
    _add_cavity_args(p)
    p.add_argument("--out", default=None)
    p.add_argument("--format", choices=("text", "json"), default="text")

    p = sub.add_parser("sweep", help="force over one or two parameter axes")
    _add_cavity_args(p)
    p.add_argument("--grid", required=True,
                   help="axis spec name:min:max:count[:spacing], two axes "
                        "separated by ';' for a plane sweep")
    p.add_argument("--mode", choices=("force", "ratio"), default="force",
                   help="1D sweeps only: plain force or cutoff/cutoff-free ratio")
    p.add_argument("--out", default=None)
    p.add_argument("--format", choices=("csv", "json", "svg"), default="csv")

    p = sub.add_parser("contour", help="zero-force contours over a parameter plane")
    _add_cavity_args(p)
    p.add_argument("--grid", required=True, help="two axis specs separated by ';'")
    p.add_argument("--out", default=None)
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    return parser


def _run_coeffs(args) -> int:
    mirror = _mirror_from(args)
    if not (args.omega_min > 0.0 and args.omega_max > args.omega_min):
        raise ValueError("coeffs requires 0 < omega-min < omega-max")
    omega = np.geomspace(args.omega_min, args.omega_max, args.count)
    rows = [scattering_coefficients(mirror, w) for w in omega]
    if args.format == "csv":
        lines = ["omega,re_r_plus,im_r_plus,re_r_minus,im_r_minus,re_s,im_s,abs_r_plus,abs_s"]
        for c in rows:
            lines.append(",".join(_fmt(v) for v in (
                c.omega, c.r_plus.real, c.r_plus.imag, c.r_minus.real, c.r_minus.imag,
                c.s_plus.real, c.s_plus.imag, abs(c.r_plus), abs(c.s_plus))))
        _write_text(args.out, "\n".join(lines) + "\n")
    elif args.format == "json":
        payload = [{"omega": float(_fmt(c.omega)),
                    "r_plus": [float(_fmt(c.r_plus.real)), float(_fmt(c.r_plus.imag))],
                    "r_minus": [float(_fmt(c.r_minus.real)), float(_fmt(c.r_minus.imag))],
                    "s": [float(_fmt(c.s_plus.real)), float(_fmt(c.s_plus.imag))]}
                   for c in rows]
        _write_text(args.out, json.dumps(payload, indent=1) + "\n")
    else:
        xs = [c.omega for c in rows]
        doc = _svg.line_plot_svg(
            [(xs, [abs(c.r_plus) for c in rows], "#d62728"),
             (xs, [abs(c.s_plus) for c in rows], "#1f77b4")],
            xlabel="omega", ylabel="|r+| (red), |s| (blue)", log_x=True)
        _write_text(args.out, doc + "\n")
    return 0


def _report_dict(report, rows) -> dict:
    cls = report.transparency_classification
    return {
        "max_reality_residual": report.max_reality_residual,
        "max_unitarity_residual_diag": report.max_unitarity_residual_diag,
        "max_unitarity_residual_offdiag": report.max_unitarity_residual_offdiag,
        "imag_axis_max_abs_r": report.imag_axis_max_abs_r,
        "transparency_limit_s": [report.transparency_limit_s.real,
                                 report.transparency_limit_s.imag],
        "transparency_classification": {"kind": cls.kind, "limit": cls.limit},
        "transparency_tail": [{"omega": w, "abs_r_plus": r, "abs_s": s}
                              for w, r, s in rows[-3:]],
    }


def _run_verify(args) -> int:
    mirror = _mirror_from(args)
    if not (args.omega_min > 0.0 and args.omega_max > args.omega_min and args.samples >= 2):
        raise ValueError("verify requires 0 < omega-min < omega-max and samples >= 2")
    omega = np.geomspace(args.omega_min, args.omega_max, args.samples)
    report = verify_axioms(mirror, omega)
    rows, _ = transparency_profile(mirror, args.omega_max, 16)
    text = json.dumps(_report_dict(report, rows), indent=1, sort_keys=True) + "\n"
    _write_text(args.out, text)
    if args.out:
        sys.stdout.write(text)
    worst = max(report.max_reality_residual, report.max_unitarity_residual_diag,
                report.max_unitarity_residual_offdiag)
    return 0 if worst <= args.threshold else 1


def _force_text(result: ForceResult) -> str:
    return ("force = " + _fmt(result.force) + "\n"
            "abs_error_estimate = " + _fmt(result.abs_error_estimate) + "\n"
            "truncation_xi = " + _fmt(result.truncation_xi) + "\n"
            f"evaluations = {result.evaluations}\n")


def _run_force(args) -> int:
    result = casimir_force(_cavity_from(args), rel_tol=args.rel_tol)
    if args.format == "json":
        payload = {"force": float(_fmt(result.force)),
                   "abs_error_estimate": float(_fmt(result.abs_error_estimate)),
                   "truncation_xi": float(_fmt(result.truncation_xi)),
                   "evaluations": result.evaluations}
        text = json.dumps(payload, indent=1, sort_keys=True) + "\n"
    else:
        text = _force_text(result)
    _write_text(args.out, text)
    if args.out:
        sys.stdout.write(text)
    return 0


def _sweep_1d(args, axis) -> int:
    base = _cavity_from(args)
    if axis.parameter == "q":
        pairs = sweep_distance(base, axis, mode=args.mode, rel_tol=args.rel_tol)
    else:
        if args.mode != "force":
            raise ValueError("ratio mode is only defined for q axes")
        pairs = [(float(v),
                  casimir_force(apply_parameter(base, axis.parameter, v), args.rel_tol).force)
                 for v in axis.values()]
    header = f"{axis.parameter},{'ratio' if args.mode == 'ratio' else 'F'}"
    if args.format == "csv":
        lines = [header] + [f"{_fmt(x)},{_fmt(v)}" for x, v in pairs]
        _write_text(args.out, "\n".join(lines) + "\n")
    elif args.format == "json":
        payload = {"parameter": axis.parameter, "mode": args.mode,
                   "points": [[float(_fmt(x)), None if math.isnan(v) else float(_fmt(v))]
                              for x, v in pairs]}
        _write_text(args.out, json.dumps(payload, indent=1) + "\n")
    else:
        xs = [x for x, _ in pairs]
        vs = [v for _, v in pairs]
        doc = _svg.line_plot_svg([(xs, vs, "#1f77b4")], xlabel=axis.parameter,
                                 ylabel=header.split(",")[1],
                                 log_x=axis.spacing == "log")
        _write_text(args.out, doc + "\n")
    return 0


def _sweep_2d(args, x_axis, y_axis, contours_only=False) -> int:
    fixed = _cavity_from(args)
    grid = sweep_plane(x_axis, y_axis, fixed, rel_tol=args.rel_tol,
                       workers=resolve_workers())
    if contours_only:
        if args.format == "json":
            payload = {"x_axis": grid_to_dict(grid)["x_axis"],
                       "y_axis": grid_to_dict(grid)["y_axis"],
                       "contours": grid_to_dict(grid)["contours"]}
            _write_text(args.out, json.dumps(payload, indent=1) + "\n")
        else:
            if args.out:
                write_contours_csv(grid, args.out)
            else:
                import io
                buf = io.StringIO()
                _dump_contours(grid, buf)
                sys.stdout.write(buf.getvalue())
        return 0
    if args.format == "csv":
        if not args.out:
            raise ValueError("2D csv sweeps need --out (a contour companion file is written)")
        write_grid_csv(grid, args.out)
        write_contours_csv(grid, _companion_path(args.out))
    elif args.format == "json":
        _write_text(args.out, json.dumps(grid_to_dict(grid), indent=1) + "\n")
    else:
        _write_text(args.out, _svg.heatmap_svg(grid) + "\n")
    return 0


def _dump_contours(grid: GridSweep, fh):
    fh.write("contour_id,x,y\n")
    for cid, line in enumerate(grid.zero_contours):
        for x, y in line:
            fh.write(f"{cid},{_fmt(x)},{_fmt(y)}\n")


def _companion_path(path: str) -> str:
    stem, dot, ext = path.rpartition(".")
    return f"{stem}_contours.{ext}" if dot else f"{path}_contours"


def run(argv=None) -> int:
    """Parse arguments and execute; returns the process exit code.

    Exit codes: 0 success, 1 numeric failure (reported as JSON on stderr)
    or axiom residuals above threshold, 2 argument errors.
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        if args.subcommand == "coeffs":
            return _run_coeffs(args)
        if args.subcommand == "verify":
            return _run_verify(args)
        if args.subcommand == "force":
            return _run_force(args)
        axes = [_parse_axis(a) for a in args.grid.split(";") if a]
        if args.subcommand == "sweep":
            if len(axes) == 1:
                return _sweep_1d(args, axes[0])
            if len(axes) == 2:
                return _sweep_2d(args, axes[0], axes[1])
            raise ValueError("sweep needs one or two axis specs")
        if len(axes) != 2:
            raise ValueError("contour needs exactly two axis specs")
        return _sweep_2d(args, axes[0], axes[1], contours_only=True)
    except CasimirError as exc:
        sys.stderr.write(json.dumps(
            {"error": type(exc).__name__, "message": str(exc)}) + "\n")
        return 1
    except (ValueError, OverflowError) as exc:
        sys.stderr.write(parser.format_usage())
        sys.stderr.write(f"error: {exc}\n")
        return 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
