"""Command-line front end.

Subcommands: ``poly`` (print a polynomial), ``roots`` (solve one shifted
equation), ``fit`` (ellipse-fit a root cloud, optional SVG), ``verify``
(theorem/conjecture suites), ``sweep`` (per-degree report with CSV/JSON
and rendered figures).

Exit statuses: 0 success, 1 usage error, 2 computation error,
3 assertion failure (a verify suite failed, or fit geometry degenerate).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from fractions import Fraction
from pathlib import Path

from . import __version__
from .fit import DegenerateGeometry, fit_ellipse
from .poly import cycle_charpoly, lemma_fib_check, path_charpoly
from .report import VerificationReport
from .roots import (
    PrecisionConfig,
    RootSet,
    ShiftedProblem,
    SolverError,
    solve,
)
from .seq import fibonacci
from .verify import (
    containment_check,
    eq1_monotonicity_check,
    imaginary_root_check,
    real_count_conjecture_check,
)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_COMPUTE = 2
EXIT_ASSERT = 3

DEFAULT_RATIONAL_SAMPLES = [
    Fraction(1, 2), Fraction(-1, 2),
    Fraction(3, 2), Fraction(-3, 2),
    Fraction(2), Fraction(-2),
]
EQ1_SAMPLE_POINTS = [
    Fraction(0),
    Fraction(1, 2), Fraction(-1, 2),
    Fraction(1), Fraction(-1),
    Fraction(3, 2), Fraction(-3, 2),
    Fraction(2), Fraction(-2),
]

SUITES = ("lemma", "imaginary", "realcount", "containment", "eq1", "all")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # argparse default exits with 2
        raise UsageError(message)


def _fmt(x: float) -> str:
    """17 significant digits: lossless for doubles, stable in diffs."""
    return format(float(x), ".17g")


def _default_precision() -> int:
    env = os.environ.get("PATHSPEC_PRECISION")
    if env is not None:
        try:
            bits = int(env)
        except ValueError:
            raise UsageError(f"PATHSPEC_PRECISION must be an integer, got {env!r}")
        if bits < 53:
            raise UsageError("PATHSPEC_PRECISION must be >= 53")
        return bits
    return 128


def _resolve_constant(raw: str, n: int) -> int:
    if raw == "fib":
        return fibonacci(n + 1)
    try:
        return int(raw)
    except ValueError:
        raise UsageError(f"--c must be 'fib' or an integer, got {raw!r}")


def _precision_config(args) -> PrecisionConfig:
    bits = args.precision if args.precision is not None else _default_precision()
    if bits < 53:
        raise UsageError("--precision must be >= 53")
    if args.max_bits < bits:
        raise UsageError("--max-bits must be >= the starting precision")
    return PrecisionConfig(start_bits=bits, max_bits=args.max_bits, tolerance=args.tol)


def build_parser() -> _Parser:
    parser = _Parser(prog="pathroots", description=__doc__)
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="subcommand", required=True)

    def add_common(p):
        p.add_argument("--precision", type=int, default=None,
                       help="starting significand bits (default: env "
                            "PATHSPEC_PRECISION or 128)")
        p.add_argument("--tol", type=float, default=1e-12,
                       help="solver relative tolerance")
        p.add_argument("--max-bits", type=int, default=16384,
                       help="precision ceiling for the adaptive solver")

    p = sub.add_parser("poly", help="print a characteristic polynomial")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--graph", choices=("path", "cycle"), default="path")

    p = sub.add_parser("roots", help="solve f_n(λ) = c")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--c", default="fib")
    p.add_argument("--out", choices=("csv", "json"), default="csv")
    add_common(p)

    p = sub.add_parser("fit", help="ellipse-fit the roots of f_n(λ) = c")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--c", default="fib")
    p.add_argument("--svg", type=Path, default=None,
                   help="write an SVG of roots + fitted/reference ellipses")
    add_common(p)

    p = sub.add_parser("verify", help="run theorem/conjecture suites")
    p.add_argument("--suite", choices=SUITES, required=True)
    p.add_argument("--n-max", type=int, required=True)
    add_common(p)

    p = sub.add_parser("sweep", help="per-degree solve+fit report")
    p.add_argument("--n-min", type=int, required=True)
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--step", type=int, default=1)
    p.add_argument("--c", default="fib")
    p.add_argument("--out-dir", type=Path, required=True)
    p.add_argument("--figures", action=argparse.BooleanOptionalAction, default=True,
                   help="render matplotlib figures next to sweep.csv")
    add_common(p)

    return parser


def _json_envelope(config: dict, results) -> str:
    return json.dumps(
        {"meta": {"version": __version__, "config": config}, "results": results},
        indent=2,
    )


def cmd_poly(args, out) -> int:
    if args.n < 1 or (args.graph == "cycle" and args.n < 3):
        raise UsageError(f"invalid order n={args.n} for graph {args.graph}")
    p = path_charpoly(args.n) if args.graph == "path" else cycle_charpoly(args.n)
    print(p.serialize(), file=out)
    print(p.pretty(), file=out)
    return EXIT_OK


def _solve_from_args(args):
    if args.n < 1:
        raise UsageError(f"--n must be positive, got {args.n}")
    c = _resolve_constant(args.c, args.n)
    cfg = _precision_config(args)
    problem = ShiftedProblem.for_path(args.n, c)
    return problem, solve(problem, cfg)


def cmd_roots(args, out) -> int:
    problem, roots = _solve_from_args(args)
    rows = [
        {"n": problem.n, "c": problem.c, "re": float(z.real),
         "im": float(z.imag), "residual": res}
        for z, res in zip(roots.roots, roots.residuals)
    ]
    if args.out == "csv":
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(["n", "c", "re", "im", "residual"])
        for r in rows:
            writer.writerow(
                [r["n"], r["c"], _fmt(r["re"]), _fmt(r["im"]), _fmt(r["residual"])]
            )
    else:
        results = [
            {**r, "re": float(_fmt(r["re"])), "im": float(_fmt(r["im"])),
             "residual": float(_fmt(r["residual"])), "c": str(r["c"])}
            for r in rows
        ]
        print(_json_envelope({"n": problem.n, "c": str(problem.c)}, results), file=out)
    return EXIT_OK


def cmd_fit(args, out) -> int:
    problem, roots = _solve_from_args(args)
    points = roots.as_floats()
    fit = fit_ellipse(points)
    result = {
        "n": problem.n,
        "c": str(problem.c),
        "a_tilde": float(_fmt(fit.a_tilde)),
        "b_tilde": float(_fmt(fit.b_tilde)),
        "rmse": float(_fmt(fit.rmse)),
        "eccentricity": float(_fmt(fit.eccentricity)),
    }
    print(_json_envelope({"n": problem.n, "c": str(problem.c)}, [result]), file=out)
    if args.svg is not None:
        from .plots import root_cloud_svg

        title = f"roots of f_{problem.n}(x) = {problem.c}"
        args.svg.parent.mkdir(parents=True, exist_ok=True)
        args.svg.write_text(root_cloud_svg(points, fit, title))
    return EXIT_OK


def _run_suite(suite: str, n_max: int, cfg: PrecisionConfig) -> list[VerificationReport]:
    reports: list[VerificationReport] = []
    if suite in ("lemma", "all"):
        reports += [lemma_fib_check(n) for n in range(1, n_max + 1)]
    if suite in ("imaginary", "all"):
        reports += [
            imaginary_root_check(k, DEFAULT_RATIONAL_SAMPLES)
            for k in range(1, n_max // 4 + 1)
        ]
    if suite in ("realcount", "all"):
        reports += [real_count_conjecture_check(n) for n in range(1, n_max + 1)]
    if suite in ("containment", "all"):
        reports += [
            containment_check(n, cfg=cfg) for n in range(4, n_max + 1, 4)
        ]
    if suite in ("eq1", "all"):
        reports += [
            eq1_monotonicity_check(k, a)
            for k in range(1, n_max // 4 + 1)
            for a in EQ1_SAMPLE_POINTS
        ]
    return reports


def cmd_verify(args, out) -> int:
    if args.n_max < 1:
        raise UsageError("--n-max must be positive")
    cfg = _precision_config(args)
    reports = _run_suite(args.suite, args.n_max, cfg)
    print(
        _json_envelope(
            {"suite": args.suite, "n_max": args.n_max},
            [r.to_dict() for r in reports],
        ),
        file=out,
    )
    return EXIT_OK if all(r.passed for r in reports) else EXIT_ASSERT


SWEEP_COLUMNS = [
    "n", "a_tilde", "b_tilde", "rmse", "eccentricity",
    "boundary_residual", "max_re", "max_im",
]


def _sweep_row(n: int, c_raw: str, cfg: PrecisionConfig) -> dict:
    row: dict = {"n": n, "error": None}
    try:
        c = _resolve_constant(c_raw, n)
        roots = solve(ShiftedProblem.for_path(n, c), cfg)
        pts = roots.as_floats()
        fit = fit_ellipse(pts)
        row.update(
            c=str(c),
            a_tilde=fit.a_tilde,
            b_tilde=fit.b_tilde,
            rmse=fit.rmse,
            eccentricity=fit.eccentricity,
            boundary_residual=max(abs(x * x / 5.0 + y * y - 1.0) for x, y in pts),
            max_re=roots.max_abs_real(),
            max_im=roots.max_abs_imag(),
        )
    except (SolverError, DegenerateGeometry) as exc:
        row["error"] = f"{type(exc).__name__}: {exc}"
    return row


def cmd_sweep(args, out) -> int:
    if args.n_min < 1 or args.n_min > args.n_max or args.step < 1:
        raise UsageError("need 1 <= n-min <= n-max and step >= 1")
    cfg = _precision_config(args)
    args.out_dir.mkdir(parents=True, exist_ok=True)
    rows = [
        _sweep_row(n, args.c, cfg)
        for n in range(args.n_min, args.n_max + 1, args.step)
    ]

    csv_buf = io.StringIO()
    writer = csv.writer(csv_buf, lineterminator="\n")
    writer.writerow(SWEEP_COLUMNS)
    for r in rows:
        if r["error"] is not None:
            writer.writerow([r["n"]] + [f"ERROR:{r['error']}"] + [""] * 6)
        else:
            writer.writerow(
                [r["n"]] + [_fmt(r[col]) for col in SWEEP_COLUMNS[1:]]
            )
    (args.out_dir / "sweep.csv").write_text(csv_buf.getvalue())

    json_rows = []
    for r in rows:
        jr = dict(r)
        for col in SWEEP_COLUMNS[1:]:
            if col in jr:
                jr[col] = float(_fmt(jr[col]))
        json_rows.append(jr)
    config = {
        "n_min": args.n_min, "n_max": args.n_max, "step": args.step, "c": args.c,
    }
    (args.out_dir / "sweep.json").write_text(_json_envelope(config, json_rows) + "\n")

    if args.figures:
        from .plots import write_sweep_figures

        write_sweep_figures(rows, args.out_dir)
    print(f"wrote {len(rows)} rows to {args.out_dir / 'sweep.csv'}", file=out)
    return EXIT_OK


COMMANDS = {
    "poly": cmd_poly,
    "roots": cmd_roots,
    "fit": cmd_fit,
    "verify": cmd_verify,
    "sweep": cmd_sweep,
}


def run(argv: list[str] | None = None, out=None) -> int:
    out = out if out is not None else sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return COMMANDS[args.subcommand](args, out)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except SolverError as exc:
        print(f"computation error: {exc}", file=sys.stderr)
        return EXIT_COMPUTE
    except DegenerateGeometry as exc:
        # distinct from solver failures: the solve succeeded but the
        # geometry does not admit an ellipse
        print(f"degenerate geometry: {exc}", file=sys.stderr)
        return EXIT_ASSERT


def main() -> None:
    sys.exit(run())
