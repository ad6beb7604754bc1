"""Command-line front end: ``tripolar <eval|canon|render|check|tables>``.

Exit codes: 0 success, 1 property failure (or other error), 2 syntax error,
3 singular divisor, 4 grid mismatch.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

import numpy as np

from . import checks, diagnostics, spectra
from .colourspace import Colour, to_json
from .dsl import CliConfig, evaluate, parse
from .errors import (
    ExprSyntaxError,
    GridMismatch,
    NegativeRealPart,
    SingularDivisor,
    TripolarError,
)
from .poles import POLES, SQUARES
from .spectra import Grid

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_SYNTAX = 2
EXIT_SINGULAR = 3
EXIT_GRID = 4


def format_pretty(x: Colour) -> str:
    lines = [f"square {x.square.index}, grid {x.grid} ({x.grid.count} samples)"]
    f = x.grid.positions()
    for p in POLES:
        e = x.eps[p]
        if not np.any(e):
            lines.append(f"{p}[{x.q[p]:.12g}]")
            continue
        i = int(np.argmax(np.abs(e)))
        lines.append(
            f"{p}[{x.q[p]:.12g} + <eps: min {e.min():.6g}, max {e.max():.6g}, "
            f"largest |.| at {f[i]:g} nm> e]"
        )
    return "\n".join(lines)


def tables_text() -> str:
    return "\n\n".join(sq.format() for sq in SQUARES.values()) + "\n"


def _common() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--grid", type=Grid.parse, default=spectra.DEFAULT_GRID,
                        help="wavelength grid start:stop:step in nm (default 380:780:5)")
    common.add_argument("--square", type=int, choices=(1, 2, 3), default=1,
                        help="Latin square used for multiplication (default 1)")
    common.add_argument("--tol", type=float, default=1e-9, help="comparison tolerance")
    common.add_argument("--seed", type=int, default=0, help="seed for check")
    common.add_argument("--format", dest="fmt", choices=("json", "csv", "pretty"), default=None)
    common.add_argument("--out", type=Path, default=None, help="output directory for render")
    common.add_argument("--resample", action="store_true",
                        help="interpolate csv: sources onto the grid instead of rejecting them")
    return common


def build_parser() -> argparse.ArgumentParser:
    common = _common()
    parser = argparse.ArgumentParser(prog="tripolar", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    for name, help_ in [
        ("eval", "evaluate an expression and print the canonical result"),
        ("canon", "print the canonical form of an expression as JSON"),
        ("render", "write the stimulus curve and HSB report of an expression"),
    ]:
        p = sub.add_parser(name, parents=[common], help=help_)
        p.add_argument("expr")
    p = sub.add_parser("check", parents=[common], help="run the randomized property suites")
    p.add_argument("--cases", type=int, default=1000)
    p.add_argument("--inject-fault", choices=sorted(checks.FAULTS), default=None,
                   help=argparse.SUPPRESS)
    sub.add_parser("tables", parents=[common], help="print the six Latin squares")
    return parser


def _config(args) -> CliConfig:
    return CliConfig(grid=args.grid, square=args.square, tol=args.tol,
                     resample=args.resample, fmt=args.fmt or "json", seed=args.seed)


def _cmd_eval(args, out) -> int:
    x = evaluate(parse(args.expr), _config(args))
    fmt = args.fmt or "pretty"
    if fmt == "csv":
        raise ValueError("eval prints colours; use --format json or pretty")
    out.write((to_json(x) if fmt == "json" else format_pretty(x)) + "\n")
    return EXIT_OK


def _cmd_canon(args, out) -> int:
    x = evaluate(parse(args.expr), _config(args))
    fmt = args.fmt or "json"
    if fmt == "csv":
        raise ValueError("canon prints colours; use --format json or pretty")
    out.write((to_json(x) if fmt == "json" else format_pretty(x)) + "\n")
    return EXIT_OK


def _cmd_render(args, out) -> int:
    x = evaluate(parse(args.expr), _config(args))
    curve, report = diagnostics.report(x, diagnostics.RenderModel.default(x.grid))
    if args.fmt == "csv":
        out.write(spectra.format_csv(curve))
        return EXIT_OK
    target = args.out or Path(".")
    target.mkdir(parents=True, exist_ok=True)
    spectra.to_csv(curve, target / "curve.csv")
    (target / "report.json").write_text(report.to_json() + "\n", encoding="utf-8")
    (target / "swatch.txt").write_text(report.swatch + "\n", encoding="utf-8")
    out.write(report.to_json() + "\n")
    return EXIT_OK


def _cmd_check(args, out) -> int:
    if args.cases < 1:
        raise ValueError("--cases must be at least 1")
    result = checks.run_checks(seed=args.seed, cases=args.cases, tol=args.tol,
                               grid=args.grid, fault=args.inject_fault)
    out.write(result.report)
    return EXIT_FAILURE if result.failures else EXIT_OK


def _cmd_tables(args, out) -> int:
    out.write(tables_text())
    return EXIT_OK


COMMANDS = {
    "eval": _cmd_eval,
    "canon": _cmd_canon,
    "render": _cmd_render,
    "check": _cmd_check,
    "tables": _cmd_tables,
}


def main(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return COMMANDS[args.command](args, out)
    except (ExprSyntaxError, NegativeRealPart) as exc:
        err.write(f"syntax error: {exc}\n")
        return EXIT_SYNTAX
    except SingularDivisor as exc:
        err.write(f"singular divisor: {exc}\n")
        return EXIT_SINGULAR
    except GridMismatch as exc:
        err.write(f"grid mismatch: {exc}\n")
        return EXIT_GRID
    except (TripolarError, ValueError, OSError) as exc:
        err.write(f"error: {exc}\n")
        return EXIT_FAILURE


if __name__ == "__main__":
    sys.exit(main())
