"""Command-line front end: solve problems, emit report tables and scans.

Subcommands:

    solve   evaluate the truncated solution on a grid (or dump the series)
    table   reference-style report table for a built-in example
    scan    truncation-depth scan against the stored reference table

Exit codes: 0 success, 1 usage or expression-parse error, 2 numeric or
domain error during computation.
"""

from __future__ import annotations

import argparse
import sys
from typing import Optional, Sequence

from .adm import ProblemSpec, SolveError, solve
from .gammafn import GammaPoleError
from .parser import SeriesParseError, parse_series
from .problems import (
    CLASSICAL_PAIR,
    X_GRID,
    Y_GRID,
    SingularPointError,
    exact_solution,
    make_table,
    truncation_scan,
)
from .series import (
    EvaluationDomainError,
    FracSeries,
    NonIntegrableTermError,
    QuadratureError,
    TermCapError,
    format_series,
)

__all__ = ["build_parser", "run", "main"]

_NUMERIC_ERRORS = (
    SolveError,
    GammaPoleError,
    EvaluationDomainError,
    NonIntegrableTermError,
    TermCapError,
    QuadratureError,
    SingularPointError,
)


class UsageError(Exception):
    pass


class _ArgumentParser(argparse.ArgumentParser):
    # argparse exits with status 2 on bad flags; the contract here is 1
    def error(self, message):
        raise UsageError(message)


def build_parser() -> _ArgumentParser:
    parser = _ArgumentParser(
        prog="fracadm",
        description="Decomposition-series solver for D_y^a u + u*D_x^b u = g(x).",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--example", type=int, choices=(1, 2, 3, 4), help="built-in problem id"
    )
    common.add_argument("--ic", metavar="EXPR", help="initial condition f(x)")
    common.add_argument(
        "--g", metavar="EXPR", default=None, help="forcing g(x) (default 0)"
    )
    common.add_argument("--alpha", type=float, default=1.0, help="order of D_y")
    common.add_argument("--beta", type=float, default=1.0, help="order of D_x")
    common.add_argument(
        "--terms", type=int, default=6, help="truncation depth (scan: max depth)"
    )
    common.add_argument(
        "--grid",
        metavar="SPEC",
        help="evaluation grid, e.g. 'x=0.1:0.9:0.2;y=0.01,0.05,0.1'",
    )
    common.add_argument("--format", choices=("csv", "tsv"), default="csv")
    common.add_argument("--out", metavar="FILE", help="write output here")
    common.add_argument(
        "--digits", type=int, default=17, help="significant digits in output"
    )
    common.add_argument(
        "--dump-series",
        action="store_true",
        help="solve: print the truncated series instead of grid values",
    )

    sub.add_parser(
        "solve", parents=[common], help="solve and evaluate on a grid"
    )
    sub.add_parser(
        "table",
        parents=[common],
        help="report table over the standard order pairs (built-in examples)",
    )
    sub.add_parser(
        "scan",
        parents=[common],
        help="truncation-depth scan against the reference table",
    )
    return parser


def _parse_axis_values(spec: str, axis: str) -> list[float]:
    if ":" in spec:
        fields = spec.split(":")
        if len(fields) != 3:
            raise UsageError(f"grid range for {axis} must be start:stop:step")
        try:
            start, stop, step = (float(f) for f in fields)
        except ValueError:
            raise UsageError(f"bad number in grid range for {axis}: {spec!r}")
        if step <= 0:
            raise UsageError(f"grid step for {axis} must be positive")
        if stop < start:
            raise UsageError(f"grid range for {axis} is empty")
        count = int((stop - start) / step + 1e-9) + 1
        return [start + k * step for k in range(count)]
    try:
        return [float(f) for f in spec.split(",") if f.strip()]
    except ValueError:
        raise UsageError(f"bad number in grid list for {axis}: {spec!r}")


def parse_grid(spec: str) -> tuple[list[float], list[float]]:
    """Parse 'x=...;y=...' with range (a:b:step) or list (v1,v2) forms."""
    axes: dict[str, list[float]] = {}
    for part in spec.split(";"):
        part = part.strip()
        if not part:
            continue
        if "=" not in part:
            raise UsageError(f"grid component {part!r} is not axis=values")
        axis, _, values = part.partition("=")
        axis = axis.strip()
        if axis not in ("x", "y"):
            raise UsageError(f"unknown grid axis {axis!r}")
        axes[axis] = _parse_axis_values(values.strip(), axis)
    if "x" not in axes or "y" not in axes:
        raise UsageError("grid must specify both x and y")
    if not axes["x"] or not axes["y"]:
        raise UsageError("grid axes must be non-empty")
    return axes["x"], axes["y"]


def _fmt(value, digits: int) -> str:
    if value is None:
        return ""
    return format(value, f".{digits}g")


def _build_problem(args) -> ProblemSpec:
    if args.example is not None and args.ic is not None:
        raise UsageError("give either --example or --ic/--g, not both")
    if args.example is not None:
        from .problems import builtin_problem

        return builtin_problem(args.example, args.alpha, args.beta, args.terms)
    if args.ic is None:
        raise UsageError("either --example or --ic is required")
    ic = parse_series(args.ic)
    forcing = parse_series(args.g) if args.g is not None else FracSeries.zero()
    return ProblemSpec(args.alpha, args.beta, ic, forcing, args.terms)


def _grid_for(args) -> tuple[list[float], list[float]]:
    if args.grid is not None:
        return parse_grid(args.grid)
    if args.example is not None:
        return list(X_GRID), list(Y_GRID)
    raise UsageError("--grid is required for custom problems")


def _cmd_solve(args) -> str:
    problem = _build_problem(args)
    sol = solve(problem)
    phi = sol.partial_sum(problem.n_terms)
    if args.dump_series:
        return format_series(phi, args.digits) + "\n"
    xs, ys = _grid_for(args)
    sep = "," if args.format == "csv" else "\t"
    with_exact = args.example is not None and (args.alpha, args.beta) == CLASSICAL_PAIR
    lines = ["y,x,alpha,beta,approx,exact,abs_error".replace(",", sep)]
    for y in ys:
        for x in xs:
            approx = phi.evaluate(x, y)
            exact = abs_err = None
            if with_exact:
                exact = exact_solution(args.example, x, y)
                abs_err = abs(exact - approx)
            lines.append(
                sep.join(
                    _fmt(v, args.digits)
                    for v in (y, x, args.alpha, args.beta, approx, exact, abs_err)
                )
            )
    return "\n".join(lines) + "\n"


def _cmd_table(args) -> str:
    if args.example is None:
        raise UsageError("table requires --example (reference layout)")
    report = make_table(args.example, args.terms)
    sep = "," if args.format == "csv" else "\t"
    lines = ["y,x,alpha,beta,approx,exact,abs_error".replace(",", sep)]
    for c in report.cells:
        lines.append(
            sep.join(
                _fmt(v, args.digits)
                for v in (c.y, c.x, c.alpha, c.beta, c.approx, c.exact, c.abs_error)
            )
        )
    return "\n".join(lines) + "\n"


def _cmd_scan(args) -> str:
    if args.example is None:
        raise UsageError("scan requires --example (reference tables)")
    rows = truncation_scan(args.example, args.terms)
    sep = "," if args.format == "csv" else "\t"
    lines = ["n,max_rel_deviation,error_column_deviation".replace(",", sep)]
    for row in rows:
        lines.append(
            sep.join(
                (
                    str(row.n_terms),
                    _fmt(row.max_deviation, args.digits),
                    _fmt(row.error_column_deviation, args.digits),
                )
            )
        )
    return "\n".join(lines) + "\n"


_COMMANDS = {"solve": _cmd_solve, "table": _cmd_table, "scan": _cmd_scan}


def run(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as exc:
        print(f"fracadm: error: {exc}", file=sys.stderr)
        return 1
    try:
        output = _COMMANDS[args.command](args)
    except _NUMERIC_ERRORS as exc:
        print(f"fracadm: numeric error: {exc}", file=sys.stderr)
        return 2
    except (UsageError, SeriesParseError, ValueError) as exc:
        print(f"fracadm: error: {exc}", file=sys.stderr)
        return 1
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(output)
    else:
        sys.stdout.write(output)
    return 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
