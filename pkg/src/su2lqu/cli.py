"""Command line interface.

Subcommands: compute (single point, any combination of methods), sweep-p and
sweep-pq (CSV curves/surfaces over the parameter range, optionally rendered to
a figure file), and validate (state residual report).  CSV values carry 12
significant digits and the output is byte-stable across runs.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass

from .angular import Spin
from .linalg import NumericalError
from .lqu import (lqu_formula_spin_half, lqu_formula_spin_one, lqu_numeric,
                  lqu_w_matrix)
from .states import (build_state_spin_half, build_state_spin_one,
                     validation_residuals)

EXIT_OK = 0
EXIT_DOMAIN = 2
EXIT_NUMERICAL = 3

RESIDUAL_LIMIT = 1e-10

CSV_HEADER = "j_twice,p,q,lqu_closed,lqu_numeric,method_delta"


def _fmt(value: float) -> str:
    return f"{value:.12g}"


@dataclass
class SweepRow:
    """One grid point of a sweep; q and lqu_numeric stay None when inapplicable."""

    j_twice: int
    p: float
    q: float | None
    lqu_closed: float
    lqu_numeric: float | None = None

    @property
    def method_delta(self) -> float | None:
        if self.lqu_numeric is None:
            return None
        return abs(self.lqu_closed - self.lqu_numeric)

    def to_csv(self) -> str:
        cells = [str(self.j_twice), _fmt(self.p),
                 "" if self.q is None else _fmt(self.q),
                 _fmt(self.lqu_closed),
                 "" if self.lqu_numeric is None else _fmt(self.lqu_numeric),
                 "" if self.method_delta is None else _fmt(self.method_delta)]
        return ",".join(cells)


def rows_to_csv(rows) -> str:
    return "\n".join([CSV_HEADER] + [row.to_csv() for row in rows]) + "\n"


def run_sweep_p(j: Spin, steps: int, method: str = "closed",
                seeds: int = 64) -> list[SweepRow]:
    """Rows for P = k/(steps-1), k = 0 .. steps-1, for the spin-1/2 family."""
    if steps < 2:
        raise ValueError("steps must be >= 2")
    rows = []
    for k in range(steps):
        p = k / (steps - 1)
        row = SweepRow(j.twice, p, None, lqu_formula_spin_half(j, p))
        if method in ("numeric", "all"):
            row.lqu_numeric = lqu_numeric(build_state_spin_half(j, p), seeds=seeds).value
        rows.append(row)
    return rows


def run_sweep_pq(j: Spin, steps: int, method: str = "closed",
                 seeds: int = 64) -> list[SweepRow]:
    """Rows over the simplex grid P, Q in {k/(steps-1)} with P + Q <= 1.

    Membership is decided on the integer grid indices, so the diagonal
    P + Q = 1 is always included exactly.
    """
    if steps < 2:
        raise ValueError("steps must be >= 2")
    if j.twice < 2:
        raise ValueError("the spin-1 family needs j >= 1")
    rows = []
    for k in range(steps):
        for l in range(steps - k):
            p = k / (steps - 1)
            q = l / (steps - 1)
            row = SweepRow(j.twice, p, q, lqu_formula_spin_one(j, p, q))
            if method in ("numeric", "all"):
                row.lqu_numeric = lqu_numeric(build_state_spin_one(j, p, q),
                                              seeds=seeds).value
            rows.append(row)
    return rows


def run_compute(j: Spin, p: float, q: float | None, method: str = "all",
                seeds: int = 64) -> str:
    """Report LQU values at one parameter point, one line per method."""
    lines = []
    if q is None:
        state = build_state_spin_half(j, p)
        lines.append(f"j = {j}  jB = 1/2  P = {_fmt(p)}")
        if method in ("closed", "all"):
            lines.append(f"closed_formula  {_fmt(lqu_formula_spin_half(j, p))}")
        if method in ("wmatrix", "all"):
            lines.append(f"w_matrix        {_fmt(lqu_w_matrix(state).value)}")
    else:
        if method == "wmatrix":
            raise ValueError("the wmatrix method applies only to the spin-1/2"
                             " partner (omit --q)")
        state = build_state_spin_one(j, p, q)
        lines.append(f"j = {j}  jB = 1  P = {_fmt(p)}  Q = {_fmt(q)}")
        if method in ("closed", "all"):
            lines.append(f"closed_formula  {_fmt(lqu_formula_spin_one(j, p, q))}")
    if method in ("numeric", "all"):
        result = lqu_numeric(state, seeds=seeds)
        direction = " ".join(f"{x:.6g}" for x in result.direction)
        lines.append(f"numeric_min     {_fmt(result.value)}  direction = [{direction}]")
    return "\n".join(lines) + "\n"


def run_validate(j: Spin, p: float, q: float | None) -> tuple[str, bool]:
    """Residual report for a constructed state and whether all pass 1e-10."""
    if q is None:
        state = build_state_spin_half(j, p)
    else:
        state = build_state_spin_one(j, p, q)
    residuals = validation_residuals(state)
    ok = all(value <= RESIDUAL_LIMIT for value in residuals.values())
    lines = [f"{name:<18}{_fmt(value)}" for name, value in residuals.items()]
    lines.append("status            " + ("ok" if ok else "residuals exceed 1e-10"))
    return "\n".join(lines) + "\n", ok


def _write_output(text: str, path: str | None) -> None:
    if path is None:
        sys.stdout.write(text)
    else:
        with open(path, "w", newline="") as handle:
            handle.write(text)


def _add_common(parser, with_steps=False, with_plot=False):
    parser.add_argument("--j", type=Spin.parse, required=True, metavar="J",
                        help="spin j of the A side, e.g. 5/2 or 3")
    if with_steps:
        parser.add_argument("--steps", type=int, default=None,
                            help="grid points per parameter axis")
    parser.add_argument("--method", default=None,
                        help="which routes to evaluate")
    parser.add_argument("--seeds", type=int, default=64,
                        help="quasi-random starts for the numeric minimizer")
    parser.add_argument("--out", default=None, metavar="PATH",
                        help="output file (default: stdout)")
    if with_plot:
        parser.add_argument("--plot", default=None, metavar="PATH",
                            help="also render the sweep to this figure file")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="su2lqu",
        description="Local quantum uncertainty of SU(2)-invariant spin states.")
    sub = parser.add_subparsers(dest="command", required=True)

    compute = sub.add_parser("compute", help="LQU at a single parameter point")
    _add_common(compute)
    compute.add_argument("--p", type=float, required=True,
                         help="weight of the J = j - 1/2 (or j - 1) sector")
    compute.add_argument("--q", type=float, default=None,
                         help="weight of the J = j sector; selects the spin-1 partner")
    compute.set_defaults(func=_cmd_compute, method_choices=("closed", "wmatrix", "numeric", "all"),
                         default_method="all")

    sweep_p = sub.add_parser("sweep-p", help="CSV sweep over P for the spin-1/2 family")
    _add_common(sweep_p, with_steps=True, with_plot=True)
    sweep_p.set_defaults(func=_cmd_sweep_p, method_choices=("closed", "numeric", "all"),
                         default_method="closed", default_steps=201)

    sweep_pq = sub.add_parser("sweep-pq", help="CSV sweep over (P, Q) for the spin-1 family")
    _add_common(sweep_pq, with_steps=True, with_plot=True)
    sweep_pq.set_defaults(func=_cmd_sweep_pq, method_choices=("closed", "numeric", "all"),
                          default_method="closed", default_steps=41)

    validate = sub.add_parser("validate", help="residual report for a constructed state")
    _add_common(validate)
    validate.add_argument("--p", type=float, required=True)
    validate.add_argument("--q", type=float, default=None)
    validate.set_defaults(func=_cmd_validate, method_choices=(), default_method=None)
    return parser


def _resolve_method(args) -> str | None:
    method = args.method if args.method is not None else args.default_method
    if args.method_choices and method not in args.method_choices:
        raise ValueError(f"method must be one of {', '.join(args.method_choices)}")
    return method


def _cmd_compute(args) -> int:
    text = run_compute(args.j, args.p, args.q, _resolve_method(args), args.seeds)
    _write_output(text, args.out)
    return EXIT_OK


def _cmd_sweep_p(args) -> int:
    steps = args.steps if args.steps is not None else args.default_steps
    rows = run_sweep_p(args.j, steps, _resolve_method(args), args.seeds)
    _write_output(rows_to_csv(rows), args.out)
    if args.plot:
        from .plots import save_sweep_p_figure
        save_sweep_p_figure(rows, args.plot, title=f"j = {args.j}")
    return EXIT_OK


def _cmd_sweep_pq(args) -> int:
    steps = args.steps if args.steps is not None else args.default_steps
    rows = run_sweep_pq(args.j, steps, _resolve_method(args), args.seeds)
    _write_output(rows_to_csv(rows), args.out)
    if args.plot:
        from .plots import save_sweep_pq_figure
        save_sweep_pq_figure(rows, args.plot, title=f"j = {args.j}")
    return EXIT_OK


def _cmd_validate(args) -> int:
    text, ok = run_validate(args.j, args.p, args.q)
    _write_output(text, args.out)
    if not ok:
        print("validation failed: a residual exceeds 1e-10", file=sys.stderr)
        return EXIT_NUMERICAL
    return EXIT_OK


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except NumericalError as exc:
        print(f"numerical failure: {exc}", file=sys.stderr)
        return EXIT_NUMERICAL


if __name__ == "__main__":
    sys.exit(main())
