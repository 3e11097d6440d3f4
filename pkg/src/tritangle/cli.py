"""Command-line front end: sweeps, figure CSVs, and the verification suite.

Exit codes: 0 success, 1 validation error, 2 verification failure,
3 I/O error.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .rindler import EPS_NORM_DEFAULT, FieldKind
from .sweep import METHODS, SweepGrid, run_sweep, write_csv, write_figure_csvs
from .verify import Tolerances, cross_field_tables, run_checks

EXIT_OK = 0
EXIT_VALIDATION = 1
EXIT_VERIFY = 2
EXIT_IO = 3


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tritangle",
        description="Tripartite entanglement tangles for accelerated observers.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    sweep = sub.add_parser("sweep", help="evaluate a (field, alpha, r) grid to CSV")
    sweep.add_argument("--field", required=True, choices=[f.value for f in FieldKind])
    sweep.add_argument("--alpha", action="append", type=float, required=True,
                       help="entanglement amplitude in (0,1); repeatable")
    sweep.add_argument("--r-min", type=float, default=0.0)
    sweep.add_argument("--r-max", type=float, required=True)
    sweep.add_argument("--r-steps", type=int, required=True)
    sweep.add_argument("--method", choices=["numeric", "closed", "both"], default="both")
    sweep.add_argument("--eps-norm", type=float, default=EPS_NORM_DEFAULT)
    sweep.add_argument("--jobs", type=int, default=1)
    sweep.add_argument("--out", type=Path, required=True)

    figures = sub.add_parser("figures", help="emit fig1.csv..fig4.csv reference sweeps")
    figures.add_argument("--out-dir", type=Path, required=True)
    figures.add_argument("--jobs", type=int, default=1)

    verify = sub.add_parser("verify", help="run the full invariant suite")
    verify.add_argument("--seed", type=int, default=0)
    verify.add_argument("--tol-eig", type=float, default=None)
    verify.add_argument("--tol-herm", type=float, default=None)
    verify.add_argument("--tol-series", type=float, default=None)
    verify.add_argument("--eps-norm", type=float, default=None)
    verify.add_argument("--tables", action="store_true",
                        help="also print the informational cross-field comparison")
    return parser


def _cmd_sweep(args) -> int:
    methods = METHODS if args.method == "both" else (args.method,)
    grid = SweepGrid(
        field=FieldKind(args.field),
        alphas=tuple(args.alpha),
        r_min=args.r_min,
        r_max=args.r_max,
        r_steps=args.r_steps,
        methods=methods,
        eps_norm=args.eps_norm,
        output_path=args.out,
    )
    rows = run_sweep(grid, jobs=args.jobs)
    write_csv(rows, args.out)
    failed = sum(1 for row in rows if row.error)
    print(f"wrote {len(rows)} rows to {args.out}" + (f" ({failed} with errors)" if failed else ""))
    return EXIT_OK


def _cmd_figures(args) -> int:
    paths = write_figure_csvs(args.out_dir, jobs=args.jobs)
    for path in paths:
        print(f"wrote {path}")
    return EXIT_OK


def _cmd_verify(args) -> int:
    defaults = Tolerances()
    tol = Tolerances(
        tol_eig=args.tol_eig if args.tol_eig is not None else defaults.tol_eig,
        tol_herm=args.tol_herm if args.tol_herm is not None else defaults.tol_herm,
        tol_series=args.tol_series if args.tol_series is not None else defaults.tol_series,
        eps_norm=args.eps_norm if args.eps_norm is not None else defaults.eps_norm,
    )
    results = run_checks(seed=args.seed, tolerances=tol)
    width = max(len(res.name) for res in results)
    failures = 0
    for res in results:
        status = "pass" if res.passed else "FAIL"
        line = f"{status}  {res.name:<{width}}  observed={res.observed}  tol={res.tolerance}"
        if res.detail:
            line += f"  [{res.detail}]"
        print(line)
        failures += 0 if res.passed else 1
    if args.tables:
        print()
        print(cross_field_tables())
    print()
    print(f"{len(results) - failures}/{len(results)} checks passed (seed={args.seed})")
    return EXIT_OK if failures == 0 else EXIT_VERIFY


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    handlers = {"sweep": _cmd_sweep, "figures": _cmd_figures, "verify": _cmd_verify}
    try:
        return handlers[args.command](args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    except OSError as exc:
        print(f"i/o error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
