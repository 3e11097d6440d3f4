"""CLI: render --figure {1,2,3,4} --csv <path> --out <path>."""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .data import FigureDataError
from .render import figure_spec, render


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="figrender", description="Render tangle-decay figures from sweep CSVs.")
    sub = parser.add_subparsers(dest="command", required=True)
    cmd = sub.add_parser("render", help="render one figure from its CSV")
    cmd.add_argument("--figure", type=int, required=True, choices=[1, 2, 3, 4])
    cmd.add_argument("--csv", type=Path, required=True)
    cmd.add_argument("--out", type=Path, required=True)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        spec = figure_spec(args.figure, args.csv)
        curves = render(spec, args.out)
    except (FigureDataError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    n_curves = max(len(c) for c in curves.values())
    print(f"wrote {args.out} ({n_curves} curves per panel)")
    return 0


if __name__ == "__main__":
    sys.exit(main())
