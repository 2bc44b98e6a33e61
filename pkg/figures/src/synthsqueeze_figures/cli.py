"""render: turn a synthsqueeze sweep CSV into an SVG/PNG figure.

    render --fig fig4 --in sweep.csv --out fig4.svg

Exit codes: 0 success, 1 usage error, 2 schema or I/O failure (nothing is
written on failure).
"""

from __future__ import annotations

import argparse
import sys

from .render import FIGURE_SCHEMAS, FigureSpec, SchemaError, render


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="render",
        description="Render a synthsqueeze sweep CSV as a figure.",
    )
    parser.add_argument("--fig", required=True, choices=sorted(FIGURE_SCHEMAS),
                        help="figure id; fixes the expected CSV columns")
    parser.add_argument("--in", dest="csv_path", required=True, metavar="CSV",
                        help="input sweep CSV")
    parser.add_argument("--out", dest="out_path", required=True, metavar="IMAGE",
                        help="output image path (.svg or .png)")
    return parser


def run(argv) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse prints its own message; map its exit to the usage code
        return 0 if exc.code == 0 else 1
    try:
        path = render(FigureSpec(args.csv_path, args.fig, args.out_path))
    except SchemaError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2
    except OSError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2
    sys.stdout.write(path + "\n")
    return 0


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
