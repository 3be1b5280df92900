"""Command-line wrapper: vnoplan-figures --csv sweep.csv --out figure.svg"""

from __future__ import annotations

import argparse
import sys

from . import __version__
from .render import DEFAULT_SHADED_BAND, SchemaError, render_figure


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="vnoplan-figures",
        description="Render the sweep sensitivity panels from a vnoplan CSV")
    parser.add_argument("--version", action="version",
                        version=f"vnoplan-figures {__version__}")
    parser.add_argument("--csv", required=True, help="sweep CSV input")
    parser.add_argument("--out", required=True,
                        help="output image (svg, pdf or png by extension)")
    parser.add_argument("--style", help="matplotlib style name or file")
    parser.add_argument("--band", nargs=2, type=float, metavar=("LO", "HI"),
                        default=list(DEFAULT_SHADED_BAND),
                        help="shaded ratio interval (default 0.006 0.6)")
    args = parser.parse_args(argv)
    try:
        render_figure(args.csv, args.out, style=args.style,
                      shaded_band=tuple(args.band))
    except SchemaError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    print(f"figure written to {args.out}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
