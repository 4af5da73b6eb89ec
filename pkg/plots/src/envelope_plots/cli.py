"""plots: render envgft figure CSVs to images.

Subcommands: ``render`` (one CSV), ``render-all`` (every recognized CSV in a
directory), ``fetch-highschool`` (download and convert the survey dataset).
Schema mismatches exit nonzero with a diagnostic.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .fetch import DEFAULT_URL, fetch_highschool
from .render import render
from .schemas import KINDS, FigureJob, SchemaError, kind_of_filename


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="plots", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("render", help="render one figure CSV")
    p.add_argument("--kind", required=True, choices=sorted(KINDS))
    p.add_argument("--csv", required=True)
    p.add_argument("--out", required=True, help="output image path (png/svg/pdf)")
    p.add_argument("--title", default=None)
    p.add_argument("--dpi", type=int, default=120)

    p = sub.add_parser("render-all", help="render every recognized CSV in a directory")
    p.add_argument("--dir", required=True, help="directory of pipeline CSVs")
    p.add_argument("--out-dir", required=True)
    p.add_argument("--format", default="png", choices=("png", "svg", "pdf"))

    p = sub.add_parser("fetch-highschool", help="download the survey edge list")
    p.add_argument("--out", required=True)
    p.add_argument("--url", default=DEFAULT_URL)
    return parser


def _cmd_render(args) -> int:
    style = {"dpi": args.dpi}
    if args.title:
        style["title"] = args.title
    job = FigureJob(
        csv_path=Path(args.csv),
        figure_kind=args.kind,
        output_image_path=Path(args.out),
        style=style,
    )
    out = render(job)
    print(out)
    return 0


def _cmd_render_all(args) -> int:
    src = Path(args.dir)
    if not src.is_dir():
        print(f"plots: error: {src} is not a directory", file=sys.stderr)
        return 1
    out_dir = Path(args.out_dir)
    rendered = 0
    failures = 0
    for csv_path in sorted(src.glob("*.csv")):
        kind = kind_of_filename(csv_path.name)
        if kind is None:
            continue
        target = out_dir / (csv_path.stem + "." + args.format)
        try:
            render(FigureJob(csv_path=csv_path, figure_kind=kind, output_image_path=target))
        except SchemaError as exc:
            print(f"plots: schema mismatch for {csv_path.name}: {exc}", file=sys.stderr)
            failures += 1
            continue
        print(target)
        rendered += 1
    if rendered == 0 and failures == 0:
        print(f"plots: error: no recognized figure CSVs in {src}", file=sys.stderr)
        return 1
    return 0 if failures == 0 else 1


def _cmd_fetch(args) -> int:
    out = fetch_highschool(args.out, url=args.url)
    print(out)
    return 0


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        if args.command == "render":
            return _cmd_render(args)
        if args.command == "render-all":
            return _cmd_render_all(args)
        return _cmd_fetch(args)
    except SchemaError as exc:
        print(f"plots: schema mismatch: {exc}", file=sys.stderr)
        return 1
    except FileNotFoundError as exc:
        print(f"plots: error: {exc}", file=sys.stderr)
        return 1
    except Exception as exc:  # network, zip, malformed data
        print(f"plots: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
