"""Command line front end.

    planetoid-convert convert <raw_dir> <out_dir> --name cora
    planetoid-convert validate <out_dir>

`convert` prints the edge-count report; `validate` prints OK or one line
per problem and exits nonzero.
"""

import argparse
import sys

from .convert import PUBLISHED, convert
from .validate import validate


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="planetoid-convert")
    sub = parser.add_subparsers(dest="command", required=True)

    c = sub.add_parser("convert",
                       help="raw ind.<name>.* files -> dataset directory")
    c.add_argument("raw_dir")
    c.add_argument("out_dir")
    c.add_argument("--name", required=True, choices=sorted(PUBLISHED))

    v = sub.add_parser("validate",
                       help="recompute a converted directory's counts")
    v.add_argument("out_dir")
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "convert":
            report = convert(args.raw_dir, args.out_dir, args.name)
            print("\n".join(report.lines()))
            return 0
        problems = validate(args.out_dir)
        if problems:
            print("\n".join(problems))
            return 1
        print("OK")
        return 0
    except Exception as e:  # one-line diagnostic, nonzero exit
        print(f"error: {e}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
