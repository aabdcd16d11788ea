"""Command line: ``tensor-degree [census] [flags]``, plus two debug subcommands.

``census`` is the default and may be omitted::

    tensor-degree --groups S3,Q8 --pairs all --format json --output out.json
    tensor-degree presentation --group S3 --H 1 --K 1,3
    tensor-degree enumerate pres.txt
"""
from __future__ import annotations

import argparse
import logging
import sys

from . import census
from .catalog import catalog_group
from .errors import GroupError
from .fp_enum import DEFAULT_MAX_COSETS, Presentation, todd_coxeter
from .group_core import conjugacy_classes, subgroup_closure
from .tensor import tensor_presentation

SUBCOMMANDS = ("census", "presentation", "enumerate")


def _csv_list(text: str) -> tuple[str, ...]:
    return tuple(t.strip() for t in text.split(",") if t.strip())


def _positive(text: str) -> int:
    n = int(text)
    if n < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return n


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="tensor-degree", description=__doc__.splitlines()[0])
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command")

    c = sub.add_parser("census", help="sweep a catalog and check every inequality")
    c.add_argument("--groups", type=_csv_list, default=census.DEFAULT_CATALOG,
                   help="comma-separated catalog expressions (default: built-in catalog)")
    c.add_argument("--group-file", action="append", default=[], dest="group_files",
                   help="extra group given as a table file (repeatable)")
    c.add_argument("--max-order", type=_positive, default=32)
    c.add_argument("--pairs", choices=("diagonal", "hk", "all"), default="hk")
    c.add_argument("--max-cosets", type=_positive, default=DEFAULT_MAX_COSETS)
    c.add_argument("--output", default=None, help="report path (default: stdout)")
    c.add_argument("--format", choices=("csv", "json"), default="csv")
    c.add_argument("--jobs", type=_positive, default=1)

    p = sub.add_parser("presentation", help="print the tensor presentation for a normal pair")
    p.add_argument("--group", required=True)
    p.add_argument("--H", type=_csv_list, default=None, help="generators of H (default: G)")
    p.add_argument("--K", type=_csv_list, default=None, help="generators of K (default: G)")

    e = sub.add_parser("enumerate", help="coset-enumerate a presentation file")
    e.add_argument("path")
    e.add_argument("--max-cosets", type=_positive, default=DEFAULT_MAX_COSETS)
    return parser


def parse_config(argv: list[str]) -> census.CensusConfig:
    """Census flags to a :class:`CensusConfig`; ``argv`` excludes the subcommand."""
    args = build_parser().parse_args(["census", *argv])
    return _config(args)


def _config(args: argparse.Namespace) -> census.CensusConfig:
    return census.CensusConfig(
        groups=tuple(args.groups), group_files=tuple(args.group_files),
        max_order=args.max_order, pairs=args.pairs, max_cosets=args.max_cosets,
        output=args.output, format=args.format, jobs=args.jobs,
    )


def _subgroup(G, gens):
    if gens is None:
        return G.whole
    return subgroup_closure(G, [int(g) for g in gens])


def main(argv: list[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    lead = 0
    while lead < len(argv) and argv[lead] in ("-v", "--verbose"):
        lead += 1
    rest = argv[lead:]
    if not rest or rest[0] not in SUBCOMMANDS + ("-h", "--help"):
        argv = argv[:lead] + ["census", *rest]
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        if args.command == "census":
            return census.run_census(_config(args))
        if args.command == "presentation":
            G = catalog_group(args.group)
            pres, _ = tensor_presentation(G, _subgroup(G, args.H), _subgroup(G, args.K))
            sys.stdout.write(pres.to_text())
            return 0
        if args.command == "enumerate":
            eg = todd_coxeter(Presentation.read(args.path), args.max_cosets)
            G = eg.group
            k = conjugacy_classes(G, G.whole, G.whole).count
            print(f"order {G.order}, {k} conjugacy classes, generator images {list(eg.genmap)}")
            return 0
    except (GroupError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    raise AssertionError(f"unhandled command {args.command}")


if __name__ == "__main__":
    sys.exit(main())
