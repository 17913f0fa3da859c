"""
galg: graph algebras from the command line

Commands:
- series <file> --algebra C|K|CT|KT|f:<file>|fT:<file>|generic|genericT
- check <file>
- search --vertices V --edges E --mode forest|tree [--generic] [--seeds k]
- tutte <file>
- reconstruct <file> [--seed s]

JSON goes to stdout, logs and progress bars to stderr.
Exit codes: 0 success, 1 check failure, 2 usage or parse error, 3 resource bound.
"""

import argparse
import logging
import sys
from typing import List, Optional

from graph_module.multigraph import Multigraph
from theory_module.commands import ALGEBRAS, reconstruct_report, series_report, tutte_report
from theory_module.search import search
from theory_module.validation import run_checks
from utils.errors import BoundExceededError, ConfigError, GalgError, GraphParseError, InvalidInputError
from utils.schema import GalgConfig

logger = logging.getLogger("galg")

EXIT_OK, EXIT_CHECK_FAILED, EXIT_USAGE, EXIT_BOUND = 0, 1, 2, 3


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="galg", description=__doc__,
                                     formatter_class=argparse.RawDescriptionHelpFormatter)
    sub = parser.add_subparsers(dest="command", required=True)

    series = sub.add_parser("series", help="Hilbert series of one algebra")
    series.add_argument("graph", help="graph file")
    series.add_argument("--algebra", default="C", help=f"one of {', '.join(ALGEBRAS)}")
    series.add_argument("--seeds", type=int, default=None, help="seed count for generic series")
    series.add_argument("--json", action="store_true",
                        help="print only the JSON report (the human summary goes to stderr anyway)")

    check = sub.add_parser("check", help="run the theorem validation suite")
    check.add_argument("graph", help="graph file")

    find = sub.add_parser("search", help="find Tutte-equivalent pairs separated by filtered series")
    find.add_argument("--vertices", type=int, required=True)
    find.add_argument("--edges", type=int, required=True)
    find.add_argument("--mode", choices=("forest", "tree"), default="forest")
    find.add_argument("--generic", action="store_true", help="also compute generic series")
    find.add_argument("--seeds", type=int, default=None, help="seed count for generic series")
    find.add_argument("--workers", type=int, default=1, help="worker processes")
    find.add_argument("--quiet", action="store_true", help="no progress bar")

    poly = sub.add_parser("tutte", help="Tutte polynomial and tree/forest counts")
    poly.add_argument("graph", help="graph file")

    rebuild = sub.add_parser("reconstruct", help="rebuild the graph from its vertex generators")
    rebuild.add_argument("graph", help="graph file")
    rebuild.add_argument("--seed", type=int, default=0, help="seed for the vertex relabeling")
    return parser


def _seeds(count: Optional[int]) -> Optional[List[int]]:
    return list(range(count)) if count is not None else None


def run(args: argparse.Namespace, config: GalgConfig) -> int:
    if args.command == "search":
        report = search(args.vertices, args.edges, args.mode, generic=args.generic,
                        seeds=_seeds(args.seeds), workers=args.workers, quiet=args.quiet,
                        config=config)
        print(report.model_dump_json(indent=2))
        return EXIT_OK

    g = Multigraph.from_file(args.graph)
    if args.command == "series":
        report = series_report(g, args.algebra, seeds=_seeds(args.seeds), config=config)
        if not args.json:
            print(f"{args.algebra}: {report.pretty}", file=sys.stderr)
        print(report.model_dump_json(indent=2))
        return EXIT_OK
    if args.command == "check":
        report = run_checks(g, config)
        print(report.model_dump_json(indent=2))
        return EXIT_OK if report.passed else EXIT_CHECK_FAILED
    if args.command == "tutte":
        print(tutte_report(g, config).model_dump_json(indent=2))
        return EXIT_OK
    report = reconstruct_report(g, args.seed, config)
    print(report.model_dump_json(indent=2))
    return EXIT_OK if report.isomorphic else EXIT_CHECK_FAILED


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_OK if e.code == 0 else EXIT_USAGE

    try:
        config = GalgConfig.from_env()
    except ConfigError as e:
        print(f"❌ {e}", file=sys.stderr)
        return EXIT_USAGE
    logging.basicConfig(level=config.log_level, stream=sys.stderr,
                        format="%(levelname)s %(name)s: %(message)s")

    try:
        return run(args, config)
    except (GraphParseError, InvalidInputError, ConfigError) as e:
        logger.error(f"❌ {e}")
        return EXIT_USAGE
    except BoundExceededError as e:
        logger.error(f"❌ {e}")
        return EXIT_BOUND
    except FileNotFoundError as e:
        logger.error(f"❌ {e}")
        return EXIT_USAGE
    except GalgError as e:
        logger.error(f"❌ {e}")
        return EXIT_CHECK_FAILED


if __name__ == "__main__":
    sys.exit(main())
