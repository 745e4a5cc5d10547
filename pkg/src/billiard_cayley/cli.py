"""Command-line front end: ``report``, ``sweep`` and ``export``.

Exit codes: 0 success, 2 usage or validation error, 3 internal consistency
failure.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import Optional, Sequence

from .dihedral import TriangleTriple
from .errors import ConsistencyError, InvalidTripleError, PreconditionError, ResourceError
from .export import EXPORTS, export
from .survey import SWEEP_CAP, default_budget, make_report, rows_to_csv, rows_to_json, sweep

EXIT_USAGE = 2
EXIT_CONSISTENCY = 3


def _positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="billiard-cayley",
        description="Genus of Cayley graphs and billiard surfaces of rational triangles.",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--budget", type=_positive_int, default=None,
                        help="max rotation systems for exhaustive search (default 2^30, env BILLIARD_BUDGET)")
    common.add_argument("--out", type=Path, default=None, help="write output to this file instead of stdout")
    sub = parser.add_subparsers(dest="command", required=True)

    rep = sub.add_parser("report", parents=[common], help="full report for one triangle")
    rep.add_argument("angles", type=int, nargs=3, metavar="P", help="angle numerators p1 p2 p3")
    rep.add_argument("--json", action="store_true", help="machine-readable JSON")
    rep.add_argument("--timings", action="store_true", help="include wall-clock timings")

    sw = sub.add_parser("sweep", parents=[common], help="all canonical triples up to a given n")
    sw.add_argument("limit", type=int, nargs="?", metavar="N", help="largest n to include")
    sw.add_argument("--max-n", type=int, default=None, help="same as N")
    sw.add_argument("--json", action="store_true", help="JSON instead of CSV")

    ex = sub.add_parser("export", parents=[common], help="DOT or JSON artifact for one triangle")
    ex.add_argument("angles", type=int, nargs=3, metavar="P", help="angle numerators p1 p2 p3")
    ex.add_argument("what", choices=EXPORTS)
    return parser


def _emit(text: str, out: Optional[Path]) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        out.write_text(text)


def _run(args: argparse.Namespace) -> None:
    budget = args.budget if args.budget is not None else default_budget()
    if args.command == "report":
        report = make_report(TriangleTriple(*args.angles), budget, timings=args.timings)
        _emit(report.to_json() if args.json else report.to_text(), args.out)
    elif args.command == "sweep":
        if args.limit is not None and args.max_n is not None and args.limit != args.max_n:
            raise PreconditionError("N and --max-n disagree")
        limit = args.limit if args.limit is not None else args.max_n
        if limit is None:
            raise PreconditionError("sweep needs N (or --max-n)")
        if limit > SWEEP_CAP:
            raise PreconditionError(f"sweep limit {limit} exceeds the cap {SWEEP_CAP}")
        rows = sweep(limit, budget)
        _emit(rows_to_json(rows, budget) if args.json else rows_to_csv(rows), args.out)
    else:
        _emit(export(TriangleTriple(*args.angles), args.what, budget), args.out)


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        _run(args)
    except ConsistencyError as exc:
        print(f"internal consistency failure: {exc}", file=sys.stderr)
        return EXIT_CONSISTENCY
    except (InvalidTripleError, PreconditionError, ResourceError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    return 0


if __name__ == "__main__":
    sys.exit(main())
