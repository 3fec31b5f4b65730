import argparse

from ...experiments.runner import apply_tolerances, run_analyze
from ..options import add_statistic_arguments, resolve_statistics


def add_parser(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser("analyze", help="statistics of a sample CSV")
    parser.add_argument("input", help="CSV written by 'sample'")
    parser.add_argument("--config", help="JSON file with 'statistics' and 'tolerances' sections")
    parser.add_argument("--out", help="output directory for report.json")
    parser.add_argument("--svg", help="write a histogram of N p with the Porter-Thomas overlay")
    add_statistic_arguments(parser)
    parser.set_defaults(handler=run)


def run(args: argparse.Namespace) -> int:
    selection, tolerances = resolve_statistics(args)
    apply_tolerances(tolerances)
    record = run_analyze(args.input, selection, args.out, args.svg)
    for report in record.reports:
        print(f"{report.statistic:<20} {report.estimate:>12.6g}  {report.verdict.value}")
    return 0 if all(report.passed for report in record.reports) else 1
