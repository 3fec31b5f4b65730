import argparse

from ...experiments.verify import CRITERIA, SUITES, run_verify, summary_table
from ...schemas.report import Verdict


def parse_criteria(value: str) -> list[int]:
    try:
        numbers = [int(part) for part in value.split(",") if part.strip()]
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"expected comma-separated criterion numbers, got '{value}'") from exc
    if any(not 1 <= k <= len(CRITERIA) for k in numbers):
        raise argparse.ArgumentTypeError(f"criterion numbers run from 1 to {len(CRITERIA)}")
    return numbers


def add_parser(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser("verify", help="run the acceptance suite")
    parser.add_argument("suite", choices=SUITES)
    parser.add_argument("--out", help="output directory for verify.json")
    parser.add_argument("--threads", type=int)
    parser.add_argument("--only", type=parse_criteria, help="comma-separated subset of criteria")
    parser.set_defaults(handler=run)


def run(args: argparse.Namespace) -> int:
    results, _ = run_verify(args.suite, args.out, args.threads, args.only)
    print(summary_table(results))
    return 0 if all(r.verdict == Verdict.PASS for r in results) else 1
