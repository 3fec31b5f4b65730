import argparse

from ...experiments.runner import run_quench
from ..options import add_quench_arguments, add_run_arguments, resolve_config

DEFAULTS = {"trials": 100, "seed": 0, "outcome": "random"}


def add_parser(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser("quench", help="quench architecture: lattice export, marginal and conditionals")
    add_run_arguments(parser)
    add_quench_arguments(parser)
    parser.add_argument(
        "--verify-hamiltonian", action="store_true", help="compare exp(-i H) with the CZ product on the lattice"
    )
    parser.set_defaults(handler=run)


def run(args: argparse.Namespace) -> int:
    config = resolve_config(args, ensemble="quench", defaults=DEFAULTS)
    trials, record = run_quench(
        config.ensemble, config.trials, config.seed, config.out, config.threads, args.verify_hamiltonian
    )
    for report in record.reports:
        print(f"{report.statistic:<28} {report.estimate:>12.6g}  {report.verdict.value}")
    return 0 if all(report.passed for report in record.reports) else 1
