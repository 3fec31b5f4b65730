import argparse

from ...experiments.runner import output_dir, run_sample
from ..options import add_ensemble_arguments, add_run_arguments, resolve_config


def add_parser(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser("sample", help="draw output probabilities of a random-circuit ensemble")
    add_run_arguments(parser)
    add_ensemble_arguments(parser)
    parser.add_argument("--outcome", help="zero, random or an explicit bitstring (default zero)")
    parser.set_defaults(handler=run)


def run(args: argparse.Namespace) -> int:
    config = resolve_config(args)
    rows, record = run_sample(config)
    print(f"{record.run_id}: {len(rows)} rows written to {output_dir(config.out)}")
    return 0
