import argparse
import json

from ...core.utils.io import ensure_parent
from ...schemas.experiment import ExperimentConfig


def add_parser(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser("schema", help="print the JSON schema of experiment config files")
    parser.add_argument("--out", help="write the schema to this file instead of stdout")
    parser.set_defaults(handler=run)


def run(args: argparse.Namespace) -> int:
    text = json.dumps(ExperimentConfig.model_json_schema(), indent=2) + "\n"
    if args.out:
        ensure_parent(args.out)
        with open(args.out, "w", encoding="utf-8") as handle:
            handle.write(text)
    else:
        print(text, end="")
    return 0
