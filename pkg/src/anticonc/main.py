import argparse
import sys
from collections.abc import Sequence

from .cli.commands import COMMANDS
from .core.config import settings
from .core.exceptions import AnticoncError, ConfigError, InputError, ResourceLimitError, SchemaMismatchError
from .core.logger import logging, set_verbosity

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2

USAGE_ERRORS = (ConfigError, SchemaMismatchError, InputError, ResourceLimitError)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog=settings.APP_NAME, description=settings.APP_DESCRIPTION)
    parser.add_argument("--version", action="version", version=f"%(prog)s {settings.APP_VERSION}")
    subparsers = parser.add_subparsers(dest="command", required=True)
    for command in COMMANDS:
        command.add_parser(subparsers)
    for subparser in subparsers.choices.values():
        group = subparser.add_mutually_exclusive_group()
        group.add_argument("-v", "--verbose", action="store_true", help="debug logging")
        group.add_argument("-q", "--quiet", action="store_true", help="warnings and errors only")
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    set_verbosity(args.verbose, args.quiet)
    try:
        return args.handler(args)
    except USAGE_ERRORS as exc:
        print(f"error: {exc.message}", file=sys.stderr)
        return EXIT_USAGE
    except AnticoncError as exc:
        logger.error(exc.message)
        print(f"error: {exc.message}", file=sys.stderr)
        return EXIT_FAILED
    except Exception:
        logger.exception(f"'{args.command}' failed")
        return EXIT_FAILED


if __name__ == "__main__":
    sys.exit(main())
