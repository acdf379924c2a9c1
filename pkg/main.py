import argparse
import logging
import sys
from typing import List, Optional

from commands import COMMANDS
from config import settings
from utils.errors import EXIT_RUNTIME, EXIT_VALIDATION, ModelError, SeedlessRejected

logger = logging.getLogger("addiction")


# ---------------------------------------------------
# Parser
# ---------------------------------------------------
def add_global_options(parser: argparse.ArgumentParser, default=None) -> None:
    parser.add_argument("--config", default=default, help="run configuration (JSON)")
    parser.add_argument("--out", default=default,
                        help="output directory (overrides ADDICTION_OUTPUT_DIR and the config)")
    parser.add_argument("--normalized", action="store_true", default=default,
                        help="report populations as fractions of N")
    parser.add_argument("--seedless", action="store_true", default=default,
                        help="reserved; every command is already deterministic, setting it is an error")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="addiction",
        description="Two-drug addiction model: reduction, equilibria, stability, simulation and portraits",
    )
    add_global_options(parser)
    parser.set_defaults(config=None, out=None, normalized=False, seedless=False)

    subparsers = parser.add_subparsers(dest="command", metavar="COMMAND")
    subparsers.required = True
    for module in COMMANDS.values():
        module.register(subparsers)
    # also accepted after the subcommand name
    for subparser in subparsers.choices.values():
        add_global_options(subparser, default=argparse.SUPPRESS)
    return parser


def configure_logging(level: Optional[str] = None) -> None:
    logging.basicConfig(
        level=getattr(logging, (level or settings.LOG_LEVEL).upper(), logging.INFO),
        format="%(asctime)s [%(levelname)s] %(name)s: %(message)s",
        stream=sys.stderr,
    )


# ---------------------------------------------------
# Entry point
# ---------------------------------------------------
def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on usage errors; usage errors are validation failures here
        return EXIT_VALIDATION if exc.code else 0

    configure_logging()
    try:
        if args.seedless:
            raise SeedlessRejected("--seedless is reserved: no command uses a random number generator")
        return args.handler(args)
    except ModelError as exc:
        logger.error("%s failed: %s", args.command, exc.detail)
        return exc.exit_code
    except OSError as exc:
        logger.error("%s failed writing output: %s", args.command, exc)
        return EXIT_RUNTIME


if __name__ == "__main__":
    sys.exit(main())
