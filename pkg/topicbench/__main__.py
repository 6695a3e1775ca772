"""The main entry point for the application."""

##############################################################################
# Python imports.
import logging
import sys
from argparse import ArgumentParser, Namespace
from pathlib import Path
from typing import NoReturn, Sequence

##############################################################################
# Local imports.
from . import __version__
from .commands import COMMANDS, setup_logging
from .data import ExitStates
from .errors import InputError, TopicBenchError

##############################################################################
log = logging.getLogger(__name__)


##############################################################################
class _Parser(ArgumentParser):
    """An argument parser that exits with the input error state."""

    def error(self, message: str) -> NoReturn:
        """Report a usage error and exit.

        Args:
            message: The error message.
        """
        self.print_usage(sys.stderr)
        self.exit(ExitStates.INPUT_ERROR.value, f"{self.prog}: error: {message}\n")


##############################################################################
def get_args(arguments: Sequence[str] | None = None) -> Namespace:
    """Get the command line arguments.

    Args:
        arguments: The arguments to parse; defaults to the real command line.

    Returns:
        The parsed command line arguments.
    """
    parser = _Parser(
        prog="topicbench",
        description="A benchmark toolkit for topic-popularity prediction methods.",
        epilog=f"v{__version__}",
    )

    # Add --config
    parser.add_argument(
        "--config",
        type=Path,
        help="The configuration file to use, rather than the default one",
    )

    # Add --workers
    parser.add_argument(
        "--workers",
        type=int,
        help="The number of parallel workers; 0 means all available cores",
    )

    # Add --verbose and --quiet
    chattiness = parser.add_mutually_exclusive_group()
    chattiness.add_argument(
        "-v", "--verbose", action="store_true", help="Log debugging detail"
    )
    chattiness.add_argument(
        "-q", "--quiet", action="store_true", help="Only log warnings and errors"
    )

    # Add --version
    parser.add_argument(
        "--version",
        help="Show version information.",
        action="version",
        version=f"%(prog)s {__version__}",
    )

    # Add the commands.
    commands = parser.add_subparsers(title="commands", dest="command", required=True)
    for command in COMMANDS:
        command.add_parser(commands)

    # Return the arguments.
    return parser.parse_args(arguments)


##############################################################################
def main(arguments: Sequence[str] | None = None) -> ExitStates:
    """Run a command.

    Args:
        arguments: The arguments to run with; defaults to the real command line.

    Returns:
        The exit state of the command.
    """
    args = get_args(arguments)
    setup_logging(args.verbose, args.quiet)
    try:
        args.handler(args)
    except TopicBenchError as error:
        log.error("%s", error)
        match error:
            case InputError():
                return ExitStates.INPUT_ERROR
            case _:
                return ExitStates.INVARIANT_VIOLATION
    return ExitStates.OKAY


##############################################################################
def run() -> None:
    """Run the application."""
    sys.exit(main().value)


##############################################################################
if __name__ == "__main__":
    run()

### __main__.py ends here
