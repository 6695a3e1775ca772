"""Helpers shared by the command-line commands."""

##############################################################################
# Python imports.
import logging
from argparse import ArgumentParser, ArgumentTypeError, Namespace
from contextlib import contextmanager
from pathlib import Path
from time import perf_counter
from typing import Any, Iterable, Iterator, Sequence

##############################################################################
# Humanize imports.
from humanize import intcomma, naturaldelta

##############################################################################
# Rich imports.
from rich.console import Console
from rich.logging import RichHandler
from rich.table import Table

##############################################################################
# Local imports.
from ..core import Dataset
from ..data import Configuration, RunManifest, load_configuration
from ..ingest import IngestReport, load_dataset

##############################################################################
log = logging.getLogger(__name__)

##############################################################################
console = Console()
"""Where reports are printed."""


##############################################################################
def setup_logging(verbose: bool = False, quiet: bool = False) -> None:
    """Send the package's logging to stderr.

    Args:
        verbose: Log at debug level.
        quiet: Only log warnings and errors.
    """
    logger = logging.getLogger("topicbench")
    logger.handlers.clear()
    logger.addHandler(
        RichHandler(console=Console(stderr=True), show_path=False, show_time=False)
    )
    logger.setLevel(
        logging.DEBUG if verbose else logging.WARNING if quiet else logging.INFO
    )
    logger.propagate = False


##############################################################################
def existing_file(value: str) -> Path:
    """Argument type for a file that has to exist."""
    if not (path := Path(value)).is_file():
        raise ArgumentTypeError(f"no such file: {value}")
    return path


##############################################################################
def run_configuration(args: Namespace, **overrides: Any) -> Configuration:
    """Get the configuration for a run.

    Args:
        args: The parsed command line.
        overrides: Further values from the command's own flags.

    Returns:
        The configuration file's settings with any flags applied on top.
    """
    return load_configuration(args.config).with_overrides(
        workers=args.workers,
        language_allowlist=getattr(args, "languages", None),
        **overrides,
    )


##############################################################################
def add_corpus_arguments(parser: ArgumentParser, required: bool = True) -> None:
    """Add the arguments that name a corpus to load.

    Args:
        parser: The parser to add to.
        required: Whether the corpus has to be given.
    """
    parser.add_argument(
        "--messages",
        type=existing_file,
        nargs="+",
        required=required,
        help="The message corpus files, in merge order",
    )
    parser.add_argument(
        "--followers", type=existing_file, help="The follower edge file"
    )
    parser.add_argument(
        "--origin",
        type=float,
        help=(
            "The start of bucket 0, in epoch seconds;"
            " defaults to midnight UTC of the first message"
        ),
    )
    parser.add_argument(
        "--languages",
        nargs="+",
        metavar="LANGUAGE",
        help="Only keep messages in these languages; overrides the configured allowlist",
    )


##############################################################################
def corpus_inputs(args: Namespace) -> list[Path]:
    """The files of the corpus named on the command line."""
    return [*args.messages, *([args.followers] if args.followers else [])]


##############################################################################
def load_corpus(args: Namespace, configuration: Configuration) -> tuple[Dataset, IngestReport]:
    """Load the corpus named on the command line.

    Args:
        args: The parsed command line.
        configuration: The configuration of the run.

    Returns:
        The dataset and the ingest report.
    """
    started = perf_counter()
    dataset, report = load_dataset(
        args.messages,
        args.followers,
        configuration.bucket_period,
        args.origin,
        configuration.language_allowlist or None,
        workers=configuration.workers or -1,
    )
    log.info(
        "Loaded %s messages (%s rejected) in %s",
        intcomma(report.messages_ok),
        intcomma(report.messages_rejected),
        naturaldelta(perf_counter() - started, minimum_unit="milliseconds"),
    )
    return dataset, report


##############################################################################
@contextmanager
def recorded_run(
    command: str, configuration: Configuration, directory: Path, inputs: Iterable[Path] = ()
) -> Iterator[list[Path]]:
    """Record a run in a manifest beside its outputs.

    Args:
        command: The name of the command.
        configuration: The configuration of the run.
        directory: The output directory.
        inputs: The input files of the run.

    Yields:
        A list the run adds its output files to.

    Note:
        The manifest is only written if the run finishes without error.
    """
    manifest = RunManifest.start(command, configuration, inputs)
    directory.mkdir(parents=True, exist_ok=True)
    outputs: list[Path] = []
    started = perf_counter()
    yield outputs
    written = manifest.finish(directory, outputs)
    log.info(
        "%s finished in %s; manifest written to %s",
        command,
        naturaldelta(perf_counter() - started, minimum_unit="milliseconds"),
        written,
    )


##############################################################################
def show_table(title: str, headers: Sequence[str], rows: Iterable[Sequence[Any]]) -> None:
    """Print a table of results.

    Args:
        title: The title of the table.
        headers: The column headers.
        rows: The rows; floats are shown to four places.
    """
    table = Table(title=title)
    for header in headers:
        table.add_column(header)
    for row in rows:
        table.add_row(
            *(f"{cell:.4f}" if isinstance(cell, float) else str(cell) for cell in row)
        )
    console.print(table)


### common.py ends here
