"""Code for parsing a message corpus."""

##############################################################################
# Python imports.
import logging
from json import JSONDecodeError, loads
from pathlib import Path
from typing import Collection, Iterable, Sequence, TextIO

##############################################################################
# joblib imports.
from joblib import Parallel, delayed

##############################################################################
# Local imports.
from ..core import Message, parse_time
from ..errors import InputError
from .report import IngestReport

##############################################################################
log = logging.getLogger(__name__)

##############################################################################
_REQUIRED = (("id", "missing_id"), ("user", "missing_user"), ("ts", "missing_timestamp"))
"""The required fields of a record, and the reason given when one is missing."""


##############################################################################
def _parse_line(
    line: str, language_allowlist: Collection[str] | None
) -> Message | str:
    """Parse a single line of a corpus.

    Args:
        line: The line to parse.
        language_allowlist: The languages to accept, or `None` for all.

    Returns:
        The message, or the reason the line was rejected.
    """
    if not line.strip():
        return "empty_line"
    try:
        data = loads(line)
    except JSONDecodeError:
        return "invalid_json"
    if not isinstance(data, dict):
        return "not_an_object"
    for name, reason in _REQUIRED:
        if data.get(name) in (None, ""):
            return reason
    if language_allowlist is not None and data.get("lang") not in language_allowlist:
        return "language_filtered"
    try:
        if parse_time(data["ts"]) < 0:
            return "bad_timestamp"
    except (ValueError, TypeError, AttributeError):
        return "bad_timestamp"
    try:
        return Message.from_json(data)
    except (ValueError, TypeError):
        return "bad_field"


##############################################################################
def _parse_stream(
    source: TextIO, name: str, language_allowlist: Collection[str] | None
) -> tuple[list[Message], IngestReport]:
    """Parse a single stream of line-delimited records.

    Args:
        source: The stream to parse.
        name: The name of the stream, for logging.
        language_allowlist: The languages to accept, or `None` for all.

    Returns:
        The messages and the report for the stream.
    """
    messages: list[Message] = []
    report = IngestReport()
    for number, line in enumerate(source, start=1):
        parsed = _parse_line(line, language_allowlist)
        if isinstance(parsed, str):
            report.reject(parsed)
            log.debug("%s:%d rejected: %s", name, number, parsed)
        else:
            messages.append(parsed)
            report.messages_ok += 1
    return messages, report


##############################################################################
def _parse_path(
    path: Path, language_allowlist: Collection[str] | None
) -> tuple[list[Message], IngestReport]:
    """Parse a single corpus file.

    Args:
        path: The path to the file.
        language_allowlist: The languages to accept, or `None` for all.

    Returns:
        The messages and the report for the file.

    Raises:
        InputError: If the file can't be read.
    """
    try:
        with path.open(encoding="utf-8") as source:
            return _parse_stream(source, str(path), language_allowlist)
    except (OSError, UnicodeDecodeError) as error:
        raise InputError(f"Unable to read {path}: {error}") from error


##############################################################################
def _merge(
    shards: Iterable[tuple[list[Message], IngestReport]],
) -> tuple[list[Message], IngestReport]:
    """Merge parsed shards, in order, into a single corpus.

    Args:
        shards: The parsed shards.

    Returns:
        The messages and the report for the whole corpus.

    Note:
        A message whose ID was already seen is rejected as a duplicate.
    """
    messages: list[Message] = []
    report = IngestReport()
    seen: set[str] = set()
    for shard_messages, shard_report in shards:
        report.messages_rejected += shard_report.messages_rejected
        report.reject_reasons.update(shard_report.reject_reasons)
        for message in shard_messages:
            if message.id in seen:
                report.reject("duplicate_id")
                log.debug("Rejected duplicate message ID %r", message.id)
                continue
            seen.add(message.id)
            messages.append(message)
            report.messages_ok += 1
    report.users = len({message.author for message in messages})
    report.topics = len({tag for message in messages for tag in message.hashtags})
    report.tagged = sum(1 for message in messages if message.has_hashtags)
    return messages, report


##############################################################################
def parse_messages(
    source: Path | TextIO | Sequence[Path],
    language_allowlist: Collection[str] | None = None,
    workers: int = 1,
) -> tuple[list[Message], IngestReport]:
    """Parse a corpus of line-delimited JSON message records.

    Args:
        source: A path, an open stream, or several paths (shards).
        language_allowlist: The languages to accept, or `None` for all.
        workers: The number of workers used to parse shards.

    Returns:
        The messages, in input order, and the report of the parse.

    Raises:
        InputError: If an input can't be read.

    Note:
        Malformed lines never stop the parse; they are counted in the
        report. Shards are merged in the order they were given.
    """
    if isinstance(source, Path):
        shards = [_parse_path(source, language_allowlist)]
    elif isinstance(source, (list, tuple)):
        shards = (
            Parallel(n_jobs=workers)(
                delayed(_parse_path)(path, language_allowlist) for path in source
            )
            if workers != 1 and len(source) > 1
            else [_parse_path(path, language_allowlist) for path in source]
        )
    else:
        shards = [_parse_stream(source, "<stream>", language_allowlist)]  # type: ignore[arg-type]
    messages, report = _merge(shards)
    log.info(
        "Ingested %d messages, rejected %d", report.messages_ok, report.messages_rejected
    )
    return messages, report


### messages.py ends here
