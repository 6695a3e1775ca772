"""Code for loading a whole dataset from its files."""

##############################################################################
# Python imports.
import logging
from pathlib import Path
from typing import Collection, Iterable, Sequence

##############################################################################
# Local imports.
from ..core import DAY, Dataset, FollowerGraph, Message, TimeBucketing
from .followers import parse_followers
from .interactions import build_interaction_graph
from .messages import parse_messages
from .report import IngestReport

##############################################################################
log = logging.getLogger(__name__)


##############################################################################
def build_dataset(
    messages: Iterable[Message],
    follower_graph: FollowerGraph | None = None,
    period: float = DAY,
    origin: float | None = None,
) -> Dataset:
    """Build a dataset from parsed data.

    Args:
        messages: The messages of the network.
        follower_graph: Who follows whom; empty if not given.
        period: The length of a time bucket, in seconds.
        origin: The start of bucket 0; defaults to midnight UTC of the
            earliest message.

    Returns:
        The dataset.
    """
    messages = list(messages)
    return Dataset(
        messages,
        build_interaction_graph(messages),
        follower_graph or FollowerGraph(),
        TimeBucketing.for_messages(messages, period)
        if origin is None
        else TimeBucketing(origin, period),
    )


##############################################################################
def load_dataset(
    messages: Sequence[Path],
    followers: Path | None = None,
    period: float = DAY,
    origin: float | None = None,
    language_allowlist: Collection[str] | None = None,
    workers: int = 1,
) -> tuple[Dataset, IngestReport]:
    """Load a dataset from its files.

    Args:
        messages: The message corpus files, in merge order.
        followers: The follower edge file, if there is one.
        period: The length of a time bucket, in seconds.
        origin: The start of bucket 0; see `build_dataset`.
        language_allowlist: The languages to accept, or `None` for all.
        workers: The number of workers used to parse the corpus.

    Returns:
        The dataset and the report of the ingest.
    """
    parsed, report = parse_messages(list(messages), language_allowlist, workers)
    dataset = build_dataset(
        parsed,
        None if followers is None else parse_followers(followers)[0],
        period,
        origin,
    )
    log.debug("Dataset digest %s", dataset.digest)
    return dataset, report


### loader.py ends here
