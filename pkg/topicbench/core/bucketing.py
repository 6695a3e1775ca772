"""Code for dividing time into buckets."""

##############################################################################
# Python imports.
from dataclasses import dataclass
from datetime import datetime
from math import floor
from typing import Final, Iterable

##############################################################################
# pytz imports.
from pytz import UTC

##############################################################################
# Backward-compatible typing.
from typing_extensions import Self

##############################################################################
# Local imports.
from ..errors import InputError
from .message import Message

##############################################################################
DAY: Final[int] = 86400
"""The default bucket period, in seconds."""


##############################################################################
def midnight_utc(timestamp: float) -> float:
    """Find midnight, UTC, of the day a timestamp falls in.

    Args:
        timestamp: The timestamp, in seconds since the epoch.

    Returns:
        Midnight of that day, in seconds since the epoch.
    """
    return (
        datetime.fromtimestamp(timestamp, UTC)
        .replace(hour=0, minute=0, second=0, microsecond=0)
        .timestamp()
    )


##############################################################################
@dataclass(frozen=True)
class TimeBucketing:
    """Divides time into a series of equal-length periods."""

    class Error(InputError):
        """Raised when a bucketing can't be used."""

    origin: float = 0.0
    """The start of bucket 0, in seconds since the epoch."""

    period: float = DAY
    """The length of each bucket, in seconds."""

    def __post_init__(self) -> None:
        """Check the bucketing.

        Raises:
            TimeBucketing.Error: If the period isn't positive.
        """
        if self.period <= 0:
            raise self.Error(f"The bucket period must be positive, not {self.period}")

    @classmethod
    def for_messages(cls, messages: Iterable[Message], period: float = DAY) -> Self:
        """Create a bucketing whose origin is midnight before the first message.

        Args:
            messages: The messages to be bucketed.
            period: The length of each bucket.

        Returns:
            The bucketing.
        """
        earliest = min((message.timestamp for message in messages), default=None)
        return cls(0.0 if earliest is None else midnight_utc(earliest), period)

    def bucket_of(self, timestamp: float) -> int:
        """Get the bucket a time falls in.

        Args:
            timestamp: The time, in seconds since the epoch.

        Returns:
            The index of the bucket.
        """
        return floor((timestamp - self.origin) / self.period)


##############################################################################
def bucketize(
    messages: Iterable[Message], bucketing: TimeBucketing
) -> dict[int, list[str]]:
    """Divide messages into time buckets.

    Args:
        messages: The messages to divide.
        bucketing: The bucketing to use.

    Returns:
        The message IDs of each bucket, keyed by bucket index, in ascending
        bucket order. Within a bucket the input order is kept.
    """
    buckets: dict[int, list[str]] = {}
    for message in messages:
        buckets.setdefault(bucketing.bucket_of(message.timestamp), []).append(
            message.id
        )
    return dict(sorted(buckets.items()))


### bucketing.py ends here
