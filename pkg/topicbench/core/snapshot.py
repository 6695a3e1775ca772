"""The views of a topic that the benchmark works with."""

##############################################################################
# Python imports.
from dataclasses import dataclass, field

##############################################################################
# Local imports.
from ..errors import InvariantViolation
from .message import Message


##############################################################################
@dataclass(frozen=True)
class TopicSnapshot:
    """A single topic as seen in a single time bucket."""

    topic: str
    """The hashtag that is the topic, casefolded and without its `#`."""

    bucket: int
    """The index of the time bucket."""

    users: frozenset[str] = frozenset()
    """The users who posted about the topic in the bucket."""

    edges: dict[tuple[str, str], int] = field(default_factory=dict)
    """The interactions between those users found in the topic's messages."""

    messages: tuple[str, ...] = ()
    """The IDs of the messages about the topic in the bucket."""

    records: tuple[Message, ...] = field(default=(), compare=False, repr=False)
    """The messages themselves, in the same order as `messages`."""

    def __post_init__(self) -> None:
        """Check the snapshot.

        Raises:
            InvariantViolation: If the snapshot is inconsistent.
        """
        if self.records and {message.author for message in self.records} != self.users:
            raise InvariantViolation(
                f"Users of {self.topic!r}@{self.bucket} aren't its message authors"
            )
        for target, source in self.edges:
            if target not in self.users or source not in self.users:
                raise InvariantViolation(
                    f"Edge {target!r}<-{source!r} of {self.topic!r}@{self.bucket} "
                    "leaves the snapshot"
                )

    @property
    def popularity(self) -> int:
        """The popularity of the topic in the bucket."""
        return len(self.messages)

    def __bool__(self) -> bool:
        """`True` if the topic was posted about in the bucket."""
        return bool(self.messages)


##############################################################################
def popularity(snapshot: TopicSnapshot) -> int:
    """Get the popularity of a topic snapshot.

    Args:
        snapshot: The snapshot.

    Returns:
        The number of messages about the topic in the snapshot's bucket.
    """
    return snapshot.popularity


##############################################################################
@dataclass(frozen=True)
class TimeSeries:
    """The popularity of a topic over a run of buckets."""

    topic: str
    """The hashtag that is the topic."""

    start_bucket: int
    """The bucket of the first count."""

    counts: tuple[int, ...]
    """The popularity in each bucket."""

    def __post_init__(self) -> None:
        """Check the series.

        Raises:
            InvariantViolation: If a count is negative.
        """
        if any(count < 0 for count in self.counts):
            raise InvariantViolation(f"Negative count in the series of {self.topic!r}")

    @property
    def end_bucket(self) -> int:
        """The bucket of the last count."""
        return self.start_bucket + len(self.counts) - 1

    def covers(self, bucket: int) -> bool:
        """Does the series cover the given bucket?"""
        return self.start_bucket <= bucket <= self.end_bucket

    def count_at(self, bucket: int) -> int:
        """Get the count at the given bucket.

        Args:
            bucket: The bucket.

        Returns:
            The count.

        Raises:
            IndexError: If the series doesn't cover the bucket.
        """
        if not self.covers(bucket):
            raise IndexError(f"{self.topic!r} has no count for bucket {bucket}")
        return self.counts[bucket - self.start_bucket]

    def window(self, end_bucket: int, length: int) -> tuple[int, ...]:
        """Get the trailing window of counts ending at a bucket.

        Args:
            end_bucket: The last bucket of the window.
            length: The length of the window.

        Returns:
            The counts; buckets the series doesn't cover count as zero.
        """
        return tuple(
            self.count_at(bucket) if self.covers(bucket) else 0
            for bucket in range(end_bucket - length + 1, end_bucket + 1)
        )

    def __len__(self) -> int:
        """The number of buckets in the series."""
        return len(self.counts)


### snapshot.py ends here
