"""Provides the class that holds a whole social network."""

##############################################################################
# Python imports.
from collections import Counter
from hashlib import sha256
from json import dumps
from typing import Iterable, Iterator

##############################################################################
# Local imports.
from ..errors import InputError
from .bucketing import TimeBucketing, bucketize
from .graphs import FollowerGraph, InteractionGraph, interactions
from .message import Message
from .snapshot import TimeSeries, TopicSnapshot


##############################################################################
class Dataset:
    """A social network: its messages, its users and how they relate.

    A dataset is never changed once built; new data means a new dataset.
    """

    class Error(InputError):
        """Raised when a dataset can't be built or queried."""

    def __init__(
        self,
        messages: Iterable[Message],
        interaction_graph: InteractionGraph,
        follower_graph: FollowerGraph,
        bucketing: TimeBucketing,
    ) -> None:
        """Initialise the dataset.

        Args:
            messages: The messages of the network.
            interaction_graph: Who interacts with whom.
            follower_graph: Who follows whom.
            bucketing: How time is divided into buckets.

        Raises:
            Dataset.Error: If two messages share an ID.
        """
        self._messages = tuple(messages)
        """All the messages, in the order they were given."""
        self._by_id: dict[str, Message] = {}
        """The messages, keyed by their ID."""
        for message in self._messages:
            if message.id in self._by_id:
                raise self.Error(f"Duplicate message ID {message.id!r}")
            self._by_id[message.id] = message
        self._interaction_graph = interaction_graph
        """Who interacts with whom."""
        self._follower_graph = follower_graph
        """Who follows whom."""
        self._bucketing = bucketing
        """How time is divided."""
        self._buckets = bucketize(self._messages, bucketing)
        """The message IDs of each bucket."""
        self._topics: dict[str, dict[int, list[str]]] = {}
        """The message IDs of each topic in each bucket."""
        self._active: dict[int, frozenset[str]] = {}
        """The users who post anything in each bucket."""
        for bucket, message_ids in self._buckets.items():
            self._active[bucket] = frozenset(
                self._by_id[message_id].author for message_id in message_ids
            )
            for message_id in message_ids:
                for topic in self._by_id[message_id].hashtags:
                    self._topics.setdefault(topic, {}).setdefault(bucket, []).append(
                        message_id
                    )

    @property
    def bucketing(self) -> TimeBucketing:
        """How time is divided into buckets."""
        return self._bucketing

    @property
    def interaction_graph(self) -> InteractionGraph:
        """Who interacts with whom."""
        return self._interaction_graph

    @property
    def follower_graph(self) -> FollowerGraph:
        """Who follows whom."""
        return self._follower_graph

    @property
    def buckets(self) -> dict[int, list[str]]:
        """The message IDs of each bucket, in bucket order."""
        return {bucket: list(ids) for bucket, ids in self._buckets.items()}

    @property
    def bucket_range(self) -> tuple[int, int] | None:
        """The first and last bucket holding messages, or `None` if empty."""
        if not self._buckets:
            return None
        return min(self._buckets), max(self._buckets)

    @property
    def topics(self) -> list[str]:
        """Every hashtag used in the dataset, in lexical order."""
        return sorted(self._topics)

    def topic_counts(self) -> Counter[str]:
        """The corpus-wide message count of every hashtag."""
        return Counter(
            {
                topic: sum(len(ids) for ids in buckets.values())
                for topic, buckets in self._topics.items()
            }
        )

    def message(self, message_id: str) -> Message:
        """Get a message by its ID."""
        return self._by_id[message_id]

    def bucket_messages(self, bucket: int) -> list[Message]:
        """All the messages posted in a bucket."""
        return [self._by_id[message_id] for message_id in self._buckets.get(bucket, [])]

    def bucket_active_users(self, bucket: int) -> frozenset[str]:
        """The users who posted anything in a bucket."""
        return self._active.get(bucket, frozenset())

    def topic_snapshot(self, topic: str, bucket: int) -> TopicSnapshot:
        """Get the view of a topic in a bucket.

        Args:
            topic: The hashtag.
            bucket: The bucket.

        Returns:
            The snapshot, holding the casefolded hashtag without its `#`;
            empty if the topic isn't seen in the bucket.
        """
        key = topic.lstrip("#").casefold()
        records = tuple(
            self._by_id[message_id]
            for message_id in self._topics.get(key, {}).get(bucket, [])
        )
        users = frozenset(message.author for message in records)
        return TopicSnapshot(
            topic=key,
            bucket=bucket,
            users=users,
            edges=dict(
                sorted(
                    Counter(
                        (target, source)
                        for target, source in interactions(records)
                        if target in users
                    ).items()
                )
            ),
            messages=tuple(message.id for message in records),
            records=records,
        )

    def topic_series(self, topic: str, first_bucket: int, last_bucket: int) -> TimeSeries:
        """Get the popularity of a topic over a run of buckets.

        Args:
            topic: The hashtag.
            first_bucket: The first bucket of the run.
            last_bucket: The last bucket of the run, inclusive.

        Returns:
            The time series.

        Raises:
            Dataset.Error: If the range is inverted.
        """
        if last_bucket < first_bucket:
            raise self.Error(
                f"Inverted bucket range {first_bucket}..{last_bucket} for {topic!r}"
            )
        buckets = self._topics.get(topic.lstrip("#").casefold(), {})
        return TimeSeries(
            topic,
            first_bucket,
            tuple(
                len(buckets.get(bucket, ()))
                for bucket in range(first_bucket, last_bucket + 1)
            ),
        )

    def series_map(
        self, topics: Iterable[str], first_bucket: int, last_bucket: int
    ) -> dict[str, TimeSeries]:
        """Get the popularity series of several topics over the same run of buckets."""
        return {
            topic: self.topic_series(topic, first_bucket, last_bucket) for topic in topics
        }

    def extended_messages(self, snapshot: TopicSnapshot) -> list[Message]:
        """Every message in a snapshot's bucket posted by the snapshot's users.

        Args:
            snapshot: The snapshot to extend.

        Returns:
            The messages.
        """
        return [
            message
            for message in self.bucket_messages(snapshot.bucket)
            if message.author in snapshot.users
        ]

    @property
    def digest(self) -> str:
        """A digest of the dataset's content."""
        digest = sha256()
        digest.update(
            dumps([self._bucketing.origin, self._bucketing.period]).encode()
        )
        for message in self._messages:
            digest.update(dumps(message.as_json, sort_keys=True).encode())
        for follower in sorted(self._follower_graph.adjacency):
            digest.update(
                dumps([follower, sorted(self._follower_graph.follows(follower))]).encode()
            )
        return digest.hexdigest()

    def __len__(self) -> int:
        """The number of messages in the dataset."""
        return len(self._messages)

    def __iter__(self) -> Iterator[Message]:
        """An iterator over the messages, in the order they were given."""
        return iter(self._messages)


### dataset.py ends here
