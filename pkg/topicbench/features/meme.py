"""The meme features of a topic."""

##############################################################################
# Python imports.
from typing import AbstractSet, NamedTuple

##############################################################################
# Local imports.
from ..core import TopicSnapshot


##############################################################################
class MemeFeatures(NamedTuple):
    """The meme features of a topic snapshot."""

    users: float
    """The number of users who posted about the topic."""

    user_fraction: float
    """The fraction of the bucket's active users who posted about it."""

    mentions: float
    """The number of the topic's messages that mention someone."""

    mention_fraction: float
    """The fraction of the topic's messages that mention someone."""

    retweets: float
    """The number of the topic's messages that are retweets."""

    retweet_fraction: float
    """The fraction of the topic's messages that are retweets."""

    messages: float
    """The number of messages about the topic."""

    url_fraction: float
    """The fraction of the topic's messages that carry a URL."""


##############################################################################
def meme_features(
    snapshot: TopicSnapshot, bucket_active_users: AbstractSet[str]
) -> MemeFeatures:
    """Calculate the meme features of a topic snapshot.

    Args:
        snapshot: The snapshot, with its message records.
        bucket_active_users: Everyone who posted anything in the bucket.

    Returns:
        The meme features; all zero for an empty snapshot.
    """
    if not (total := len(snapshot.records)):
        return MemeFeatures(0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0)
    mentions = sum(1 for message in snapshot.records if message.mentions)
    retweets = sum(1 for message in snapshot.records if message.retweet_of)
    urls = sum(1 for message in snapshot.records if message.urls)
    return MemeFeatures(
        float(len(snapshot.users)),
        len(snapshot.users) / max(len(bucket_active_users | snapshot.users), 1),
        float(mentions),
        mentions / total,
        float(retweets),
        retweets / total,
        float(total),
        urls / total,
    )


### meme.py ends here
