"""The domain model: messages, users, topics and time."""

##############################################################################
# Local imports.
from .bucketing import DAY, TimeBucketing, bucketize, midnight_utc
from .dataset import Dataset
from .graphs import FollowerGraph, InteractionGraph, interactions
from .message import Message, normalise_hashtags
from .parse_time import parse_time
from .snapshot import TimeSeries, TopicSnapshot, popularity

##############################################################################
# Exports.
__all__ = [
    "bucketize",
    "Dataset",
    "DAY",
    "FollowerGraph",
    "InteractionGraph",
    "interactions",
    "Message",
    "midnight_utc",
    "normalise_hashtags",
    "parse_time",
    "popularity",
    "TimeBucketing",
    "TimeSeries",
    "TopicSnapshot",
]

### __init__.py ends here
