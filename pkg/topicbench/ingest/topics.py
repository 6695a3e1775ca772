"""Code for finding the candidate topics of a corpus."""

##############################################################################
# Python imports.
from collections import Counter
from typing import Iterable

##############################################################################
# Local imports.
from ..core import Message
from ..errors import InputError


##############################################################################
def extract_topics(messages: Iterable[Message], min_total_count: int = 1) -> list[str]:
    """Find the hashtags that are used often enough to be topics.

    Args:
        messages: The messages of the corpus.
        min_total_count: The fewest messages a hashtag needs to appear in.

    Returns:
        The hashtags, most used first, ties in lexical order.

    Raises:
        InputError: If the minimum count is less than one.
    """
    if min_total_count < 1:
        raise InputError(f"The minimum topic count must be at least 1, not {min_total_count}")
    counts = Counter(tag for message in messages for tag in message.hashtags)
    return [
        tag
        for tag, count in sorted(counts.items(), key=lambda item: (-item[1], item[0]))
        if count >= min_total_count
    ]


### topics.py ends here
