"""The content features of a topic."""

##############################################################################
# Python imports.
import re
from typing import Final, Iterable, NamedTuple, Pattern

##############################################################################
# Local imports.
from ..core import Message
from ..ingest import strip_urls, tokenize
from .sentiment import SentimentLexicon

##############################################################################
EMOTICONS: Final[tuple[str, ...]] = (
    ":)", ":-)", ":(", ":-(", ":D", ":-D", ";)", ";-)", ":P", ":-P", ":p", ":-p",
    ":O", ":-O", ":o", ":/", ":-/", ":|", ":-|", ":'(", ":*", ":-*", "<3", "</3",
    "xD", "XD", "^_^", "^^", "-_-", "o_O", "O_o", "T_T", ":3", "B)", "8)",
)
"""The emoticons counted by default."""

_SPECIAL_SIGNAL: Final[Pattern[str]] = re.compile(
    r"([^\W\d_])\1{2,}|([^\w\s])\2{2,}"
)
"""A run of three or more identical letters, or of identical punctuation."""


##############################################################################
def emoticon_pattern(emoticons: Iterable[str] = EMOTICONS) -> Pattern[str]:
    """Build the pattern that finds emoticons.

    Args:
        emoticons: The emoticons to find.

    Returns:
        A pattern that matches any of the emoticons when they aren't part
        of a word.
    """
    alternatives = "|".join(
        re.escape(emoticon) for emoticon in sorted(set(emoticons), key=len, reverse=True)
    )
    return re.compile(rf"(?<!\w)(?:{alternatives})(?!\w)")


_DEFAULT_EMOTICONS: Final[Pattern[str]] = emoticon_pattern()
"""The default emoticon pattern."""


##############################################################################
class ContentFeatures(NamedTuple):
    """The content features of a topic snapshot."""

    emoticons: float
    """The total number of emoticons."""

    special_signals: float
    """The total number of special signals."""

    positive: float
    """The mean positive sentiment per message."""

    negative: float
    """The mean negative sentiment per message."""


##############################################################################
def count_emoticons(text: str, pattern: Pattern[str] = _DEFAULT_EMOTICONS) -> int:
    """Count the emoticons in some text."""
    return len(pattern.findall(strip_urls(text)))


##############################################################################
def count_special_signals(text: str) -> int:
    """Count the special signals in some text.

    Each maximal run of three or more identical letters (within a word) or
    identical punctuation marks counts once.
    """
    return sum(1 for _ in _SPECIAL_SIGNAL.finditer(strip_urls(text)))


##############################################################################
def content_features(
    messages: Iterable[Message],
    lexicon: SentimentLexicon,
    emoticons: Pattern[str] = _DEFAULT_EMOTICONS,
) -> ContentFeatures:
    """Calculate the content features of a topic snapshot.

    Args:
        messages: The messages of the snapshot.
        lexicon: The sentiment lexicon.
        emoticons: The pattern used to find emoticons.

    Returns:
        The content features; all zero for an empty snapshot.
    """
    emoticon_count = signal_count = 0
    positive = negative = 0.0
    total = 0
    for message in messages:
        total += 1
        emoticon_count += count_emoticons(message.text, emoticons)
        signal_count += count_special_signals(message.text)
        sentiment = lexicon.score(tokenize(message.text))
        positive += sentiment.positive
        negative += sentiment.negative
    if not total:
        return ContentFeatures(0.0, 0.0, 0.0, 0.0)
    return ContentFeatures(
        float(emoticon_count), float(signal_count), positive / total, negative / total
    )


### content.py ends here
