"""Provides the tokenizer shared by every text feature."""

##############################################################################
# Python imports.
import re
from typing import Final, Pattern

##############################################################################
_URL: Final[Pattern[str]] = re.compile(r"https?://\S+|www\.\S+", re.IGNORECASE)
"""Regular expression that finds links."""

_MARKED: Final[Pattern[str]] = re.compile(r"[#@]\w+")
"""Regular expression that finds hashtags and mentions."""

_WORD: Final[Pattern[str]] = re.compile(r"[^\W\d_]+(?:'[^\W\d_]+)?|\d+")
"""Regular expression that finds words on Unicode word boundaries."""


##############################################################################
def strip_urls(text: str) -> str:
    """Remove any links from some text.

    Args:
        text: The text to clean.

    Returns:
        The text with links replaced by spaces.
    """
    return _URL.sub(" ", text)


##############################################################################
def tokenize(text: str) -> list[str]:
    """Split message text into word tokens.

    Args:
        text: The text to split.

    Returns:
        The case-folded word tokens, with links, hashtags and mentions
        removed.
    """
    return [
        token.casefold() for token in _WORD.findall(_MARKED.sub(" ", strip_urls(text)))
    ]


### tokens.py ends here
