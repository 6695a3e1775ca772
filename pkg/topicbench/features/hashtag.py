"""The hashtag features of a topic."""

##############################################################################
# Python imports.
import logging
import re
from collections import Counter
from pathlib import Path
from typing import Final, Iterable, Mapping, NamedTuple, Pattern, Sequence

##############################################################################
# NumPy/SciPy imports.
import numpy as np
from numpy.typing import NDArray
from scipy.stats import entropy

##############################################################################
# Backward-compatible typing.
from typing_extensions import Self

##############################################################################
# Local imports.
from ..core import Message
from ..errors import InputError

##############################################################################
log = logging.getLogger(__name__)


##############################################################################
def kl_divergence(
    p_counts: Sequence[float], q_counts: Sequence[float], smoothing: float = 1.0
) -> float:
    """Calculate the Kullback-Leibler divergence between two word counts.

    Args:
        p_counts: The word counts of the first distribution.
        q_counts: The word counts of the second, over the same words.
        smoothing: The pseudo-count added to every word of both.

    Returns:
        KL(p ‖ q), in nats.
    """
    return float(
        entropy(
            np.asarray(p_counts, dtype=float) + smoothing,
            np.asarray(q_counts, dtype=float) + smoothing,
        )
    )


##############################################################################
class CorpusStats:
    """The word counts of the whole message collection."""

    def __init__(self, documents: Iterable[Sequence[str]]) -> None:
        """Initialise the statistics.

        Args:
            documents: The tokens of every message in the collection.
        """
        counts = Counter(token for document in documents for token in document)
        self._vocabulary = {word: index for index, word in enumerate(sorted(counts))}
        """The position of every word of the collection."""
        self._counts = np.array([counts[word] for word in sorted(counts)], dtype=float)
        """The count of every word of the collection."""

    def counts_of(self, tokens: Iterable[str]) -> NDArray[np.float64]:
        """Count tokens over the collection's vocabulary.

        Args:
            tokens: The tokens to count.

        Returns:
            The count of every collection word among the tokens.

        Note:
            The collection holds every message, so every token of a topic
            is in its vocabulary; any that aren't are ignored.
        """
        ids = [self._vocabulary[token] for token in tokens if token in self._vocabulary]
        return np.bincount(
            np.asarray(ids, dtype=np.int64), minlength=len(self._vocabulary)
        ).astype(float)

    def clarity(self, tokens: Iterable[str]) -> float:
        """Calculate the clarity of some text against the collection.

        Args:
            tokens: The tokens of the text.

        Returns:
            The add-one smoothed KL divergence of the text's word
            distribution from the collection's; zero for no tokens.
        """
        counts = self.counts_of(tokens)
        if not counts.sum():
            return 0.0
        return kl_divergence(counts, self._counts)

    def __len__(self) -> int:
        """The size of the vocabulary."""
        return len(self._vocabulary)


##############################################################################
class Wordlist:
    """The words used to segment hashtags."""

    def __init__(self, words: Iterable[str]) -> None:
        """Initialise the wordlist.

        Args:
            words: The words.
        """
        self._words = frozenset(word.strip().casefold() for word in words if word.strip())
        """The known words."""
        self._longest = max((len(word) for word in self._words), default=0)
        """The length of the longest known word."""

    @classmethod
    def load(cls, path: Path) -> Self:
        """Load a wordlist with one word per line.

        Args:
            path: The file to load.

        Returns:
            The wordlist.

        Raises:
            InputError: If the file can't be read.
        """
        try:
            wordlist = cls(path.read_text(encoding="utf-8").splitlines())
        except OSError as error:
            raise InputError(f"Unable to read {path}: {error}") from error
        log.debug("Loaded %d words from %s", len(wordlist), path)
        return wordlist

    def longest_prefix(self, text: str, start: int) -> int:
        """Find the end of the longest known word starting at a position.

        Args:
            text: The text to look in.
            start: Where the word starts.

        Returns:
            The end of the longest word, or `start` if none matches.
        """
        for end in range(min(len(text), start + self._longest), start, -1):
            if text[start:end].casefold() in self._words:
                return end
        return start

    def __contains__(self, word: object) -> bool:
        """Is the word known?"""
        return word in self._words

    def __len__(self) -> int:
        """The number of known words."""
        return len(self._words)


##############################################################################
_RUN: Final[Pattern[str]] = re.compile(
    r"\d+|[A-Z]+(?![a-z])|[A-Z]?[a-z]+|[^\W\d_]+|.", re.DOTALL
)
"""A run of digits, a capitalised word, a run of letters, or one character."""


##############################################################################
def segment(hashtag: str, wordlist: Wordlist) -> list[str]:
    """Split a hashtag into words.

    Args:
        hashtag: The hashtag.
        wordlist: The known words.

    Returns:
        The words. Known words are matched greedily, longest first; where
        nothing matches the hashtag is split on digit and case boundaries.
    """
    text = hashtag.lstrip("#")
    words: list[str] = []
    position = 0
    while position < len(text):
        if (end := wordlist.longest_prefix(text, position)) == position:
            end = position + len(_RUN.match(text, position).group())  # type: ignore[union-attr]
        words.append(text[position:end].casefold())
        position = end
    return words


##############################################################################
class HashtagFeatures(NamedTuple):
    """The hashtag features of a topic snapshot."""

    length: float
    """The length of the hashtag, in characters."""

    multi_tag_fraction: float
    """The fraction of messages carrying more than one hashtag."""

    clarity: float
    """The clarity of the topic's messages against the collection."""

    extended_clarity: float
    """The clarity of everything the topic's users posted in the bucket."""

    has_number: float
    """One if the hashtag holds a digit, zero if not."""

    words: float
    """The number of words in the hashtag."""


##############################################################################
def hashtag_features(
    topic: str,
    messages: Sequence[Message],
    extended: Sequence[Message],
    corpus_stats: CorpusStats,
    wordlist: Wordlist,
    tokens_of: Mapping[str, Sequence[str]],
) -> HashtagFeatures:
    """Calculate the hashtag features of a topic snapshot.

    Args:
        topic: The hashtag.
        messages: The messages of the snapshot.
        extended: The messages of the bucket posted by the snapshot's users.
        corpus_stats: The word counts of the whole collection.
        wordlist: The words used to segment the hashtag.
        tokens_of: The tokens of every message, keyed by message ID.

    Returns:
        The hashtag features.
    """
    tag = topic.lstrip("#")
    static = (
        float(len(tag)),
        float(any(character.isdigit() for character in tag)),
        float(max(1, len(segment(tag, wordlist)))),
    )
    if not messages:
        return HashtagFeatures(static[0], 0.0, 0.0, 0.0, static[1], static[2])
    return HashtagFeatures(
        static[0],
        sum(1 for message in messages if len(message.hashtags) > 1) / len(messages),
        corpus_stats.clarity(
            token for message in messages for token in tokens_of[message.id]
        ),
        corpus_stats.clarity(
            token for message in extended for token in tokens_of[message.id]
        ),
        static[1],
        static[2],
    )


### hashtag.py ends here
