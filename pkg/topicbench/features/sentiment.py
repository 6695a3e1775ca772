"""Provides a lexicon-based sentiment scorer."""

##############################################################################
# Python imports.
import logging
from math import isfinite
from pathlib import Path
from typing import Iterable, Mapping, NamedTuple

##############################################################################
# Backward-compatible typing.
from typing_extensions import Self

##############################################################################
# Local imports.
from ..errors import InputError

##############################################################################
log = logging.getLogger(__name__)


##############################################################################
class Sentiment(NamedTuple):
    """The sentiment of a piece of text."""

    positive: float
    """The summed positive strength."""

    negative: float
    """The summed negative strength (zero or less)."""


##############################################################################
class SentimentLexicon:
    """A mapping of terms to signed sentiment strengths."""

    def __init__(self, scores: Mapping[str, float]) -> None:
        """Initialise the lexicon.

        Args:
            scores: The strength of each term.

        Raises:
            InputError: If a score isn't finite.
        """
        if bad := sorted(term for term, score in scores.items() if not isfinite(score)):
            raise InputError(f"Non-finite sentiment scores for: {', '.join(bad)}")
        self._scores = {term.casefold(): float(score) for term, score in scores.items()}
        """The strength of each term."""

    @classmethod
    def load(cls, path: Path) -> Self:
        """Load a lexicon from a `term<TAB>score` file.

        Args:
            path: The file to load.

        Returns:
            The lexicon.

        Raises:
            InputError: If the file can't be read or holds a bad line.
        """
        scores: dict[str, float] = {}
        try:
            for number, line in enumerate(
                path.read_text(encoding="utf-8").splitlines(), start=1
            ):
                if not line.strip() or line.startswith("#"):
                    continue
                try:
                    term, score = line.split("\t")
                    scores[term.strip()] = float(score)
                except ValueError as error:
                    raise InputError(f"{path}:{number}: bad lexicon line") from error
        except OSError as error:
            raise InputError(f"Unable to read {path}: {error}") from error
        log.debug("Loaded %d lexicon terms from %s", len(scores), path)
        return cls(scores)

    def score(self, tokens: Iterable[str]) -> Sentiment:
        """Score a run of tokens.

        Args:
            tokens: The tokens to score.

        Returns:
            The positive and negative strength of the tokens.
        """
        positive = negative = 0.0
        for token in tokens:
            if (strength := self._scores.get(token, 0.0)) > 0:
                positive += strength
            else:
                negative += strength
        return Sentiment(positive, negative)

    def __len__(self) -> int:
        """The number of terms in the lexicon."""
        return len(self._scores)


### sentiment.py ends here
