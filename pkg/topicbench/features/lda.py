"""A latent Dirichlet allocation topic model, trained by collapsed Gibbs sampling."""

##############################################################################
# Python imports.
import logging
from dataclasses import dataclass
from typing import Sequence

##############################################################################
# NumPy imports.
import numpy as np
from numpy.typing import NDArray

##############################################################################
# Local imports.
from ..errors import InputError

##############################################################################
log = logging.getLogger(__name__)


##############################################################################
@dataclass(frozen=True, eq=False)
class TopicModel:
    """A trained topic model."""

    topics: int
    """The number of topics."""

    vocabulary: tuple[str, ...]
    """The words known to the model, in index order."""

    topic_word: NDArray[np.float64]
    """The word distribution of each topic; one row per topic."""

    alpha: float
    """The document-topic prior."""

    beta: float
    """The topic-word prior."""

    seed: int
    """The seed the model was trained with."""

    iterations: int
    """The number of training sweeps."""

    fold_in_iterations: int
    """The number of sweeps used when inferring a document's topics."""

    def __post_init__(self) -> None:
        """Build the word index."""
        object.__setattr__(
            self, "_index", {word: index for index, word in enumerate(self.vocabulary)}
        )

    def word_ids(self, tokens: Sequence[str]) -> NDArray[np.int64]:
        """Map tokens to word IDs, dropping any not in the vocabulary."""
        index: dict[str, int] = self._index  # type: ignore[attr-defined]
        return np.fromiter(
            (index[token] for token in tokens if token in index), dtype=np.int64
        )


##############################################################################
def _sample(weights: NDArray[np.float64], draw: float) -> int:
    """Sample an index in proportion to some weights.

    Args:
        weights: The unnormalised weights.
        draw: A uniform draw in [0, 1).

    Returns:
        The sampled index.
    """
    cumulative = np.cumsum(weights)
    return min(
        int(np.searchsorted(cumulative, draw * cumulative[-1], side="right")),
        len(weights) - 1,
    )


##############################################################################
def lda_fit(
    documents: Sequence[Sequence[str]],
    topics: int = 20,
    seed: int = 0,
    iterations: int = 50,
    alpha: float = 0.1,
    beta: float = 0.01,
    max_documents: int | None = None,
    fold_in_iterations: int = 20,
) -> TopicModel:
    """Train a topic model.

    Args:
        documents: The tokenized documents to train on.
        topics: The number of topics.
        seed: The seed for the sampler.
        iterations: The number of Gibbs sweeps.
        alpha: The document-topic prior.
        beta: The topic-word prior.
        max_documents: The most documents to train on; a seeded sample is
            taken from larger corpora.
        fold_in_iterations: The number of sweeps used later when inferring.

    Returns:
        The trained model.

    Raises:
        InputError: If there are no topics or no vocabulary.
    """
    if topics < 1:
        raise InputError(f"A topic model needs at least one topic, not {topics}")
    random = np.random.default_rng(seed)
    if max_documents is not None and len(documents) > max_documents:
        documents = [
            documents[index]
            for index in np.sort(
                random.choice(len(documents), size=max_documents, replace=False)
            )
        ]
    vocabulary = tuple(sorted({token for document in documents for token in document}))
    if not vocabulary:
        raise InputError("A topic model needs a non-empty vocabulary")
    index = {word: position for position, word in enumerate(vocabulary)}
    words = len(vocabulary)

    # Flatten the corpus into parallel document/word arrays.
    doc_of = np.fromiter(
        (number for number, document in enumerate(documents) for _ in document),
        dtype=np.int64,
    )
    word_of = np.fromiter(
        (index[token] for document in documents for token in document), dtype=np.int64
    )
    assignment = random.integers(topics, size=len(word_of))

    doc_topic = np.zeros((len(documents), topics))
    topic_word = np.zeros((topics, words))
    topic_total = np.zeros(topics)
    np.add.at(doc_topic, (doc_of, assignment), 1)
    np.add.at(topic_word, (assignment, word_of), 1)
    np.add.at(topic_total, assignment, 1)

    for _ in range(iterations):
        draws = random.random(len(word_of))
        for position in range(len(word_of)):
            document, word, topic = doc_of[position], word_of[position], assignment[position]
            doc_topic[document, topic] -= 1
            topic_word[topic, word] -= 1
            topic_total[topic] -= 1
            topic = _sample(
                (doc_topic[document] + alpha)
                * (topic_word[:, word] + beta)
                / (topic_total + words * beta),
                draws[position],
            )
            assignment[position] = topic
            doc_topic[document, topic] += 1
            topic_word[topic, word] += 1
            topic_total[topic] += 1

    distribution = topic_word + beta
    distribution /= distribution.sum(axis=1, keepdims=True)
    log.info(
        "Trained a %d-topic model on %d documents, %d words, %d tokens",
        topics,
        len(documents),
        words,
        len(word_of),
    )
    return TopicModel(
        topics=topics,
        vocabulary=vocabulary,
        topic_word=distribution,
        alpha=alpha,
        beta=beta,
        seed=seed,
        iterations=iterations,
        fold_in_iterations=fold_in_iterations,
    )


##############################################################################
def topic_vector(
    model: TopicModel, tokens: Sequence[str], max_tokens: int | None = None
) -> NDArray[np.float64]:
    """Infer the topic distribution of some text with the model held fixed.

    Args:
        model: The trained model.
        tokens: The tokens of the text.
        max_tokens: The most in-vocabulary tokens to use; the first ones
            are kept.

    Returns:
        The topic distribution; uniform if no token is in the vocabulary.
    """
    word_ids = model.word_ids(tokens)[:max_tokens]
    if not len(word_ids):
        return np.full(model.topics, 1.0 / model.topics)
    random = np.random.default_rng(model.seed)
    assignment = random.integers(model.topics, size=len(word_ids))
    counts = np.bincount(assignment, minlength=model.topics).astype(np.float64)
    for _ in range(model.fold_in_iterations):
        draws = random.random(len(word_ids))
        for position, word in enumerate(word_ids):
            counts[assignment[position]] -= 1
            topic = _sample(
                (counts + model.alpha) * model.topic_word[:, word], draws[position]
            )
            assignment[position] = topic
            counts[topic] += 1
    distribution = counts + model.alpha
    return distribution / distribution.sum()


### lda.py ends here
