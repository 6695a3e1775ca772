"""Assembles every feature of a topic into rows of the feature matrix."""

##############################################################################
# Python imports.
import csv
import logging
from dataclasses import dataclass, field
from json import dumps, loads
from pathlib import Path
from time import perf_counter
from typing import Any, Iterable, Pattern, Sequence

##############################################################################
# NumPy/joblib imports.
import numpy as np
from joblib import Parallel, delayed, effective_n_jobs
from numpy.typing import NDArray

##############################################################################
# Backward-compatible typing.
from typing_extensions import Self

##############################################################################
# Local imports.
from ..core import Dataset
from ..data import Configuration, resource
from ..errors import InputError, SchemaMismatch, TopicBenchError
from ..ingest import tokenize
from .content import EMOTICONS, content_features, emoticon_pattern
from .hashtag import CorpusStats, Wordlist, hashtag_features
from .lda import TopicModel, lda_fit, topic_vector
from .meme import meme_features
from .network import network_features
from .schema import SCHEMA, Category, schema_hash
from .sentiment import SentimentLexicon
from .timeseries import timeseries_features
from .users import pagerank, user_features

##############################################################################
log = logging.getLogger(__name__)


##############################################################################
@dataclass(eq=False)
class FeatureMatrix:
    """The feature rows of a set of (topic, bucket) pairs."""

    topics: tuple[str, ...]
    """The topic of each row."""

    buckets: tuple[int, ...]
    """The bucket of each row."""

    values: NDArray[np.float64]
    """The feature values; one row per (topic, bucket), one column per dimension."""

    columns: tuple[str, ...] = SCHEMA.columns
    """The names of the columns."""

    diagnostics: dict[str, str] = field(default_factory=dict)
    """Problems found while extracting rows, keyed by `topic@bucket`."""

    def __post_init__(self) -> None:
        """Check the matrix.

        Raises:
            InputError: If the parts of the matrix don't line up.
        """
        self.values = np.asarray(self.values, dtype=np.float64).reshape(
            len(self.topics), len(self.columns)
        )
        if len(self.topics) != len(self.buckets):
            raise InputError("Every row of a feature matrix needs a topic and a bucket")

    @property
    def keys(self) -> list[tuple[str, int]]:
        """The (topic, bucket) of each row."""
        return list(zip(self.topics, self.buckets))

    @property
    def schema_hash(self) -> str:
        """The hash of the matrix's columns."""
        return schema_hash(self.columns)

    def column(self, name: str) -> NDArray[np.float64]:
        """Get the values of a column by name."""
        return self.values[:, self.columns.index(name)]

    def without(self, indices: Iterable[int]) -> Self:
        """Get a copy of the matrix with some columns removed.

        Args:
            indices: The positions of the columns to remove.

        Returns:
            The reduced matrix.
        """
        drop = set(indices)
        keep = [index for index in range(len(self.columns)) if index not in drop]
        return type(self)(
            self.topics,
            self.buckets,
            self.values[:, keep],
            tuple(self.columns[index] for index in keep),
            dict(self.diagnostics),
        )

    def save(self, path: Path, configuration: Configuration | None = None) -> Path:
        """Save the matrix as CSV, with a JSON sidecar beside it.

        Args:
            path: The CSV file to write.
            configuration: The configuration the matrix was built with.

        Returns:
            The path of the sidecar.
        """
        with path.open("w", encoding="utf-8", newline="") as target:
            writer = csv.writer(target)
            writer.writerow(("topic", "bucket", *self.columns))
            for topic, bucket, row in zip(self.topics, self.buckets, self.values):
                writer.writerow((topic, bucket, *(repr(float(value)) for value in row)))
        sidecar = self.sidecar(path)
        sidecar.write_text(
            dumps(
                {
                    "schema_hash": self.schema_hash,
                    "rows": len(self.topics),
                    "seed": None if configuration is None else configuration.seed,
                    "configuration": None
                    if configuration is None
                    else configuration.as_json,
                    "diagnostics": self.diagnostics,
                },
                indent=4,
            ),
            encoding="utf-8",
        )
        return sidecar

    @staticmethod
    def sidecar(path: Path) -> Path:
        """The path of the sidecar of a matrix file."""
        return path.with_suffix(".json")

    @classmethod
    def load(cls, path: Path) -> Self:
        """Load a matrix saved with `save`.

        Args:
            path: The CSV file to load.

        Returns:
            The matrix.

        Raises:
            InputError: If the file can't be read or isn't a feature matrix.
            SchemaMismatch: If the sidecar's schema hash doesn't match the
                columns of the file.
        """
        try:
            with path.open(encoding="utf-8", newline="") as source:
                reader = csv.reader(source)
                header = next(reader, None)
                rows = list(reader)
        except OSError as error:
            raise InputError(f"Unable to read {path}: {error}") from error
        if header is None or header[:2] != ["topic", "bucket"]:
            raise InputError(f"{path} isn't a feature matrix")
        columns = tuple(header[2:])
        try:
            topics = tuple(row[0] for row in rows)
            buckets = tuple(int(row[1]) for row in rows)
            values = np.array(
                [[float(value) for value in row[2:]] for row in rows], dtype=np.float64
            )
        except (IndexError, ValueError) as error:
            raise InputError(f"{path} holds a malformed row: {error}") from error
        if rows and values.shape[1] != len(columns):
            raise InputError(f"{path} has rows that don't match its header")
        diagnostics: dict[str, str] = {}
        if (sidecar := cls.sidecar(path)).exists():
            meta: dict[str, Any] = loads(sidecar.read_text(encoding="utf-8"))
            if meta.get("schema_hash") != schema_hash(columns):
                raise SchemaMismatch(f"{sidecar} doesn't describe the columns of {path}")
            diagnostics = meta.get("diagnostics") or {}
        return cls(topics, buckets, values, columns, diagnostics)

    def __len__(self) -> int:
        """The number of rows."""
        return len(self.topics)


##############################################################################
class FeatureExtractor:
    """Extracts feature rows from a dataset.

    Everything shared between rows (the topic model, PageRank, corpus word
    counts and message tokens) is built once by `prepare`.
    """

    def __init__(
        self,
        dataset: Dataset,
        configuration: Configuration,
        lexicon: SentimentLexicon,
        wordlist: Wordlist,
        emoticons: Pattern[str],
        tokens: dict[str, list[str]],
        corpus_stats: CorpusStats,
        topic_model: TopicModel | None,
        pagerank_scores: dict[str, float],
    ) -> None:
        """Initialise the extractor.

        Args:
            dataset: The dataset rows are extracted from.
            configuration: The configuration to extract with.
            lexicon: The sentiment lexicon.
            wordlist: The wordlist hashtags are segmented with.
            emoticons: The pattern that finds emoticons.
            tokens: The tokens of every message, keyed by message id.
            corpus_stats: The word counts of the whole corpus.
            topic_model: The topic model, or `None` if content features
                are disabled or there's no text.
            pagerank_scores: The PageRank of every user.
        """
        self._dataset = dataset
        self._configuration = configuration
        self._lexicon = lexicon
        self._wordlist = wordlist
        self._emoticons = emoticons
        self._tokens = tokens
        self._corpus_stats = corpus_stats
        self._topic_model = topic_model
        self._pagerank = pagerank_scores
        self._enabled = {
            category
            for category in Category
            if category.value not in configuration.disabled_categories
        }

    @classmethod
    def prepare(cls, dataset: Dataset, configuration: Configuration) -> Self:
        """Prepare an extractor for a dataset.

        Args:
            dataset: The dataset to extract from.
            configuration: The configuration to extract with.

        Returns:
            The extractor.

        Raises:
            InputError: If the lexicon or wordlist can't be loaded.
        """
        started = perf_counter()
        tokens = {message.id: tokenize(message.text) for message in dataset}
        documents = [document for document in tokens.values() if document]
        content = Category.CONTENT.value not in configuration.disabled_categories
        topic_model = (
            lda_fit(
                documents,
                topics=configuration.lda_topics,
                seed=configuration.seed,
                iterations=configuration.lda_iterations,
                alpha=configuration.lda_alpha,
                beta=configuration.lda_beta,
                max_documents=configuration.lda_max_documents,
                fold_in_iterations=configuration.lda_fold_in_iterations,
            )
            if content and documents
            else None
        )
        extractor = cls(
            dataset,
            configuration,
            SentimentLexicon.load(
                Path(configuration.lexicon) if configuration.lexicon else resource("lexicon.tsv")
            ),
            Wordlist.load(
                Path(configuration.wordlist) if configuration.wordlist else resource("words.txt")
            ),
            emoticon_pattern(configuration.emoticons or EMOTICONS),
            tokens,
            CorpusStats(tokens.values()),
            topic_model,
            pagerank(
                dataset.interaction_graph,
                configuration.pagerank_damping,
                configuration.pagerank_tolerance,
            ),
        )
        log.info("Prepared feature extraction in %.2fs", perf_counter() - started)
        return extractor

    def _topic_vector(self, message_ids: Sequence[str]) -> list[float]:
        """The topic distribution of a snapshot's text."""
        if self._topic_model is None:
            return [1.0 / self._configuration.lda_topics] * self._configuration.lda_topics
        return topic_vector(
            self._topic_model,
            [token for message_id in message_ids for token in self._tokens[message_id]],
            self._configuration.lda_fold_in_max_tokens,
        ).tolist()

    def row(self, topic: str, bucket: int) -> NDArray[np.float64]:
        """Extract the feature row of a topic in a bucket.

        Args:
            topic: The hashtag.
            bucket: The bucket.

        Returns:
            The 68 feature values in schema order; disabled categories are
            left as zero.
        """
        snapshot = self._dataset.topic_snapshot(topic, bucket)
        features: dict[str, Sequence[float]] = {}
        if Category.CONTENT in self._enabled:
            c1, c2, positive, negative = content_features(
                snapshot.records, self._lexicon, self._emoticons
            )
            features |= {"c1": [c1], "c2": [c2], "c3": [positive, negative]}
            features["c4"] = self._topic_vector(snapshot.messages)
        if Category.USER in self._enabled:
            features |= dict(
                zip(
                    ("u1", "u2", "u3"),
                    ([value] for value in user_features(
                        snapshot, self._dataset.follower_graph, self._pagerank
                    )),
                )
            )
        if Category.HASHTAG in self._enabled:
            features |= dict(
                zip(
                    ("h1", "h2", "h3", "h4", "h5", "h6"),
                    ([value] for value in hashtag_features(
                        topic,
                        snapshot.records,
                        self._dataset.extended_messages(snapshot),
                        self._corpus_stats,
                        self._wordlist,
                        self._tokens,
                    )),
                )
            )
        if Category.NETWORK in self._enabled:
            network = network_features(snapshot, self._dataset.follower_graph)
            features |= {
                "n1": [network.mean_degree],
                "n2": [network.density],
                "n3": [network.nodes],
                "n4": [network.degree_entropy],
                "n5": [network.border_users],
                "n6": network.exposure,
                "n7": [network.component_ratio],
                "n8": [network.mean_weight],
                "n9": [network.triangle_ratio],
            }
        if Category.MEME in self._enabled:
            features |= dict(
                zip(
                    (f"m{index}" for index in range(1, 9)),
                    ([value] for value in meme_features(
                        snapshot, self._dataset.bucket_active_users(bucket)
                    )),
                )
            )
        if Category.TIMESERIES in self._enabled:
            window = self._configuration.series_window
            features |= dict(
                zip(
                    ("t1", "t2", "t3", "t4"),
                    ([value] for value in timeseries_features(
                        self._dataset.topic_series(topic, bucket - window + 1, bucket).counts
                    )),
                )
            )
        values = np.zeros(len(SCHEMA))
        for code, block in features.items():
            values[SCHEMA.block(code)] = block
        return values

    def rows(
        self, keys: Sequence[tuple[str, int]]
    ) -> list[tuple[NDArray[np.float64], str | None]]:
        """Extract several rows, turning failures into diagnostics.

        Args:
            keys: The (topic, bucket) pairs to extract.

        Returns:
            Each row with its diagnostic; a failed row is all zeros.
        """
        extracted: list[tuple[NDArray[np.float64], str | None]] = []
        for topic, bucket in keys:
            try:
                values = self.row(topic, bucket)
            except (TopicBenchError, ValueError, ArithmeticError) as error:
                extracted.append((np.zeros(len(SCHEMA)), f"{type(error).__name__}: {error}"))
                continue
            if not np.isfinite(values).all():
                bad = [
                    SCHEMA.columns[index] for index in np.flatnonzero(~np.isfinite(values))
                ]
                extracted.append((np.zeros(len(SCHEMA)), f"non-finite {', '.join(bad)}"))
                continue
            extracted.append((values, None))
        return extracted


##############################################################################
def _extract(
    extractor: FeatureExtractor, keys: Sequence[tuple[str, int]], workers: int
) -> FeatureMatrix:
    """Extract the rows for a list of keys, in parallel where allowed."""
    jobs = min(effective_n_jobs(workers or -1), max(len(keys), 1))
    chunks = [list(chunk) for chunk in np.array_split(np.arange(len(keys)), jobs)]
    results = (
        Parallel(n_jobs=jobs)(
            delayed(extractor.rows)([keys[index] for index in chunk]) for chunk in chunks
        )
        if jobs > 1
        else [extractor.rows(keys)]
    )
    rows = [row for chunk in results for row in chunk]
    diagnostics: dict[str, str] = {}
    for (topic, bucket), (_, problem) in zip(keys, rows):
        if problem is not None:
            diagnostics[f"{topic}@{bucket}"] = problem
            log.warning("Features of %s@%d zeroed: %s", topic, bucket, problem)
    return FeatureMatrix(
        tuple(topic for topic, _ in keys),
        tuple(bucket for _, bucket in keys),
        np.array([values for values, _ in rows]).reshape(len(keys), len(SCHEMA)),
        diagnostics=diagnostics,
    )


##############################################################################
def feature_matrix(
    dataset: Dataset,
    topics: Sequence[str],
    bucket: int,
    configuration: Configuration,
    extractor: FeatureExtractor | None = None,
) -> FeatureMatrix:
    """Build the feature matrix of some topics in a bucket.

    Args:
        dataset: The dataset.
        topics: The topics; one row each, in this order.
        bucket: The bucket.
        configuration: The configuration.
        extractor: A prepared extractor to reuse.

    Returns:
        The feature matrix.
    """
    return feature_matrix_range(dataset, topics, [bucket], configuration, extractor)


##############################################################################
def feature_matrix_range(
    dataset: Dataset,
    topics: Sequence[str],
    buckets: Iterable[int],
    configuration: Configuration,
    extractor: FeatureExtractor | None = None,
) -> FeatureMatrix:
    """Build the feature matrix of some topics over several buckets.

    Args:
        dataset: The dataset.
        topics: The topics.
        buckets: The buckets.
        configuration: The configuration.
        extractor: A prepared extractor to reuse.

    Returns:
        The feature matrix, with the rows of each bucket in topic order and
        the buckets in the order given.
    """
    extractor = extractor or FeatureExtractor.prepare(dataset, configuration)
    keys = [(topic, bucket) for bucket in buckets for topic in topics]
    started = perf_counter()
    matrix = _extract(extractor, keys, configuration.workers)
    log.info("Extracted %d feature rows in %.2fs", len(matrix), perf_counter() - started)
    return matrix


### matrix.py ends here
