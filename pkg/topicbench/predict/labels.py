"""Deciding which topics count as popular."""

##############################################################################
# Python imports.
import csv
import logging
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Literal, Mapping, NamedTuple, Sequence

##############################################################################
# NumPy imports.
import numpy as np

##############################################################################
# Backward-compatible typing.
from typing_extensions import Self

##############################################################################
# Local imports.
from ..core import TimeSeries
from ..data import Configuration
from ..errors import InputError

##############################################################################
log = logging.getLogger(__name__)


##############################################################################
@dataclass(frozen=True)
class LabelingPolicy:
    """How the popularity of a topic in the next bucket becomes a label."""

    mode: Literal["threshold", "quantile"] = "quantile"
    """Label against a fixed count, or against a quantile of all counts."""

    threshold: int = 50
    """The count at or above which a topic is popular in threshold mode."""

    quantile: float = 0.9
    """The quantile at or above which a topic is popular in quantile mode."""

    def __post_init__(self) -> None:
        """Check the policy.

        Raises:
            InputError: If the policy can't be used.
        """
        if self.mode == "threshold" and self.threshold < 1:
            raise InputError(f"A popularity threshold must be at least 1, not {self.threshold}")
        if self.mode == "quantile" and not 0 < self.quantile < 1:
            raise InputError(f"A popularity quantile must be within (0, 1), not {self.quantile}")
        if self.mode not in ("threshold", "quantile"):
            raise InputError(f"Unknown labeling mode {self.mode!r}")

    @classmethod
    def from_configuration(cls, configuration: Configuration) -> Self:
        """Create the policy described by a configuration."""
        return cls(
            configuration.labeling_mode,  # type: ignore[arg-type]
            configuration.labeling_threshold,
            configuration.labeling_quantile,
        )

    def cutoff(self, counts: Mapping[str, int]) -> float:
        """The count at or above which a topic is popular.

        Args:
            counts: The next-bucket count of every candidate topic.

        Returns:
            The cutoff.
        """
        if self.mode == "threshold" or not counts:
            return float(self.threshold)
        return float(np.quantile(np.fromiter(counts.values(), dtype=float), self.quantile))


##############################################################################
class Labeling(NamedTuple):
    """The result of labeling a set of topics."""

    labels: dict[str, int]
    """The label of every topic that could be labeled."""

    cutoff: float
    """The count at or above which a topic was labeled popular."""

    excluded: dict[str, str]
    """The topics that couldn't be labeled, with the reason."""


##############################################################################
def label_topics(
    series_map: Mapping[str, TimeSeries], horizon: int, policy: LabelingPolicy
) -> Labeling:
    """Label topics by how popular they are in the horizon bucket.

    Args:
        series_map: The popularity series of each candidate topic.
        horizon: The bucket being predicted; usually the one after the
            features were taken.
        policy: The labeling policy.

    Returns:
        The labels; 1 for popular, 0 for not.
    """
    counts: dict[str, int] = {}
    excluded: dict[str, str] = {}
    for topic, series in series_map.items():
        if series.covers(horizon):
            counts[topic] = series.count_at(horizon)
        else:
            excluded[topic] = f"no count for bucket {horizon}"
            log.warning("Can't label %s: its series doesn't cover bucket %d", topic, horizon)
    cutoff = policy.cutoff(counts)
    return Labeling(
        {topic: int(count >= cutoff) for topic, count in counts.items()}, cutoff, excluded
    )


##############################################################################
RowKey = tuple[str, int]
"""A matrix row: the topic and the bucket its features were taken in."""


##############################################################################
class RowLabeling(NamedTuple):
    """The result of labeling the rows of a feature matrix."""

    labels: dict[RowKey, int]
    """The label of every row that could be labeled."""

    cutoffs: dict[int, float]
    """The popularity cutoff used for each horizon bucket."""

    excluded: dict[RowKey, str]
    """The rows that couldn't be labeled, with the reason."""


##############################################################################
def label_rows(
    series_map: Mapping[str, TimeSeries], keys: Iterable[RowKey], policy: LabelingPolicy
) -> RowLabeling:
    """Label each row by its topic's popularity in the bucket after it.

    Args:
        series_map: The popularity series of each topic; they need to cover
            the bucket after every row's bucket.
        keys: The (topic, bucket) of each row to label.
        policy: The labeling policy.

    Returns:
        The labels of the rows. In quantile mode the cutoff is taken over
        the rows that share a horizon.
    """
    by_bucket: dict[int, list[str]] = {}
    excluded: dict[RowKey, str] = {}
    for topic, bucket in dict.fromkeys(keys):
        if topic in series_map:
            by_bucket.setdefault(bucket, []).append(topic)
        else:
            excluded[(topic, bucket)] = "no popularity series"
    labels: dict[RowKey, int] = {}
    cutoffs: dict[int, float] = {}
    for bucket, topics in sorted(by_bucket.items()):
        labeling = label_topics(
            {topic: series_map[topic] for topic in topics}, bucket + 1, policy
        )
        cutoffs[bucket + 1] = labeling.cutoff
        labels.update(((topic, bucket), label) for topic, label in labeling.labels.items())
        excluded.update(((topic, bucket), reason) for topic, reason in labeling.excluded.items())
    return RowLabeling(labels, cutoffs, excluded)


##############################################################################
def save_labels(labels: Mapping[RowKey, int], path: Path) -> None:
    """Save labels as CSV, one row per (topic, bucket).

    Args:
        labels: The label of each row.
        path: The file to write.
    """
    with path.open("w", encoding="utf-8", newline="") as target:
        writer = csv.writer(target)
        writer.writerow(("topic", "bucket", "label"))
        writer.writerows(
            (topic, bucket, label) for (topic, bucket), label in sorted(labels.items())
        )


##############################################################################
def load_labels(path: Path) -> dict[RowKey, int]:
    """Load labels saved with `save_labels`.

    Args:
        path: The file to read.

    Returns:
        The label of each (topic, bucket).

    Raises:
        InputError: If the file can't be read or holds a bad label.
    """
    try:
        with path.open(encoding="utf-8", newline="") as source:
            labels = {
                (row["topic"], int(row["bucket"])): int(row["label"])
                for row in csv.DictReader(source)
            }
    except (OSError, KeyError, TypeError, ValueError) as error:
        raise InputError(f"Unable to read labels from {path}: {error}") from error
    if bad := sorted(
        f"{topic}@{bucket}" for (topic, bucket), label in labels.items() if label not in (0, 1)
    ):
        raise InputError(f"Labels must be 0 or 1; see {', '.join(bad[:5])}")
    return labels


##############################################################################
def labels_for(keys: Sequence[RowKey], labels: Mapping[RowKey, int]) -> list[int]:
    """Line labels up with the rows of a matrix.

    Args:
        keys: The (topic, bucket) of each row.
        labels: The label of each (topic, bucket).

    Returns:
        The label of each row.

    Raises:
        InputError: If a row has no label.
    """
    if missing := sorted(set(keys) - set(labels)):
        raise InputError(
            f"{len(missing)} rows have no label, including "
            + ", ".join(f"{topic}@{bucket}" for topic, bucket in missing[:5])
        )
    return [labels[key] for key in keys]


### labels.py ends here
