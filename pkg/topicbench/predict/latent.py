"""The latent-feature baseline of the relation-based methods."""

##############################################################################
# Python imports.
from typing import Final, Mapping, NamedTuple, Sequence

##############################################################################
# NumPy imports.
import numpy as np

##############################################################################
# Local imports.
from ..core import TimeSeries
from ..data import Configuration
from ..errors import InputError
from ..features import FeatureMatrix
from .linear import LinearModel, train_classifier

##############################################################################
LATENT_COLUMNS: Final[tuple[str, ...]] = ("L_sum", "L_rate", "L_std")
"""The columns of a latent feature matrix."""


##############################################################################
class LatentFeatures(NamedTuple):
    """The latent features of an early popularity series."""

    sum: float
    """The total popularity over the series."""

    avg_rate_of_change: float
    """The mean change in popularity from one bucket to the next."""

    std: float
    """The population standard deviation of the popularity."""


##############################################################################
def latent_features(counts: Sequence[float]) -> LatentFeatures:
    """Calculate the latent features of a popularity series.

    Args:
        counts: The popularity in each bucket, oldest first.

    Returns:
        The latent features; a single count has no change or spread.

    Raises:
        InputError: If the series is empty.
    """
    if not counts:
        raise InputError("Latent features need at least one count")
    values = np.asarray(counts, dtype=np.float64)
    return LatentFeatures(
        float(values.sum()),
        float((values[-1] - values[0]) / (len(values) - 1)) if len(values) > 1 else 0.0,
        float(values.std()),
    )


##############################################################################
def latent_matrix(
    series_map: Mapping[str, TimeSeries],
    topics: Sequence[str],
    end_bucket: int,
    length: int,
) -> FeatureMatrix:
    """Build the latent feature matrix of some topics.

    Args:
        series_map: The popularity series of each topic.
        topics: The topics; one row each, in this order.
        end_bucket: The last bucket of the early window.
        length: The length of the early window.

    Returns:
        A feature matrix with the three latent columns.
    """
    return FeatureMatrix(
        tuple(topics),
        (end_bucket,) * len(topics),
        np.array(
            [
                latent_features(
                    series_map[topic].window(end_bucket, length)
                    if topic in series_map
                    else (0,) * length
                )
                for topic in topics
            ],
            dtype=np.float64,
        ).reshape(len(topics), len(LATENT_COLUMNS)),
        LATENT_COLUMNS,
    )


##############################################################################
def latent_baseline(
    matrix: FeatureMatrix, labels: Sequence[int], configuration: Configuration
) -> LinearModel:
    """Train the latent-feature baseline.

    Args:
        matrix: A latent feature matrix.
        labels: The label of each row.
        configuration: The configuration holding the training settings.

    Returns:
        The trained model; the same learner as the feature classifier, over
        the three latent features.

    Raises:
        InputError: If the matrix doesn't hold the latent columns.
    """
    if matrix.columns != LATENT_COLUMNS:
        raise InputError("The latent baseline trains on latent features only")
    return train_classifier(matrix, labels, configuration)


### latent.py ends here
