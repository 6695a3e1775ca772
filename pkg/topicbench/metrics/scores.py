"""The index scores used to evaluate a popularity predictor."""

##############################################################################
# Python imports.
from typing import NamedTuple

##############################################################################
# NumPy imports.
import numpy as np
from numpy.typing import ArrayLike, NDArray

##############################################################################
# Local imports.
from ..errors import InputError


##############################################################################
class Confusion(NamedTuple):
    """The confusion counts of a binary prediction, seen from the positive class."""

    tp: int
    fp: int
    fn: int
    tn: int

    @property
    def n(self) -> int:
        """The number of predictions."""
        return self.tp + self.fp + self.fn + self.tn

    def swapped(self) -> "Confusion":
        """The same counts seen from the negative class."""
        return Confusion(self.tn, self.fn, self.fp, self.tp)


##############################################################################
def _binary(truth: ArrayLike, predicted: ArrayLike) -> tuple[NDArray[np.int64], NDArray[np.int64]]:
    """Check and convert a pair of label vectors.

    Raises:
        InputError: If the vectors are empty, of different lengths, or not binary.
    """
    actual = np.asarray(truth)
    guessed = np.asarray(predicted)
    if actual.shape != guessed.shape or actual.ndim != 1:
        raise InputError("Truth and predictions must be vectors of the same length")
    if not len(actual):
        raise InputError("Can't score an empty set of predictions")
    if not (np.isin(actual, (0, 1)).all() and np.isin(guessed, (0, 1)).all()):
        raise InputError("Labels must be 0 or 1")
    return actual.astype(np.int64), guessed.astype(np.int64)


##############################################################################
def confusion(truth: ArrayLike, predicted: ArrayLike) -> Confusion:
    """Count the confusion of a binary prediction.

    Args:
        truth: The true labels.
        predicted: The predicted labels.

    Returns:
        The confusion counts, with 1 as the positive class.
    """
    actual, guessed = _binary(truth, predicted)
    return Confusion(
        int(np.sum((actual == 1) & (guessed == 1))),
        int(np.sum((actual == 0) & (guessed == 1))),
        int(np.sum((actual == 1) & (guessed == 0))),
        int(np.sum((actual == 0) & (guessed == 0))),
    )


##############################################################################
def _ratio(numerator: float, denominator: float) -> float:
    return numerator / denominator if denominator else 0.0


##############################################################################
def precision_recall_f1(counts: Confusion, positive: int = 1) -> tuple[float, float, float]:
    """Calculate precision, recall and F1 for one class.

    Args:
        counts: The confusion counts.
        positive: The class to score; 1 or 0.

    Returns:
        The precision, recall and F1, with 0/0 taken as 0.
    """
    tp, fp, fn, _ = counts if positive == 1 else counts.swapped()
    precision = _ratio(tp, tp + fp)
    recall = _ratio(tp, tp + fn)
    return precision, recall, _ratio(2 * precision * recall, precision + recall)


##############################################################################
def _per_class(truth: ArrayLike, predicted: ArrayLike) -> NDArray[np.float64]:
    counts = confusion(truth, predicted)
    return np.array([precision_recall_f1(counts, label) for label in (0, 1)])


##############################################################################
def macro_precision(truth: ArrayLike, predicted: ArrayLike) -> float:
    """The unweighted mean precision of both classes."""
    return float(_per_class(truth, predicted)[:, 0].mean())


##############################################################################
def macro_recall(truth: ArrayLike, predicted: ArrayLike) -> float:
    """The unweighted mean recall of both classes."""
    return float(_per_class(truth, predicted)[:, 1].mean())


##############################################################################
def macro_f1(truth: ArrayLike, predicted: ArrayLike) -> float:
    """The unweighted mean F1 of both classes.

    Dominated by how well the rarer class is predicted.
    """
    return float(_per_class(truth, predicted)[:, 2].mean())


##############################################################################
def micro_f1(truth: ArrayLike, predicted: ArrayLike) -> float:
    """The F1 of the pooled counts of both classes.

    For single-label binary data this is the accuracy; it is dominated by
    how well the common class is predicted.
    """
    counts = confusion(truth, predicted)
    pooled = Confusion(
        counts.tp + counts.tn, counts.fp + counts.fn, counts.fn + counts.fp, 0
    )
    return precision_recall_f1(pooled)[2]


##############################################################################
def accuracy(truth: ArrayLike, predicted: ArrayLike) -> float:
    """The fraction of predictions that are right."""
    counts = confusion(truth, predicted)
    return (counts.tp + counts.tn) / counts.n


##############################################################################
def rmse(truth: ArrayLike, scores: ArrayLike) -> float:
    """The root mean squared error of some scores against the true labels.

    Args:
        truth: The true 0/1 labels.
        scores: Predicted labels or probabilities.

    Returns:
        The root mean squared error.

    Raises:
        InputError: If the vectors are empty or of different lengths.
    """
    actual = np.asarray(truth, dtype=np.float64)
    guessed = np.asarray(scores, dtype=np.float64)
    if actual.shape != guessed.shape or actual.ndim != 1:
        raise InputError("Truth and scores must be vectors of the same length")
    if not len(actual):
        raise InputError("Can't score an empty set of predictions")
    return float(np.sqrt(np.mean((guessed - actual) ** 2)))


### scores.py ends here
