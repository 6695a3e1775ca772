"""Stratified cross-validation."""

##############################################################################
# Python imports.
import logging
from typing import Callable, NamedTuple, Sequence

##############################################################################
# NumPy/joblib imports.
import numpy as np
from joblib import Parallel, delayed
from numpy.typing import ArrayLike, NDArray

##############################################################################
# Local imports.
from ..data import Configuration
from ..errors import DegenerateLabels, InputError
from ..features import FeatureMatrix
from .linear import Classifier, LogisticRegression

##############################################################################
log = logging.getLogger(__name__)


##############################################################################
def _grouped_folds(
    targets: NDArray[np.int64], groups: Sequence[str], folds: int, random: np.random.Generator
) -> NDArray[np.int64]:
    """Give every group of rows a fold, keeping the classes balanced."""
    members: dict[str, list[int]] = {}
    for row, group in enumerate(groups):
        members.setdefault(group, []).append(row)
    if len(members) < folds:
        raise InputError(f"Can't split {len(members)} topics into {folds} folds")
    names = sorted(members)
    order = [names[index] for index in random.permutation(len(names))]
    order.sort(key=lambda group: -len(members[group]))
    totals = np.array([np.sum(targets == 0), np.sum(targets == 1)], dtype=np.float64)
    counts = np.zeros((folds, 2))
    fold_of = np.empty(len(targets), dtype=np.int64)
    for group in order:
        rows = members[group]
        added = np.array([np.sum(targets[rows] == 0), np.sum(targets[rows] == 1)])
        spread = [
            float(np.std((counts + np.eye(folds)[fold][:, None] * added) / totals, axis=0).sum())
            for fold in range(folds)
        ]
        best = min(range(folds), key=lambda fold: (spread[fold], counts[fold].sum(), fold))
        counts[best] += added
        fold_of[rows] = best
    return fold_of


##############################################################################
def stratified_folds(
    labels: ArrayLike,
    folds: int = 10,
    seed: int = 0,
    groups: Sequence[str] | None = None,
) -> list[NDArray[np.int64]]:
    """Split labeled rows into stratified folds.

    Args:
        labels: The 0/1 label of each row.
        folds: The number of folds.
        seed: The seed for the shuffle.
        groups: The group of each row; rows of one group always share a
            fold. Usually the topic of each row.

    Returns:
        The row indices of each fold, sorted. Without repeated groups, fold
        sizes within a class differ by at most one.

    Raises:
        InputError: If there are fewer rows, or groups, than folds.
        DegenerateLabels: If the labels don't hold both classes.
    """
    targets = np.asarray(labels, dtype=np.int64)
    if folds < 2:
        raise InputError(f"Cross-validation needs at least two folds, not {folds}")
    if len(targets) < folds:
        raise InputError(f"Can't split {len(targets)} rows into {folds} folds")
    if set(np.unique(targets).tolist()) != {0, 1}:
        raise DegenerateLabels("degenerate labels: cross-validation needs both classes")
    if groups is not None and len(groups) != len(targets):
        raise InputError("Cross-validation needs one group for each row")
    random = np.random.default_rng(seed)
    if groups is not None and len(set(groups)) < len(groups):
        fold_of = _grouped_folds(targets, groups, folds, random)
    else:
        fold_of = np.empty(len(targets), dtype=np.int64)
        offset = 0
        for label in (0, 1):
            members = random.permutation(np.flatnonzero(targets == label))
            fold_of[members] = (offset + np.arange(len(members))) % folds
            offset += len(members)
    return [np.flatnonzero(fold_of == fold) for fold in range(folds)]


##############################################################################
class FoldResult(NamedTuple):
    """The out-of-fold predictions of one fold."""

    fold: int
    """The index of the fold."""

    indices: NDArray[np.int64]
    """The rows held out in the fold."""

    scores: NDArray[np.float64]
    """The scores given to the held-out rows."""


##############################################################################
class CrossValidation(NamedTuple):
    """The result of cross-validating a classifier."""

    folds: list[FoldResult]
    """The result of each fold, in fold order."""

    scores: NDArray[np.float64]
    """The pooled out-of-fold score of every row."""

    predicted: NDArray[np.int64]
    """The pooled out-of-fold label of every row."""

    fold_of: NDArray[np.int64]
    """The fold each row was held out in."""


##############################################################################
ClassifierFactory = Callable[[], Classifier]
"""Makes a fresh, untrained classifier."""


##############################################################################
def _run_fold(
    fold: int,
    held_out: NDArray[np.int64],
    values: NDArray[np.float64],
    labels: NDArray[np.int64],
    factory: ClassifierFactory,
) -> FoldResult:
    """Train on every row but the held-out ones, then score those."""
    training = np.setdiff1d(np.arange(len(labels)), held_out)
    try:
        classifier = factory().fit(values[training], labels[training])
    except DegenerateLabels as error:
        raise DegenerateLabels(f"Fold {fold} can't be trained: {error}") from error
    return FoldResult(fold, held_out, classifier.predict_scores(values[held_out]))


##############################################################################
def cross_validate(
    matrix: FeatureMatrix,
    labels: Sequence[int],
    configuration: Configuration,
    factory: ClassifierFactory | None = None,
    threshold: float = 0.5,
) -> CrossValidation:
    """Cross-validate a classifier with stratified folds.

    Args:
        matrix: The feature matrix.
        labels: The label of each row.
        configuration: The configuration holding the fold count, seed and
            training settings.
        factory: Makes the classifier to validate; logistic regression by
            default.
        threshold: The score at or above which a row is labeled popular.

    Returns:
        The per-fold and pooled predictions.
    """
    targets = np.asarray(labels, dtype=np.int64)
    if len(targets) != len(matrix):
        raise InputError("Cross-validation needs one label for each row")
    folds = stratified_folds(
        targets, configuration.folds, configuration.seed, matrix.topics
    )
    factory = factory or (
        lambda: LogisticRegression.from_configuration(configuration, matrix.columns)
    )
    results: list[FoldResult] = list(
        Parallel(n_jobs=configuration.workers or -1, prefer="threads")(
            delayed(_run_fold)(fold, held_out, matrix.values, targets, factory)
            for fold, held_out in enumerate(folds)
        )
    )
    results.sort(key=lambda result: result.fold)
    scores = np.zeros(len(targets))
    fold_of = np.zeros(len(targets), dtype=np.int64)
    for result in results:
        scores[result.indices] = result.scores
        fold_of[result.indices] = result.fold
    log.info("Cross-validated %d rows over %d folds", len(targets), len(folds))
    return CrossValidation(
        results, scores, (scores >= threshold).astype(np.int64), fold_of
    )


### folds.py ends here
