"""Measuring how much each feature contributes to prediction."""

##############################################################################
# Python imports.
import csv
import logging
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Literal, Sequence

##############################################################################
# NumPy/joblib imports.
import numpy as np
from joblib import Parallel, delayed

##############################################################################
# Local imports.
from ..data import Configuration
from ..errors import InputError
from ..features import SCHEMA, Category, FeatureMatrix
from ..metrics import macro_f1, micro_f1
from ..predict import cross_validate

##############################################################################
log = logging.getLogger(__name__)


##############################################################################
@dataclass(frozen=True)
class AblationResult:
    """The effect of removing one unit of the feature space."""

    unit: str
    """The column, or the feature code, that was removed."""

    description: str
    """A human-readable description of the unit."""

    columns: tuple[int, ...]
    """The positions of the removed columns."""

    accuracy: float
    """The mean of Macro-F1 and Micro-F1 without the unit."""

    baseline: float
    """The mean of Macro-F1 and Micro-F1 with every column."""

    rank: int = 0
    """The position of the unit when ranked by contribution; 1 is best."""

    @property
    def contribution(self) -> float:
        """The relative contribution of the unit."""
        return -1000.0 * (self.accuracy - self.baseline)


##############################################################################
def _mean_f1(matrix: FeatureMatrix, labels: Sequence[int], configuration: Configuration) -> float:
    """The mean of the cross-validated Macro-F1 and Micro-F1."""
    validation = cross_validate(matrix, labels, configuration)
    return (macro_f1(labels, validation.predicted) + micro_f1(labels, validation.predicted)) / 2


##############################################################################
def baseline_accuracy(
    matrix: FeatureMatrix, labels: Sequence[int], configuration: Configuration
) -> float:
    """The mean of Macro-F1 and Micro-F1 with the full feature space."""
    return _mean_f1(matrix, labels, configuration)


##############################################################################
def relative_contribution(
    matrix: FeatureMatrix,
    labels: Sequence[int],
    columns: Iterable[int],
    configuration: Configuration,
    baseline: float | None = None,
    unit: str | None = None,
) -> AblationResult:
    """Measure the contribution of some columns by removing them.

    Args:
        matrix: The feature matrix.
        labels: The label of each row.
        columns: The positions of the columns to remove.
        configuration: The configuration; its folds and seed are shared
            with the baseline.
        baseline: The full-space accuracy, if already known.
        unit: The name of what is being removed.

    Returns:
        The result of the removal.

    Raises:
        InputError: If no column would be left, or a column doesn't exist.
    """
    removed = tuple(sorted(set(columns)))
    if not removed or not all(0 <= index < len(matrix.columns) for index in removed):
        raise InputError("Ablation needs existing columns to remove")
    if len(removed) == len(matrix.columns):
        raise InputError("Ablation can't remove every column")
    if baseline is None:
        baseline = baseline_accuracy(matrix, labels, configuration)
    name = unit or matrix.columns[removed[0]]
    return AblationResult(
        name,
        _describe(matrix, name, removed),
        removed,
        _mean_f1(matrix.without(removed), labels, configuration),
        baseline,
    )


##############################################################################
def _describe(matrix: FeatureMatrix, unit: str, columns: tuple[int, ...]) -> str:
    """Describe a removed unit for a human."""
    if len(columns) == 1 and matrix.columns[columns[0]] in SCHEMA.columns:
        return SCHEMA.describe(matrix.columns[columns[0]])
    if matrix.columns == SCHEMA.columns:
        feature = SCHEMA.owner(matrix.columns[columns[0]])
        return f"F_{feature.code}: {feature.description}"
    return unit


##############################################################################
def _units(
    matrix: FeatureMatrix, mode: Literal["dimension", "feature"]
) -> list[tuple[str, tuple[int, ...]]]:
    """The removable units of a matrix."""
    if mode == "feature" and matrix.columns == SCHEMA.columns:
        return [(feature.code, tuple(SCHEMA.block(feature.code))) for feature in SCHEMA.features]
    return [(column, (index,)) for index, column in enumerate(matrix.columns)]


##############################################################################
def ablation_report(
    matrix: FeatureMatrix, labels: Sequence[int], configuration: Configuration
) -> list[AblationResult]:
    """Measure the contribution of every unit of the feature space.

    Args:
        matrix: The feature matrix.
        labels: The label of each row.
        configuration: The configuration; `ablation_mode` picks whether
            single dimensions or whole named features are removed.

    Returns:
        One result per unit, ranked by contribution, highest first; ties
        keep schema order.
    """
    baseline = baseline_accuracy(matrix, labels, configuration)
    units = _units(matrix, configuration.ablation_mode)  # type: ignore[arg-type]
    log.info("Ablating %d units from a baseline of %.4f", len(units), baseline)
    results: list[AblationResult] = list(
        Parallel(n_jobs=configuration.workers or -1, prefer="threads")(
            delayed(relative_contribution)(
                matrix, labels, columns, configuration, baseline, unit
            )
            for unit, columns in units
        )
    )
    order = sorted(
        range(len(results)), key=lambda index: (-results[index].contribution, index)
    )
    return [
        AblationResult(
            result.unit,
            result.description,
            result.columns,
            result.accuracy,
            result.baseline,
            rank,
        )
        for rank, result in enumerate((results[index] for index in order), start=1)
    ]


##############################################################################
def category_summary(
    results: Iterable[AblationResult], columns: Sequence[str]
) -> list[tuple[Category, float]]:
    """Average the contribution of each feature category.

    Args:
        results: The results of an ablation.
        columns: The column names of the matrix the ablation ran over.

    Returns:
        Each category seen with its mean contribution, highest first.
        Units whose columns aren't in the schema are left out.
    """
    contributions: dict[Category, list[float]] = {}
    for result in results:
        name = columns[result.columns[0]]
        if name in SCHEMA.columns:
            contributions.setdefault(SCHEMA.owner(name).category, []).append(
                result.contribution
            )
    return sorted(
        ((category, float(np.mean(values))) for category, values in contributions.items()),
        key=lambda pair: -pair[1],
    )


##############################################################################
def save_report(results: Iterable[AblationResult], path: Path) -> None:
    """Save an ablation report as CSV.

    Args:
        results: The ranked results.
        path: The file to write.
    """
    with path.open("w", encoding="utf-8", newline="") as target:
        writer = csv.writer(target)
        writer.writerow(("rank", "unit", "description", "accuracy", "contribution"))
        for result in results:
            writer.writerow(
                (
                    result.rank,
                    result.unit,
                    result.description,
                    repr(result.accuracy),
                    repr(result.contribution),
                )
            )


### relative.py ends here
