"""The linear classifier behind the feature-oriented methods."""

##############################################################################
# Python imports.
import csv
import logging
from dataclasses import dataclass, field
from json import JSONDecodeError, dumps, loads
from pathlib import Path
from typing import Any, NamedTuple, Protocol, Sequence

##############################################################################
# NumPy/SciPy imports.
import numpy as np
from numpy.typing import ArrayLike, NDArray
from scipy.special import expit

##############################################################################
# Backward-compatible typing.
from typing_extensions import Self

##############################################################################
# Local imports.
from ..data import Configuration
from ..errors import DegenerateLabels, InputError, InvariantViolation, SchemaMismatch
from ..features import FeatureMatrix, schema_hash

##############################################################################
log = logging.getLogger(__name__)


##############################################################################
@dataclass(frozen=True, eq=False)
class Standardizer:
    """Z-score standardization of the columns of a matrix."""

    mean: NDArray[np.float64]
    """The mean of each column."""

    std: NDArray[np.float64]
    """The standard deviation of each column; 1 for a constant column."""

    @classmethod
    def fit(cls, values: NDArray[np.float64]) -> Self:
        """Learn the standardization of a matrix.

        Args:
            values: The matrix, one row per example.

        Returns:
            The standardizer.
        """
        std = values.std(axis=0)
        return cls(values.mean(axis=0), np.where(std > 0, std, 1.0))

    def transform(self, values: NDArray[np.float64]) -> NDArray[np.float64]:
        """Standardize a matrix."""
        return (values - self.mean) / self.std


##############################################################################
@dataclass(eq=False)
class LinearModel:
    """A trained logistic model, ready to score rows of a feature matrix."""

    columns: tuple[str, ...]
    """The columns the model was trained on, in order."""

    standardizer: Standardizer
    """The standardization applied to rows before scoring."""

    weights: NDArray[np.float64]
    """The weight of each standardized column."""

    bias: float = 0.0
    """The bias."""

    training: dict[str, float] = field(default_factory=dict)
    """The settings the model was trained with."""

    def __post_init__(self) -> None:
        """Check the model.

        Raises:
            InvariantViolation: If the model is unusable.
        """
        if not (
            len(self.columns)
            == len(self.weights)
            == len(self.standardizer.mean)
            == len(self.standardizer.std)
        ):
            raise InvariantViolation("The parts of a linear model don't line up")
        if not (np.isfinite(self.weights).all() and np.isfinite(self.bias)):
            raise InvariantViolation("A linear model's weights must be finite")
        if (self.standardizer.std <= 0).any():
            raise InvariantViolation("A linear model's deviations must be positive")

    @property
    def schema_hash(self) -> str:
        """The hash of the columns the model expects."""
        return schema_hash(self.columns)

    def decision(self, values: NDArray[np.float64]) -> NDArray[np.float64]:
        """The linear decision values of some rows.

        Columns with a zero weight take no part in the product.
        """
        used = np.flatnonzero(self.weights)
        return self.standardizer.transform(values)[:, used] @ self.weights[used] + self.bias

    @property
    def as_json(self) -> dict[str, Any]:
        """The model in JSON-friendly form."""
        return {
            "schema_hash": self.schema_hash,
            "columns": list(self.columns),
            "mean": self.standardizer.mean.tolist(),
            "std": self.standardizer.std.tolist(),
            "weights": self.weights.tolist(),
            "bias": self.bias,
            "training": self.training,
        }

    @classmethod
    def from_json(cls, data: dict[str, Any]) -> Self:
        """Create a model from JSON data.

        Raises:
            SchemaMismatch: If the stored hash doesn't match the columns.
        """
        columns = tuple(data["columns"])
        if data.get("schema_hash") != schema_hash(columns):
            raise SchemaMismatch("The model's schema hash doesn't match its columns")
        return cls(
            columns,
            Standardizer(
                np.asarray(data["mean"], dtype=np.float64),
                np.asarray(data["std"], dtype=np.float64),
            ),
            np.asarray(data["weights"], dtype=np.float64),
            float(data["bias"]),
            dict(data.get("training") or {}),
        )

    def save(self, path: Path) -> None:
        """Save the model as JSON."""
        path.write_text(dumps(self.as_json, indent=4), encoding="utf-8")

    @classmethod
    def load(cls, path: Path) -> Self:
        """Load a model saved with `save`.

        Raises:
            InputError: If the file can't be read as a model.
        """
        try:
            return cls.from_json(loads(path.read_text(encoding="utf-8")))
        except (OSError, JSONDecodeError, KeyError, TypeError, ValueError) as error:
            raise InputError(f"Unable to load a model from {path}: {error}") from error


##############################################################################
class Classifier(Protocol):
    """The interface of a learner that can stand in for logistic regression."""

    def fit(self, values: NDArray[np.float64], labels: NDArray[np.int64]) -> Self:
        """Train on some labeled rows."""

    def predict_scores(self, values: NDArray[np.float64]) -> NDArray[np.float64]:
        """Score some rows; higher means more likely popular."""


##############################################################################
def _log_loss(
    decision: NDArray[np.float64], labels: NDArray[np.float64]
) -> float:
    """The mean logistic loss of some decision values."""
    return float(np.mean(np.logaddexp(0.0, decision) - labels * decision))


##############################################################################
class LogisticRegression:
    """L2-regularised logistic regression trained by full-batch gradient descent."""

    def __init__(
        self,
        learning_rate: float = 0.1,
        iterations: int = 500,
        l2: float = 1e-3,
        columns: Sequence[str] | None = None,
    ) -> None:
        """Initialise the learner.

        Args:
            learning_rate: The gradient descent step size.
            iterations: The number of gradient descent steps.
            l2: The L2 regularisation strength.
            columns: The names of the columns trained on.
        """
        self.learning_rate = learning_rate
        self.iterations = iterations
        self.l2 = l2
        self.columns = None if columns is None else tuple(columns)
        self.model: LinearModel | None = None
        """The trained model."""
        self.loss_history: list[float] = []
        """The regularised training loss after each step."""

    @classmethod
    def from_configuration(
        cls, configuration: Configuration, columns: Sequence[str] | None = None
    ) -> Self:
        """Create the learner described by a configuration."""
        return cls(
            configuration.learning_rate, configuration.iterations, configuration.l2, columns
        )

    def _loss(
        self,
        decision: NDArray[np.float64],
        labels: NDArray[np.float64],
        weights: NDArray[np.float64],
    ) -> float:
        return _log_loss(decision, labels) + 0.5 * self.l2 * float(weights @ weights)

    def fit(self, values: ArrayLike, labels: ArrayLike) -> Self:
        """Train on some labeled rows.

        Args:
            values: The rows, one per example.
            labels: The 0/1 label of each row.

        Returns:
            Self.

        Raises:
            DegenerateLabels: If the labels don't hold both classes.
            InputError: If the rows are unusable.
        """
        matrix = np.asarray(values, dtype=np.float64)
        targets = np.asarray(labels, dtype=np.float64)
        if matrix.ndim != 2 or len(matrix) != len(targets):
            raise InputError("Training needs one label for each row of a matrix")
        if not np.isfinite(matrix).all():
            raise InputError("Training rows must be finite")
        if set(np.unique(targets).tolist()) != {0.0, 1.0}:
            raise DegenerateLabels("degenerate labels: training needs both classes")
        standardizer = Standardizer.fit(matrix)
        # Constant columns standardize to zero and are left out of the products.
        varying = np.flatnonzero(matrix.std(axis=0) > 0)
        standardized = standardizer.transform(matrix)[:, varying]
        active = np.zeros(len(varying))
        bias = 0.0
        self.loss_history = []
        for _ in range(self.iterations):
            error = expit(standardized @ active + bias) - targets
            active = active - self.learning_rate * (
                standardized.T @ error / len(targets) + self.l2 * active
            )
            bias -= self.learning_rate * float(error.mean())
            self.loss_history.append(
                self._loss(standardized @ active + bias, targets, active)
            )
        weights = np.zeros(matrix.shape[1])
        weights[varying] = active
        self.model = LinearModel(
            self.columns or tuple(f"x{index}" for index in range(matrix.shape[1])),
            standardizer,
            weights,
            bias,
            {
                "learning_rate": self.learning_rate,
                "iterations": self.iterations,
                "l2": self.l2,
            },
        )
        if self.loss_history:
            log.debug(
                "Trained on %d rows; loss %.6f -> %.6f",
                len(targets),
                self.loss_history[0],
                self.loss_history[-1],
            )
        return self

    def predict_scores(self, values: ArrayLike) -> NDArray[np.float64]:
        """Score some rows with the trained model.

        Raises:
            InvariantViolation: If the learner hasn't been trained.
        """
        if self.model is None:
            raise InvariantViolation("The classifier hasn't been trained")
        return expit(self.model.decision(np.asarray(values, dtype=np.float64)))


##############################################################################
def train_classifier(
    matrix: FeatureMatrix, labels: ArrayLike, configuration: Configuration
) -> LinearModel:
    """Train the classifier on a feature matrix.

    Args:
        matrix: The feature matrix.
        labels: The label of each row of the matrix.
        configuration: The configuration holding the training settings.

    Returns:
        The trained model.
    """
    learner = LogisticRegression.from_configuration(configuration, matrix.columns).fit(
        matrix.values, labels
    )
    assert learner.model is not None
    learner.model.training["seed"] = configuration.seed
    return learner.model


##############################################################################
class Prediction(NamedTuple):
    """The predictions made for some rows."""

    scores: NDArray[np.float64]
    """The probability that each row is popular."""

    labels: NDArray[np.int64]
    """The predicted label of each row."""


##############################################################################
def predict(
    model: LinearModel, rows: FeatureMatrix | ArrayLike, threshold: float = 0.5
) -> Prediction:
    """Predict the popularity of some rows.

    Args:
        model: The trained model.
        rows: The rows; a feature matrix is checked against the model's schema.
        threshold: The score at or above which a row is labeled popular.

    Returns:
        The scores and labels.

    Raises:
        SchemaMismatch: If the rows don't match what the model was trained on.
    """
    if isinstance(rows, FeatureMatrix):
        if rows.schema_hash != model.schema_hash:
            raise SchemaMismatch(
                f"Rows have schema {rows.schema_hash}, the model expects {model.schema_hash}"
            )
        values = rows.values
    else:
        values = np.atleast_2d(np.asarray(rows, dtype=np.float64))
        if values.shape[1] != len(model.columns):
            raise SchemaMismatch(
                f"Rows have {values.shape[1]} columns, the model expects {len(model.columns)}"
            )
    scores = expit(model.decision(values))
    return Prediction(scores, (scores >= threshold).astype(np.int64))


##############################################################################
def save_predictions(
    path: Path,
    keys: Sequence[tuple[str, int]],
    prediction: Prediction,
    truth: Sequence[int] | None = None,
) -> None:
    """Save predictions as CSV.

    Args:
        path: The file to write.
        keys: The (topic, bucket) of each row.
        prediction: The predictions.
        truth: The true label of each row, if known.
    """
    with path.open("w", encoding="utf-8", newline="") as target:
        writer = csv.writer(target)
        writer.writerow(("topic", "bucket", "score", "label", "truth"))
        for row, (topic, bucket) in enumerate(keys):
            writer.writerow(
                (
                    topic,
                    bucket,
                    repr(float(prediction.scores[row])),
                    int(prediction.labels[row]),
                    "" if truth is None else int(truth[row]),
                )
            )


### linear.py ends here
