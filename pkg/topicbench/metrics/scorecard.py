"""Scorecards that summarise how a method performed."""

##############################################################################
# Python imports.
import csv
from dataclasses import dataclass
from enum import Enum
from pathlib import Path
from typing import Any, Final, Iterable, Sequence

##############################################################################
# NumPy imports.
from numpy.typing import ArrayLike

##############################################################################
# Backward-compatible typing.
from typing_extensions import Self

##############################################################################
# Local imports.
from ..errors import InputError
from .scores import macro_f1, macro_precision, macro_recall, micro_f1, rmse


##############################################################################
class Level(Enum):
    """A qualitative level of a method."""

    LOW = "Low"
    MEDIUM = "Medium"
    HIGH = "High"

    @classmethod
    def parse(cls, value: str) -> "Level":
        """Parse a level from its name, ignoring case.

        Raises:
            InputError: If the value isn't a level.
        """
        for level in cls:
            if level.value.casefold() == value.strip().casefold():
                return level
        raise InputError(f"Unknown level {value!r}")


##############################################################################
@dataclass(frozen=True)
class MethodScorecard:
    """The scores and qualitative levels of a method."""

    method: str
    """The name of the method."""

    macro_f1: float
    """The Macro-F1 of the method."""

    micro_f1: float
    """The Micro-F1 of the method."""

    rmse: float
    """The RMSE of the method."""

    complexity: Level
    """How complex the method is."""

    universality: Level
    """How widely the method can be used."""

    precision: float | None = None
    """The macro-averaged precision, where known."""

    recall: float | None = None
    """The macro-averaged recall, where known."""

    def __post_init__(self) -> None:
        """Check the scorecard.

        Raises:
            InputError: If a score is out of range.
        """
        if not self.method:
            raise InputError("A scorecard needs a method name")
        for name in ("macro_f1", "micro_f1", "precision", "recall"):
            if (value := getattr(self, name)) is not None and not 0 <= value <= 1:
                raise InputError(f"{self.method}: {name} must be within [0, 1], not {value}")
        if not self.rmse >= 0:
            raise InputError(f"{self.method}: rmse can't be negative")

    @classmethod
    def from_predictions(
        cls,
        method: str,
        truth: ArrayLike,
        predicted: ArrayLike,
        scores: ArrayLike | None = None,
        complexity: Level = Level.MEDIUM,
        universality: Level = Level.HIGH,
    ) -> Self:
        """Score a method from its pooled predictions.

        Args:
            method: The name of the method.
            truth: The true labels.
            predicted: The predicted labels.
            scores: The predicted probabilities; when given RMSE is taken
                over them rather than over the labels.
            complexity: The complexity of the method.
            universality: The universality of the method.

        Returns:
            The scorecard.
        """
        return cls(
            method,
            macro_f1(truth, predicted),
            micro_f1(truth, predicted),
            rmse(truth, predicted if scores is None else scores),
            complexity,
            universality,
            macro_precision(truth, predicted),
            macro_recall(truth, predicted),
        )

    @property
    def as_row(self) -> dict[str, Any]:
        """The scorecard as a CSV row."""
        return {
            "method": self.method,
            "macro_f1": self.macro_f1,
            "micro_f1": self.micro_f1,
            "rmse": self.rmse,
            "complexity": self.complexity.value,
            "universality": self.universality.value,
            "precision": "" if self.precision is None else self.precision,
            "recall": "" if self.recall is None else self.recall,
        }

    @classmethod
    def from_row(cls, row: dict[str, str]) -> Self:
        """Create a scorecard from a CSV row.

        Raises:
            InputError: If the row is malformed.
        """
        try:
            return cls(
                row["method"],
                float(row["macro_f1"]),
                float(row["micro_f1"]),
                float(row["rmse"]),
                Level.parse(row["complexity"]),
                Level.parse(row["universality"]),
                float(row["precision"]) if row.get("precision") else None,
                float(row["recall"]) if row.get("recall") else None,
            )
        except (KeyError, TypeError, ValueError) as error:
            raise InputError(f"Malformed scorecard row {row!r}: {error}") from error


##############################################################################
SCORECARD_FIELDS: Final[tuple[str, ...]] = (
    "method",
    "macro_f1",
    "micro_f1",
    "rmse",
    "complexity",
    "universality",
    "precision",
    "recall",
)
"""The columns of a scorecard file."""


##############################################################################
def save_scorecards(scorecards: Iterable[MethodScorecard], path: Path) -> None:
    """Save scorecards as CSV.

    Args:
        scorecards: The scorecards.
        path: The file to write.
    """
    with path.open("w", encoding="utf-8", newline="") as target:
        writer = csv.DictWriter(target, SCORECARD_FIELDS)
        writer.writeheader()
        writer.writerows(scorecard.as_row for scorecard in scorecards)


##############################################################################
def load_scorecards(path: Path) -> Sequence[MethodScorecard]:
    """Load scorecards saved with `save_scorecards`.

    Args:
        path: The file to read.

    Returns:
        The scorecards.

    Raises:
        InputError: If the file can't be read or holds a bad row.
    """
    try:
        with path.open(encoding="utf-8", newline="") as source:
            return [MethodScorecard.from_row(row) for row in csv.DictReader(source)]
    except OSError as error:
        raise InputError(f"Unable to read {path}: {error}") from error


### scorecard.py ends here
