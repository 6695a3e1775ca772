"""Deriving metric weights from a risk matrix."""

##############################################################################
# Python imports.
from dataclasses import dataclass
from enum import Enum, IntEnum
from math import isclose
from typing import Any, Mapping, NamedTuple

##############################################################################
# Backward-compatible typing.
from typing_extensions import Self

##############################################################################
# Local imports.
from ..errors import InputError


##############################################################################
class _Ordinal(IntEnum):
    """An ordered level of a risk matrix axis."""

    @property
    def label(self) -> str:
        """The human-readable name of the level."""
        return self.name.capitalize()

    @classmethod
    def parse(cls, value: str) -> Self:
        """Parse a level from its name, ignoring case.

        Raises:
            InputError: If the value isn't a level of this axis.
        """
        try:
            return cls[value.strip().upper()]
        except KeyError:
            raise InputError(
                f"Unknown {cls.__name__.lower()} {value!r}; expected one of "
                f"{', '.join(level.label for level in cls)}"
            ) from None


##############################################################################
class Likelihood(_Ordinal):
    """How likely it is that a metric matters in a scenario."""

    RARE = 0
    UNLIKELY = 1
    POSSIBLE = 2
    LIKELY = 3
    CERTAIN = 4


##############################################################################
class Severity(_Ordinal):
    """How much it hurts when a method does badly on a metric."""

    NEGLIGIBLE = 0
    MARGINAL = 1
    CRITICAL = 2
    CATASTROPHIC = 3


##############################################################################
class Metric(Enum):
    """The metrics a method is ranked on."""

    COMPLEXITY = "complexity"
    UNIVERSALITY = "universality"
    MACRO_F1 = "macro_f1"
    MICRO_F1 = "micro_f1"
    RMSE = "rmse"

    @classmethod
    def parse(cls, value: str) -> "Metric":
        """Parse a metric from its name.

        Raises:
            InputError: If the value isn't a metric.
        """
        try:
            return cls(value.strip().casefold())
        except ValueError:
            raise InputError(f"Unknown metric {value!r}") from None


##############################################################################
class Placement(NamedTuple):
    """Where a metric sits in a risk matrix."""

    likelihood: Likelihood
    severity: Severity

    @property
    def score(self) -> int:
        """The risk score of the cell; doubling with each step along either axis."""
        return 2 ** (self.likelihood + self.severity)


##############################################################################
@dataclass(frozen=True)
class RiskMatrix:
    """The placement of every metric in a risk matrix."""

    placements: Mapping[Metric, Placement]
    """The cell each metric is placed in."""

    def __post_init__(self) -> None:
        """Check the matrix.

        Raises:
            InputError: If a metric isn't placed.
        """
        if missing := [metric.value for metric in Metric if metric not in self.placements]:
            raise InputError(f"Risk matrix doesn't place: {', '.join(missing)}")
        object.__setattr__(self, "placements", dict(self.placements))

    @classmethod
    def from_json(cls, data: Mapping[str, Any]) -> Self:
        """Create a matrix from JSON data.

        Args:
            data: A mapping of metric name to a `[likelihood, severity]` pair.

        Returns:
            The matrix.

        Raises:
            InputError: If the data isn't a usable matrix.
        """
        placements: dict[Metric, Placement] = {}
        for name, cell in data.items():
            if not isinstance(cell, (list, tuple)) or len(cell) != 2:
                raise InputError(f"The placement of {name!r} must be [likelihood, severity]")
            placements[Metric.parse(name)] = Placement(
                Likelihood.parse(str(cell[0])), Severity.parse(str(cell[1]))
            )
        return cls(placements)

    @property
    def as_json(self) -> dict[str, list[str]]:
        """The matrix in JSON-friendly form."""
        return {
            metric.value: [placement.likelihood.label, placement.severity.label]
            for metric, placement in self.placements.items()
        }


##############################################################################
@dataclass(frozen=True)
class ScenarioWeights:
    """The importance of each metric in a scenario."""

    complexity: float
    """The weight given to the cost of building the features."""

    universality: float
    """The weight given to how widely the features can be collected."""

    macro_f1: float
    """The weight given to Macro-F1."""

    micro_f1: float
    """The weight given to Micro-F1."""

    rmse: float
    """The weight given to the root mean squared error."""

    def __post_init__(self) -> None:
        """Check the weights.

        Raises:
            InputError: If a weight is negative or they don't sum to one.
        """
        if any(weight < 0 for weight in self.as_tuple):
            raise InputError("Scenario weights can't be negative")
        if not isclose(sum(self.as_tuple), 1.0, abs_tol=1e-9):
            raise InputError(f"Scenario weights must sum to 1, not {sum(self.as_tuple)}")

    @classmethod
    def normalized(cls, weights: Mapping[Metric, float]) -> Self:
        """Create weights from relative importances.

        Args:
            weights: The relative importance of every metric.

        Returns:
            The weights, scaled to sum to one.

        Raises:
            InputError: If a metric is missing or there's no weight at all.
        """
        if missing := [metric.value for metric in Metric if metric not in weights]:
            raise InputError(f"No weight given for: {', '.join(missing)}")
        if any(weights[metric] < 0 for metric in Metric):
            raise InputError("Scenario weights can't be negative")
        if not (total := sum(weights[metric] for metric in Metric)) > 0:
            raise InputError("Scenario weights can't all be zero")
        return cls(**{metric.value: weights[metric] / total for metric in Metric})

    def __getitem__(self, metric: Metric) -> float:
        """Get the weight of a metric."""
        return float(getattr(self, metric.value))

    @property
    def as_tuple(self) -> tuple[float, float, float, float, float]:
        """The weights, in (complexity, universality, macro, micro, rmse) order."""
        return (self.complexity, self.universality, self.macro_f1, self.micro_f1, self.rmse)


##############################################################################
def weights_from_matrix(matrix: RiskMatrix) -> ScenarioWeights:
    """Derive the weights of a scenario from its risk matrix.

    Args:
        matrix: The risk matrix.

    Returns:
        The weights; each metric's share of the total risk score.
    """
    return ScenarioWeights.normalized(
        {metric: float(placement.score) for metric, placement in matrix.placements.items()}
    )


### risk.py ends here
