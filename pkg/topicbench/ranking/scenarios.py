"""The scenarios that methods are ranked under."""

##############################################################################
# Python imports.
from dataclasses import dataclass
from json import JSONDecodeError, loads
from pathlib import Path
from typing import Final

##############################################################################
# Local imports.
from ..errors import InputError
from .risk import (
    Likelihood,
    Metric,
    Placement,
    RiskMatrix,
    ScenarioWeights,
    Severity,
    weights_from_matrix,
)

_POSSIBLE_MARGINAL: Final = Placement(Likelihood.POSSIBLE, Severity.MARGINAL)
_POSSIBLE_CRITICAL: Final = Placement(Likelihood.POSSIBLE, Severity.CRITICAL)


##############################################################################
@dataclass(frozen=True)
class Scenario:
    """A named set of priorities for choosing a method."""

    name: str
    """The name of the scenario."""

    description: str
    """What the scenario cares about."""

    weights: ScenarioWeights
    """The weight of each metric."""

    matrix: RiskMatrix | None = None
    """The risk matrix the weights came from, if any."""

    @classmethod
    def from_matrix(cls, name: str, description: str, matrix: RiskMatrix) -> "Scenario":
        """Create a scenario from a risk matrix."""
        return cls(name, description, weights_from_matrix(matrix), matrix)


##############################################################################
SCENARIOS: Final[dict[str, Scenario]] = {
    scenario.name: scenario
    for scenario in (
        Scenario.from_matrix(
            "I",
            "Balance: every metric matters equally",
            RiskMatrix({metric: _POSSIBLE_CRITICAL for metric in Metric}),
        ),
        Scenario.from_matrix(
            "II",
            "Complexity oriented: cheap and widely usable methods",
            RiskMatrix(
                {
                    Metric.COMPLEXITY: _POSSIBLE_CRITICAL,
                    Metric.UNIVERSALITY: _POSSIBLE_CRITICAL,
                    Metric.MACRO_F1: _POSSIBLE_MARGINAL,
                    Metric.MICRO_F1: _POSSIBLE_MARGINAL,
                    Metric.RMSE: _POSSIBLE_MARGINAL,
                }
            ),
        ),
        Scenario.from_matrix(
            "III",
            "Accuracy oriented: rare popular topics must be caught",
            RiskMatrix(
                {
                    Metric.COMPLEXITY: Placement(Likelihood.LIKELY, Severity.MARGINAL),
                    Metric.UNIVERSALITY: _POSSIBLE_MARGINAL,
                    Metric.MACRO_F1: Placement(Likelihood.POSSIBLE, Severity.CATASTROPHIC),
                    Metric.MICRO_F1: _POSSIBLE_CRITICAL,
                    Metric.RMSE: _POSSIBLE_CRITICAL,
                }
            ),
        ),
        Scenario.from_matrix(
            "IV",
            "Consistency oriented: predictions must be stable overall",
            RiskMatrix(
                {
                    Metric.COMPLEXITY: _POSSIBLE_MARGINAL,
                    Metric.UNIVERSALITY: _POSSIBLE_MARGINAL,
                    Metric.MACRO_F1: _POSSIBLE_MARGINAL,
                    Metric.MICRO_F1: _POSSIBLE_MARGINAL,
                    Metric.RMSE: Placement(Likelihood.POSSIBLE, Severity.CATASTROPHIC),
                }
            ),
        ),
    )
}
"""The built-in scenarios, keyed by name."""


##############################################################################
def load_scenario(path: Path) -> Scenario:
    """Load a scenario from a JSON file.

    Args:
        path: The file to load.

    Returns:
        The scenario.

    Raises:
        InputError: If the file can't be read or doesn't describe a scenario.

    Note:
        The file holds either `placements`, a mapping of metric to a
        `[likelihood, severity]` pair, or `weights`, a mapping of metric to
        its relative importance.
    """
    try:
        data = loads(path.read_text(encoding="utf-8"))
    except (OSError, JSONDecodeError) as error:
        raise InputError(f"Unable to read {path}: {error}") from error
    if not isinstance(data, dict):
        raise InputError(f"{path} doesn't hold a JSON object")
    name = str(data.get("name") or path.stem)
    description = str(data.get("description") or "")
    if ("placements" in data) == ("weights" in data):
        raise InputError(f"{path} must give exactly one of placements or weights")
    if "placements" in data:
        if not isinstance(data["placements"], dict):
            raise InputError(f"The placements in {path} must be an object")
        return Scenario.from_matrix(name, description, RiskMatrix.from_json(data["placements"]))
    if not isinstance(weights := data["weights"], dict):
        raise InputError(f"The weights in {path} must be an object")
    try:
        relative = {Metric.parse(metric): float(weight) for metric, weight in weights.items()}
    except (TypeError, ValueError) as error:
        raise InputError(f"Bad weight in {path}: {error}") from error
    return Scenario(name, description, ScenarioWeights.normalized(relative))


##############################################################################
def scenario(name_or_path: str) -> Scenario:
    """Find a scenario by built-in name, or load it from a file.

    Args:
        name_or_path: The path to a scenario file, or a built-in scenario
            name. An existing file wins over a built-in of the same name.

    Returns:
        The scenario.

    Raises:
        InputError: If there's no such scenario.
    """
    if (path := Path(name_or_path)).is_file():
        return load_scenario(path)
    if name_or_path.upper() in SCENARIOS:
        return SCENARIOS[name_or_path.upper()]
    raise InputError(
        f"No scenario {name_or_path!r}; built-in ones are {', '.join(SCENARIOS)}"
    )


### scenarios.py ends here
