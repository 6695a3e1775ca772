"""Ranking methods by their distance from the ideal method."""

##############################################################################
# Python imports.
import csv
from math import sqrt
from pathlib import Path
from typing import Final, Iterable, Mapping, NamedTuple, Sequence

##############################################################################
# Local imports.
from ..errors import InputError
from ..metrics import Level, MethodScorecard
from .risk import ScenarioWeights

##############################################################################
LEVEL_VALUES: Final[dict[Level, float]] = {
    Level.LOW: 0.4,
    Level.MEDIUM: 0.5,
    Level.HIGH: 0.6,
}
"""The numeric value of each qualitative level."""

IDEAL_COMPLEXITY: Final[Level] = Level.LOW
"""The complexity of the ideal method."""

IDEAL_UNIVERSALITY: Final[Level] = Level.HIGH
"""The universality of the ideal method."""


##############################################################################
def min_dis(scorecard: MethodScorecard, weights: ScenarioWeights) -> float:
    """Calculate how far a method is from the ideal method.

    Args:
        scorecard: The method's scorecard.
        weights: The weights of the scenario.

    Returns:
        The weighted distance; zero for the ideal method.
    """
    return sqrt(
        weights.macro_f1 * (1.0 - scorecard.macro_f1) ** 2
        + weights.micro_f1 * (1.0 - scorecard.micro_f1) ** 2
        + weights.rmse * scorecard.rmse**2
        + weights.complexity
        * (LEVEL_VALUES[IDEAL_COMPLEXITY] - LEVEL_VALUES[scorecard.complexity]) ** 2
        + weights.universality
        * (LEVEL_VALUES[IDEAL_UNIVERSALITY] - LEVEL_VALUES[scorecard.universality]) ** 2
    )


##############################################################################
class RankedMethod(NamedTuple):
    """A method's place in a ranking."""

    rank: int
    """The position of the method; 1 is best."""

    method: str
    """The name of the method."""

    min_dis: float
    """The distance of the method from the ideal."""

    scorecard: MethodScorecard
    """The scorecard of the method."""


##############################################################################
def rank(scorecards: Iterable[MethodScorecard], weights: ScenarioWeights) -> list[RankedMethod]:
    """Rank methods under a scenario.

    Args:
        scorecards: The scorecards of the methods.
        weights: The weights of the scenario.

    Returns:
        The methods, closest to the ideal first; ties go to the method
        whose name sorts first.

    Raises:
        InputError: If there's nothing to rank.
    """
    scored = sorted(
        ((min_dis(scorecard, weights), scorecard) for scorecard in scorecards),
        key=lambda pair: (pair[0], pair[1].method),
    )
    if not scored:
        raise InputError("There are no methods to rank")
    return [
        RankedMethod(position, scorecard.method, distance, scorecard)
        for position, (distance, scorecard) in enumerate(scored, start=1)
    ]


##############################################################################
def save_ranking(rankings: Mapping[str, Sequence[RankedMethod]], path: Path) -> None:
    """Save the rankings of one or more scenarios as CSV.

    Args:
        rankings: The ranking under each scenario, keyed by scenario name.
        path: The file to write.
    """
    with path.open("w", encoding="utf-8", newline="") as target:
        writer = csv.writer(target)
        writer.writerow(("scenario", "rank", "method", "min_dis"))
        for name, ranking in rankings.items():
            writer.writerows(
                (name, ranked.rank, ranked.method, f"{ranked.min_dis:.6f}")
                for ranked in ranking
            )


### mindis.py ends here
