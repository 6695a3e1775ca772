"""The published evaluation of the surveyed methods, and its re-derivation."""

##############################################################################
# Python imports.
from typing import Final, NamedTuple

##############################################################################
# Local imports.
from ..metrics import Level, MethodScorecard
from .mindis import min_dis
from .risk import Metric
from .scenarios import SCENARIOS

_L, _M, _H = Level.LOW, Level.MEDIUM, Level.HIGH

##############################################################################
PUBLISHED_SCORECARDS: Final[tuple[MethodScorecard, ...]] = (
    MethodScorecard("F-I (Origin)", 0.5367, 0.8381, 0.4983, _M, _H, 0.9064, 0.4421),
    MethodScorecard("F-II (Origin)", 0.6194, 0.6915, 0.4554, _H, _H, 0.8671, 0.5798),
    MethodScorecard("F-I (7 Day)", 0.7889, 0.8947, 0.3244, _M, _H, 0.9789, 0.8000),
    MethodScorecard("F-II (7 Day)", 0.8148, 0.2857, 0.8452, _H, _H, 0.7619, 0.6667),
    MethodScorecard("R-I (7 Day)", 0.4942, 0.9668, 0.1822, _L, _H, 0.5070, 0.5005),
    MethodScorecard("R-II (7 Day)", 0.5839, 0.9879, 0.1100, _L, _M, 0.5627, 0.6290),
    MethodScorecard("R-III (7 Day)", 0.4358, 0.4800, 0.7211, _M, _H, 0.4856, 0.4907),
)
"""The index scores of the evaluated method variants."""


##############################################################################
class QualitativeLevels(NamedTuple):
    """The qualitative evaluation of a surveyed method."""

    method: str
    accuracy: Level | None
    complexity: Level
    universality: Level


##############################################################################
PUBLISHED_LEVELS: Final[tuple[QualitativeLevels, ...]] = tuple(
    QualitativeLevels(*row)
    for row in (
        ("F-I", _M, _M, _H),
        ("F-II", _L, _H, _H),
        ("F-III", _H, _H, _M),
        ("F-IV", None, _H, _M),
        ("F-V", _H, _H, _M),
        ("F-VI", _H, _H, _M),
        ("F-VII", None, _H, _L),
        ("F-VIII", _H, _L, _H),
        ("R-I", _M, _L, _H),
        ("R-II", _H, _L, _M),
        ("R-III", _M, _M, _H),
        ("R-IV", _H, _H, _M),
        ("R-V", _L, _L, _H),
        ("R-VI", _M, _M, _M),
        ("R-VII", _H, _M, _H),
        ("R-VIII", _M, _M, _H),
        ("R-IX", _H, _L, _H),
        ("R-X", _H, _M, _H),
        ("R-XI", _H, _M, _H),
        ("R-XII", None, _M, _H),
    )
)
"""The qualitative levels of every surveyed method; accuracy is unknown for some."""

##############################################################################
PUBLISHED_WEIGHTS: Final[dict[str, dict[Metric, float]]] = {
    name: dict(zip(Metric, row))
    for name, row in (
        ("I", (0.2, 0.2, 0.2, 0.2, 0.2)),
        ("II", (0.286, 0.285, 0.143, 0.143, 0.143)),
        ("III", (0.182, 0.091, 0.363, 0.182, 0.182)),
        ("IV", (0.125, 0.125, 0.125, 0.125, 0.5)),
    )
}
"""The published weights of each scenario, as rounded for print."""

_RANKED: Final[tuple[str, ...]] = tuple(scorecard.method for scorecard in PUBLISHED_SCORECARDS)

PUBLISHED_RANKING: Final[dict[str, dict[str, float]]] = {
    name: dict(zip(_RANKED, row))
    for name, row in (
        ("I", (0.3160, 0.2991, 0.1848, 0.5018, 0.2471, 0.2170, 0.4730)),
        ("II", (0.2697, 0.2528, 0.1608, 0.4241, 0.2221, 0.2019, 0.4016)),
        ("III", (0.3603, 0.3282, 0.1979, 0.4849, 0.3194, 0.2709, 0.5112)),
        ("IV", (0.3943, 0.3656, 0.2466, 0.6521, 0.2031, 0.1842, 0.5786)),
    )
}
"""The published distance of each method from the ideal, per scenario."""

GOLDEN_METHODS: Final[tuple[str, ...]] = ("F-I (Origin)", "F-I (7 Day)", "R-III (7 Day)")
"""The methods whose published distances can be re-derived exactly."""

TOLERANCE: Final[float] = 1e-3
"""How far a re-derived value may stray from the published one."""


##############################################################################
class Comparison(NamedTuple):
    """A re-derived value next to its published counterpart."""

    scenario: str
    """The scenario the value belongs to."""

    item: str
    """The metric or method the value is for."""

    derived: float
    """The value as re-derived."""

    published: float
    """The value as published."""

    golden: bool
    """Must the values agree?"""

    @property
    def deviation(self) -> float:
        """The absolute difference between the two values."""
        return abs(self.derived - self.published)

    @property
    def failed(self) -> bool:
        """Is this a golden value that strays too far?"""
        return self.golden and self.deviation > TOLERANCE


##############################################################################
def compare_weights() -> list[Comparison]:
    """Re-derive the weights of the built-in scenarios.

    Returns:
        Every derived weight next to the published one; all are golden.
    """
    return [
        Comparison(name, metric.value, SCENARIOS[name].weights[metric], weight, True)
        for name, weights in PUBLISHED_WEIGHTS.items()
        for metric, weight in weights.items()
    ]


##############################################################################
def compare_ranking() -> list[Comparison]:
    """Re-derive the ranking table from the published scorecards.

    Returns:
        Every derived distance next to the published one; only those of the
        golden methods must agree.
    """
    scorecards = {scorecard.method: scorecard for scorecard in PUBLISHED_SCORECARDS}
    return [
        Comparison(
            name,
            method,
            min_dis(scorecards[method], SCENARIOS[name].weights),
            distance,
            method in GOLDEN_METHODS,
        )
        for name, distances in PUBLISHED_RANKING.items()
        for method, distance in distances.items()
    ]


### published.py ends here
