"""Weighting metrics by scenario and ranking methods against the ideal."""

##############################################################################
# Local imports.
from .mindis import (
    IDEAL_COMPLEXITY,
    IDEAL_UNIVERSALITY,
    LEVEL_VALUES,
    RankedMethod,
    min_dis,
    rank,
    save_ranking,
)
from .published import (
    GOLDEN_METHODS,
    PUBLISHED_LEVELS,
    PUBLISHED_RANKING,
    PUBLISHED_SCORECARDS,
    PUBLISHED_WEIGHTS,
    TOLERANCE,
    Comparison,
    QualitativeLevels,
    compare_ranking,
    compare_weights,
)
from .risk import (
    Likelihood,
    Metric,
    Placement,
    RiskMatrix,
    ScenarioWeights,
    Severity,
    weights_from_matrix,
)
from .scenarios import SCENARIOS, Scenario, load_scenario, scenario

##############################################################################
# Exports.
__all__ = [
    "compare_ranking",
    "compare_weights",
    "Comparison",
    "GOLDEN_METHODS",
    "IDEAL_COMPLEXITY",
    "IDEAL_UNIVERSALITY",
    "LEVEL_VALUES",
    "Likelihood",
    "load_scenario",
    "Metric",
    "min_dis",
    "Placement",
    "PUBLISHED_LEVELS",
    "PUBLISHED_RANKING",
    "PUBLISHED_SCORECARDS",
    "PUBLISHED_WEIGHTS",
    "QualitativeLevels",
    "rank",
    "RankedMethod",
    "RiskMatrix",
    "save_ranking",
    "scenario",
    "Scenario",
    "SCENARIOS",
    "ScenarioWeights",
    "Severity",
    "TOLERANCE",
    "weights_from_matrix",
]

### __init__.py ends here
