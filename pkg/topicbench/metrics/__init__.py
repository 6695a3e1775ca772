"""Evaluation scores and method scorecards."""

##############################################################################
# Local imports.
from .scorecard import (
    SCORECARD_FIELDS,
    Level,
    MethodScorecard,
    load_scorecards,
    save_scorecards,
)
from .scores import (
    Confusion,
    accuracy,
    confusion,
    macro_f1,
    macro_precision,
    macro_recall,
    micro_f1,
    precision_recall_f1,
    rmse,
)

##############################################################################
# Exports.
__all__ = [
    "accuracy",
    "confusion",
    "Confusion",
    "Level",
    "load_scorecards",
    "macro_f1",
    "macro_precision",
    "macro_recall",
    "MethodScorecard",
    "micro_f1",
    "precision_recall_f1",
    "rmse",
    "save_scorecards",
    "SCORECARD_FIELDS",
]

### __init__.py ends here
