"""Ablation of the feature space."""

##############################################################################
# Local imports.
from .relative import (
    AblationResult,
    ablation_report,
    baseline_accuracy,
    category_summary,
    relative_contribution,
    save_report,
)

##############################################################################
# Exports.
__all__ = [
    "ablation_report",
    "AblationResult",
    "baseline_accuracy",
    "category_summary",
    "relative_contribution",
    "save_report",
]

### __init__.py ends here
