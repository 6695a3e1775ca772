"""Labeling, denoising, training and validating popularity classifiers."""

##############################################################################
# Local imports.
from .denoise import denoise_ts
from .folds import (
    ClassifierFactory,
    CrossValidation,
    FoldResult,
    cross_validate,
    stratified_folds,
)
from .labels import (
    Labeling,
    LabelingPolicy,
    RowKey,
    RowLabeling,
    label_rows,
    label_topics,
    labels_for,
    load_labels,
    save_labels,
)
from .latent import LATENT_COLUMNS, LatentFeatures, latent_baseline, latent_features, latent_matrix
from .linear import (
    Classifier,
    LinearModel,
    LogisticRegression,
    Prediction,
    Standardizer,
    predict,
    save_predictions,
    train_classifier,
)

##############################################################################
# Exports.
__all__ = [
    "Classifier",
    "ClassifierFactory",
    "cross_validate",
    "CrossValidation",
    "denoise_ts",
    "FoldResult",
    "label_rows",
    "label_topics",
    "Labeling",
    "LabelingPolicy",
    "labels_for",
    "LATENT_COLUMNS",
    "latent_baseline",
    "latent_features",
    "latent_matrix",
    "LatentFeatures",
    "LinearModel",
    "load_labels",
    "LogisticRegression",
    "predict",
    "Prediction",
    "RowKey",
    "RowLabeling",
    "save_labels",
    "save_predictions",
    "Standardizer",
    "stratified_folds",
    "train_classifier",
]

### __init__.py ends here
