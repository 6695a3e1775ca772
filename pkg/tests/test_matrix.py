"""Tests for the feature schema and feature matrix."""

##############################################################################
# Python imports.
from pathlib import Path

##############################################################################
# NumPy imports.
import numpy as np

##############################################################################
# Pytest imports.
import pytest

##############################################################################
# Local imports.
from topicbench.core import Dataset
from topicbench.data import Configuration
from topicbench.errors import InputError, SchemaMismatch
from topicbench.features import (
    SCHEMA,
    Category,
    FeatureMatrix,
    feature_matrix,
    feature_matrix_range,
)


##############################################################################
def test_schema_shape() -> None:
    assert len(SCHEMA) == 68
    assert len(SCHEMA.features) == 34
    assert len(set(SCHEMA.columns)) == 68
    assert SCHEMA.columns[0] == "F_c1"
    assert SCHEMA.columns[-1] == "F_t4"
    assert len(SCHEMA.block("c4")) == 20
    assert len(SCHEMA.block("n6")) == 15


##############################################################################
@pytest.mark.parametrize(
    "category, width",
    [
        (Category.CONTENT, 24),
        (Category.USER, 3),
        (Category.HASHTAG, 6),
        (Category.NETWORK, 23),
        (Category.MEME, 8),
        (Category.TIMESERIES, 4),
    ],
)
def test_category_widths(category: Category, width: int) -> None:
    assert len(SCHEMA.category_columns(category)) == width


##############################################################################
def test_describe() -> None:
    assert SCHEMA.describe("F_c4.D15") == "F_c4: D-15 of Topic Vector"
    assert SCHEMA.describe("F_c3.pos") == "F_c3: Sentiment of Hashtag (pos)"
    assert SCHEMA.describe("F_m2") == "F_m2: Fraction of User"


##############################################################################
@pytest.fixture
def matrix(small_dataset: Dataset, configuration: Configuration) -> FeatureMatrix:
    return feature_matrix(small_dataset, ["music", "news"], 1, configuration)


##############################################################################
def test_matrix_rows(matrix: FeatureMatrix) -> None:
    assert matrix.values.shape == (2, 68)
    assert matrix.topics == ("music", "news")
    assert matrix.buckets == (1, 1)
    assert matrix.diagnostics == {}
    assert np.isfinite(matrix.values).all()


##############################################################################
def test_matrix_values(matrix: FeatureMatrix) -> None:
    music = dict(zip(matrix.columns, matrix.values[0]))
    assert music["F_c2"] == 2
    assert music["F_u2"] == 2
    assert music["F_n3"] == 3
    assert music["F_n5"] == 1
    assert music["F_m1"] == 3
    assert music["F_m2"] == pytest.approx(0.75)
    assert music["F_h1"] == 5
    assert music["F_t1"] == pytest.approx(0.8)
    assert sum(matrix.values[0][SCHEMA.block("c4")]) == pytest.approx(1.0)
    news = dict(zip(matrix.columns, matrix.values[1]))
    assert news["F_m7"] == 0
    assert news["F_n3"] == 0


##############################################################################
def test_fractions_stay_in_range(matrix: FeatureMatrix) -> None:
    fractions = matrix.values[:, SCHEMA.fraction_columns()]
    assert ((fractions >= 0) & (fractions <= 1)).all()


##############################################################################
def test_extraction_is_deterministic(
    small_dataset: Dataset, configuration: Configuration, matrix: FeatureMatrix
) -> None:
    again = feature_matrix(small_dataset, ["music", "news"], 1, configuration)
    assert np.array_equal(again.values, matrix.values)


##############################################################################
def test_disabled_categories_are_zero(
    small_dataset: Dataset, configuration: Configuration, matrix: FeatureMatrix
) -> None:
    reduced = feature_matrix(
        small_dataset,
        ["music", "news"],
        1,
        configuration.with_overrides(disabled_categories=["Network"]),
    )
    network = SCHEMA.category_columns(Category.NETWORK)
    assert not reduced.values[:, network].any()
    meme = SCHEMA.category_columns(Category.MEME)
    assert np.array_equal(reduced.values[:, meme], matrix.values[:, meme])


##############################################################################
def test_configured_emoticons_are_counted(
    small_dataset: Dataset, configuration: Configuration, matrix: FeatureMatrix
) -> None:
    assert matrix.column("F_c1")[0] == 0
    custom = feature_matrix(
        small_dataset, ["music"], 1, configuration.with_overrides(emoticons=["gig", "you"])
    )
    assert custom.column("F_c1")[0] == 2


##############################################################################
def test_matrix_keys(small_dataset: Dataset, configuration: Configuration) -> None:
    matrix = feature_matrix_range(small_dataset, ["music", "news"], [1, 2], configuration)
    assert matrix.keys == [("music", 1), ("news", 1), ("music", 2), ("news", 2)]


##############################################################################
def test_matrix_range(small_dataset: Dataset, configuration: Configuration) -> None:
    matrix = feature_matrix_range(small_dataset, ["music", "news"], [1, 2], configuration)
    assert matrix.topics == ("music", "news", "music", "news")
    assert matrix.buckets == (1, 1, 2, 2)


##############################################################################
def test_without(matrix: FeatureMatrix) -> None:
    reduced = matrix.without(SCHEMA.block("c4"))
    assert reduced.values.shape == (2, 48)
    assert "F_c4.D1" not in reduced.columns
    assert reduced.schema_hash != matrix.schema_hash
    assert np.array_equal(reduced.column("F_m1"), matrix.column("F_m1"))


##############################################################################
def test_save_and_load(
    matrix: FeatureMatrix, configuration: Configuration, tmp_path: Path
) -> None:
    sidecar = matrix.save(tmp_path / "features.csv", configuration)
    assert sidecar == tmp_path / "features.json"
    loaded = FeatureMatrix.load(tmp_path / "features.csv")
    assert loaded.columns == SCHEMA.columns
    assert loaded.topics == matrix.topics
    assert loaded.buckets == matrix.buckets
    assert np.array_equal(loaded.values, matrix.values)


##############################################################################
def test_edited_header_is_a_schema_mismatch(matrix: FeatureMatrix, tmp_path: Path) -> None:
    matrix.save(target := tmp_path / "features.csv")
    target.write_text(
        target.read_text(encoding="utf-8").replace("F_c1,", "F_x1,", 1), encoding="utf-8"
    )
    with pytest.raises(SchemaMismatch):
        FeatureMatrix.load(target)


##############################################################################
def test_load_rejects_other_files(tmp_path: Path) -> None:
    (other := tmp_path / "other.csv").write_text("a,b,c\n1,2,3\n", encoding="utf-8")
    with pytest.raises(InputError):
        FeatureMatrix.load(other)
    with pytest.raises(InputError):
        FeatureMatrix.load(tmp_path / "missing.csv")


### test_matrix.py ends here
