"""Tests for stratified cross-validation."""

##############################################################################
# NumPy imports.
import numpy as np

##############################################################################
# Pytest imports.
import pytest
from hypothesis import given
from hypothesis import strategies as st

##############################################################################
# Local imports.
from topicbench.data import Configuration
from topicbench.errors import DegenerateLabels, InputError
from topicbench.features import FeatureMatrix
from topicbench.predict import cross_validate, stratified_folds


##############################################################################
def test_every_fold_gets_both_classes() -> None:
    labels = [0, 1] * 10
    for fold in stratified_folds(labels, 10, seed=1):
        assert sorted(labels[index] for index in fold) == [0, 1]


##############################################################################
@given(
    st.lists(st.integers(0, 1), min_size=12, max_size=80).filter(
        lambda labels: len(set(labels)) == 2
    ),
    st.integers(2, 12),
    st.integers(0, 1000),
)
def test_folds_partition_the_rows(labels: list[int], folds: int, seed: int) -> None:
    split = stratified_folds(labels, folds, seed)
    assert len(split) == folds
    assert sorted(np.concatenate(split).tolist()) == list(range(len(labels)))
    for label in (0, 1):
        sizes = [sum(1 for index in fold if labels[index] == label) for fold in split]
        assert max(sizes) - min(sizes) <= 1


##############################################################################
def test_folds_follow_the_seed() -> None:
    labels = [0] * 15 + [1] * 15
    first = stratified_folds(labels, 5, seed=9)
    again = stratified_folds(labels, 5, seed=9)
    assert all(np.array_equal(left, right) for left, right in zip(first, again))
    other = stratified_folds(labels, 5, seed=10)
    assert not all(np.array_equal(left, right) for left, right in zip(first, other))


##############################################################################
def test_fold_errors() -> None:
    with pytest.raises(InputError):
        stratified_folds([0, 1, 0], 5)
    with pytest.raises(InputError):
        stratified_folds([0, 1, 0], 1)
    with pytest.raises(DegenerateLabels):
        stratified_folds([1] * 10, 5)


##############################################################################
@given(
    st.lists(st.tuples(st.integers(0, 1), st.integers(0, 15)), min_size=12, max_size=80).filter(
        lambda rows: len({label for label, _ in rows}) == 2
        and len({group for _, group in rows}) >= 4
    ),
    st.integers(0, 1000),
)
def test_a_topic_never_spans_folds(rows: list[tuple[int, int]], seed: int) -> None:
    labels = [label for label, _ in rows]
    topics = [f"t{group}" for _, group in rows]
    split = stratified_folds(labels, 4, seed, topics)
    assert sorted(np.concatenate(split).tolist()) == list(range(len(rows)))
    fold_of = {index: fold for fold, members in enumerate(split) for index in members}
    for topic in set(topics):
        assert len({fold_of[index] for index, name in enumerate(topics) if name == topic}) == 1


##############################################################################
def test_topic_folds_balance_the_classes() -> None:
    topics = [f"t{index // 3}" for index in range(48)]
    labels = [int(index < 24) for index in range(48)]
    for fold in stratified_folds(labels, 4, seed=3, groups=topics):
        assert sorted(labels[index] for index in fold) == [0] * 6 + [1] * 6


##############################################################################
def test_topic_folds_need_enough_topics() -> None:
    with pytest.raises(InputError):
        stratified_folds([0, 1] * 6, 4, groups=["a", "b", "c"] * 4)
    with pytest.raises(InputError):
        stratified_folds([0, 1] * 6, 4, groups=["a"])


##############################################################################
def signal_matrix(rows: int = 40) -> tuple[FeatureMatrix, list[int]]:
    """A matrix whose first column is the label, plus some noise."""
    labels = [index % 2 for index in range(rows)]
    noise = np.random.default_rng(2).normal(size=rows)
    return (
        FeatureMatrix(
            tuple(f"t{index}" for index in range(rows)),
            (0,) * rows,
            np.column_stack([labels, noise]),
            ("signal", "noise"),
        ),
        labels,
    )


##############################################################################
def test_cross_validate() -> None:
    matrix, labels = signal_matrix()
    result = cross_validate(matrix, labels, Configuration(workers=1, folds=4))
    assert len(result.folds) == 4
    assert [fold.fold for fold in result.folds] == [0, 1, 2, 3]
    assert result.predicted.tolist() == labels
    assert sorted(set(result.fold_of.tolist())) == [0, 1, 2, 3]


##############################################################################
def test_cross_validation_ignores_worker_count() -> None:
    matrix, labels = signal_matrix()
    single = cross_validate(matrix, labels, Configuration(workers=1, folds=5))
    several = cross_validate(matrix, labels, Configuration(workers=3, folds=5))
    assert np.array_equal(single.scores, several.scores)


##############################################################################
def test_rows_of_one_topic_are_held_out_together() -> None:
    rows = 48
    labels = [int(index < rows // 2) for index in range(rows)]
    matrix = FeatureMatrix(
        tuple(f"t{index // 3}" for index in range(rows)),
        tuple(index % 3 for index in range(rows)),
        np.column_stack([labels, np.random.default_rng(4).normal(size=rows)]),
        ("signal", "noise"),
    )
    result = cross_validate(matrix, labels, Configuration(workers=1, folds=4))
    for start in range(0, rows, 3):
        assert len(set(result.fold_of[start : start + 3].tolist())) == 1
    assert result.predicted.tolist() == labels


##############################################################################
def test_cross_validate_needs_a_label_per_row() -> None:
    matrix, labels = signal_matrix()
    with pytest.raises(InputError):
        cross_validate(matrix, labels[:-1], Configuration(workers=1, folds=4))


### test_folds.py ends here
