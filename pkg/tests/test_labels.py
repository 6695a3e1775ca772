"""Tests for labeling and denoising topics."""

##############################################################################
# Python imports.
from pathlib import Path

##############################################################################
# Pytest imports.
import pytest

##############################################################################
# Local imports.
from topicbench.core import TimeSeries
from topicbench.data import Configuration
from topicbench.errors import InputError
from topicbench.predict import (
    LabelingPolicy,
    denoise_ts,
    label_rows,
    label_topics,
    labels_for,
    load_labels,
    save_labels,
)


##############################################################################
def next_bucket(**counts: int) -> dict[str, TimeSeries]:
    """Series that only cover bucket 1."""
    return {topic: TimeSeries(topic, 1, (count,)) for topic, count in counts.items()}


##############################################################################
def test_threshold_labels() -> None:
    labeling = label_topics(next_bucket(a=10, b=100, c=5), 1, LabelingPolicy("threshold", 50))
    assert labeling.labels == {"a": 0, "b": 1, "c": 0}
    assert labeling.cutoff == 50
    assert labeling.excluded == {}


##############################################################################
def test_threshold_is_inclusive() -> None:
    labeling = label_topics(next_bucket(a=50, b=49), 1, LabelingPolicy("threshold", 50))
    assert labeling.labels == {"a": 1, "b": 0}


##############################################################################
def test_quantile_labels() -> None:
    labeling = label_topics(
        next_bucket(a=1, b=2, c=3, d=4), 1, LabelingPolicy("quantile", quantile=0.5)
    )
    assert labeling.cutoff == pytest.approx(2.5)
    assert labeling.labels == {"a": 0, "b": 0, "c": 1, "d": 1}


##############################################################################
def test_equal_counts_are_all_popular() -> None:
    labeling = label_topics(next_bucket(a=7, b=7, c=7), 1, LabelingPolicy(quantile=0.9))
    assert set(labeling.labels.values()) == {1}


##############################################################################
def test_uncovered_horizon_is_excluded() -> None:
    series = next_bucket(a=10) | {"b": TimeSeries("b", 0, (4,))}
    labeling = label_topics(series, 1, LabelingPolicy("threshold", 5))
    assert labeling.labels == {"a": 1}
    assert set(labeling.excluded) == {"b"}


##############################################################################
@pytest.mark.parametrize(
    "fields",
    [{"mode": "threshold", "threshold": 0}, {"quantile": 1.0}, {"mode": "median"}],
)
def test_bad_policies(fields: dict) -> None:
    with pytest.raises(InputError):
        LabelingPolicy(**fields)


##############################################################################
def test_policy_from_configuration() -> None:
    policy = LabelingPolicy.from_configuration(
        Configuration(labeling_mode="threshold", labeling_threshold=12)
    )
    assert policy.mode == "threshold"
    assert policy.threshold == 12


##############################################################################
def test_each_row_is_labeled_by_the_bucket_after_it() -> None:
    series = {
        "a": TimeSeries("a", 0, (1, 1, 9, 1)),
        "b": TimeSeries("b", 0, (1, 5, 1, 5)),
    }
    keys = [(topic, bucket) for topic in "ab" for bucket in range(3)]
    labeling = label_rows(series, keys, LabelingPolicy("threshold", 5))
    assert labeling.labels == {
        ("a", 0): 0,
        ("a", 1): 1,
        ("a", 2): 0,
        ("b", 0): 1,
        ("b", 1): 0,
        ("b", 2): 1,
    }
    assert labels_for(keys, labeling.labels) == [0, 1, 0, 1, 0, 1]
    assert labeling.cutoffs == {1: 5.0, 2: 5.0, 3: 5.0}


##############################################################################
def test_row_quantiles_are_taken_per_horizon() -> None:
    series = {
        "a": TimeSeries("a", 0, (0, 2, 100)),
        "b": TimeSeries("b", 0, (0, 4, 200)),
    }
    labeling = label_rows(
        series, [("a", 0), ("b", 0), ("a", 1), ("b", 1)], LabelingPolicy(quantile=0.5)
    )
    assert labeling.cutoffs == {1: pytest.approx(3.0), 2: pytest.approx(150.0)}
    assert labeling.labels == {("a", 0): 0, ("b", 0): 1, ("a", 1): 0, ("b", 1): 1}


##############################################################################
def test_rows_without_a_series_or_horizon_are_excluded() -> None:
    labeling = label_rows(
        {"a": TimeSeries("a", 0, (1, 6))},
        [("a", 0), ("a", 1), ("gone", 0)],
        LabelingPolicy("threshold", 5),
    )
    assert labeling.labels == {("a", 0): 1}
    assert set(labeling.excluded) == {("a", 1), ("gone", 0)}


##############################################################################
def test_labels_round_trip_and_line_up(tmp_path: Path) -> None:
    save_labels({("b", 1): 1, ("a", 2): 0, ("a", 1): 1}, target := tmp_path / "labels.csv")
    assert target.read_text(encoding="utf-8").splitlines() == [
        "topic,bucket,label",
        "a,1,1",
        "a,2,0",
        "b,1,1",
    ]
    loaded = load_labels(target)
    assert labels_for([("b", 1), ("a", 2), ("a", 1)], loaded) == [1, 0, 1]
    with pytest.raises(InputError):
        labels_for([("b", 2)], loaded)


##############################################################################
def test_load_labels_rejects_bad_values(tmp_path: Path) -> None:
    (target := tmp_path / "labels.csv").write_text("topic,bucket,label\na,0,2\n", encoding="utf-8")
    with pytest.raises(InputError):
        load_labels(target)
    with pytest.raises(InputError):
        load_labels(tmp_path / "missing.csv")


##############################################################################
def test_denoise_drops_silent_topics() -> None:
    series = {
        "quiet": TimeSeries("quiet", 0, (0, 0, 0, 0, 0)),
        "bursty": TimeSeries("bursty", 0, (0, 3, 0, 2, 5)),
    }
    assert denoise_ts(["quiet", "bursty", "unknown"], series, 4) == ["bursty"]
    assert denoise_ts(["bursty"], series, 4, min_active_buckets=3) == ["bursty"]
    assert denoise_ts(["bursty"], series, 4, min_active_buckets=4) == []


##############################################################################
def test_denoise_can_keep_everything() -> None:
    series = {"quiet": TimeSeries("quiet", 0, (0, 0, 0))}
    candidates = ["quiet", "unknown"]
    assert denoise_ts(candidates, series, 2, min_active_buckets=0, min_count=0) == candidates


##############################################################################
def test_denoise_window_too_short() -> None:
    with pytest.raises(InputError):
        denoise_ts([], {}, 0, window=2, min_active_buckets=3)


### test_labels.py ends here
