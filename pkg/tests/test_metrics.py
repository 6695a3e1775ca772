"""Tests for the index scores and scorecards."""

##############################################################################
# Python imports.
from math import sqrt
from pathlib import Path

##############################################################################
# Pytest imports.
import pytest
from hypothesis import given
from hypothesis import strategies as st
from sklearn.metrics import f1_score

##############################################################################
# Local imports.
from topicbench.errors import InputError
from topicbench.metrics import (
    Level,
    MethodScorecard,
    accuracy,
    confusion,
    load_scorecards,
    macro_f1,
    macro_precision,
    macro_recall,
    micro_f1,
    precision_recall_f1,
    rmse,
    save_scorecards,
)
from topicbench.ranking import PUBLISHED_SCORECARDS

##############################################################################
TRUTH = [1, 0, 0, 0]
GUESS = [1, 1, 0, 0]


##############################################################################
def test_confusion() -> None:
    counts = confusion(TRUTH, GUESS)
    assert counts == (1, 1, 0, 2)
    assert counts.n == 4
    assert counts.swapped() == (2, 0, 1, 1)


##############################################################################
def test_per_class_scores() -> None:
    counts = confusion(TRUTH, GUESS)
    assert precision_recall_f1(counts, 1) == pytest.approx((0.5, 1.0, 2 / 3))
    assert precision_recall_f1(counts, 0) == pytest.approx((1.0, 2 / 3, 0.8))


##############################################################################
def test_index_scores() -> None:
    assert macro_f1(TRUTH, GUESS) == pytest.approx(0.7333, abs=1e-4)
    assert micro_f1(TRUTH, GUESS) == pytest.approx(0.75)
    assert rmse(TRUTH, GUESS) == pytest.approx(0.5)
    assert macro_precision(TRUTH, GUESS) == pytest.approx(0.75)
    assert macro_recall(TRUTH, GUESS) == pytest.approx(5 / 6)


##############################################################################
def test_perfect_predictions() -> None:
    assert macro_f1(TRUTH, TRUTH) == 1.0
    assert micro_f1(TRUTH, TRUTH) == 1.0
    assert rmse(TRUTH, TRUTH) == 0.0


##############################################################################
def test_missing_class_scores_zero() -> None:
    assert precision_recall_f1(confusion([0, 0], [0, 0]), 1) == (0.0, 0.0, 0.0)
    assert macro_f1([0, 0], [0, 0]) == pytest.approx(0.5)


##############################################################################
def test_rmse_of_scores() -> None:
    assert rmse([1, 0], [0.75, 0.25]) == pytest.approx(0.25)


##############################################################################
@pytest.mark.parametrize(
    "truth, guess",
    [([], []), ([0, 1], [0]), ([0, 2], [0, 1])],
)
def test_bad_inputs(truth: list[int], guess: list[int]) -> None:
    with pytest.raises(InputError):
        macro_f1(truth, guess)


##############################################################################
@pytest.mark.parametrize(
    "method", ["R-I (7 Day)", "R-II (7 Day)", "R-III (7 Day)", "F-I (7 Day)", "F-II (7 Day)"]
)
def test_published_rmse_follows_micro_f1(method: str) -> None:
    scorecard = next(card for card in PUBLISHED_SCORECARDS if card.method == method)
    assert scorecard.rmse == pytest.approx(sqrt(1 - scorecard.micro_f1), abs=1e-3)


##############################################################################
labels = st.lists(st.integers(0, 1), min_size=1, max_size=60)


##############################################################################
@given(st.data())
def test_scores_agree_with_sklearn(data: st.DataObject) -> None:
    truth = data.draw(labels)
    guess = data.draw(st.lists(st.integers(0, 1), min_size=len(truth), max_size=len(truth)))
    assert macro_f1(truth, guess) == pytest.approx(
        f1_score(truth, guess, labels=[0, 1], average="macro", zero_division=0)
    )
    assert micro_f1(truth, guess) == pytest.approx(
        f1_score(truth, guess, labels=[0, 1], average="micro", zero_division=0)
    )
    assert micro_f1(truth, guess) == pytest.approx(accuracy(truth, guess))
    assert rmse(truth, guess) ** 2 + micro_f1(truth, guess) == pytest.approx(1.0)
    assert macro_f1(truth, guess) == pytest.approx(
        macro_f1([1 - label for label in truth], [1 - label for label in guess])
    )


##############################################################################
def test_scorecard_from_predictions() -> None:
    card = MethodScorecard.from_predictions("mine", TRUTH, GUESS, complexity=Level.LOW)
    assert card.macro_f1 == pytest.approx(0.7333, abs=1e-4)
    assert card.rmse == pytest.approx(0.5)
    assert card.complexity is Level.LOW
    assert card.universality is Level.HIGH
    scored = MethodScorecard.from_predictions("mine", TRUTH, GUESS, [0.9, 0.6, 0.1, 0.0])
    assert scored.rmse == pytest.approx(sqrt((0.01 + 0.36 + 0.01) / 4))


##############################################################################
@pytest.mark.parametrize(
    "fields",
    [
        ("", 0.5, 0.5, 0.5),
        ("x", 1.5, 0.5, 0.5),
        ("x", 0.5, -0.1, 0.5),
        ("x", 0.5, 0.5, -1.0),
    ],
)
def test_scorecard_ranges(fields: tuple) -> None:
    with pytest.raises(InputError):
        MethodScorecard(*fields, Level.LOW, Level.LOW)


##############################################################################
def test_level_parse() -> None:
    assert Level.parse(" medium ") is Level.MEDIUM
    with pytest.raises(InputError):
        Level.parse("extreme")


##############################################################################
def test_scorecards_round_trip(tmp_path: Path) -> None:
    save_scorecards(PUBLISHED_SCORECARDS, target := tmp_path / "scorecards.csv")
    assert tuple(load_scorecards(target)) == PUBLISHED_SCORECARDS


##############################################################################
def test_load_scorecards_errors(tmp_path: Path) -> None:
    (target := tmp_path / "scorecards.csv").write_text(
        "method,macro_f1\nx,0.5\n", encoding="utf-8"
    )
    with pytest.raises(InputError):
        load_scorecards(target)
    with pytest.raises(InputError):
        load_scorecards(tmp_path / "missing.csv")


### test_metrics.py ends here
