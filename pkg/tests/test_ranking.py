"""Tests for scenario weights and MinDis ranking."""

##############################################################################
# Python imports.
from json import dumps
from pathlib import Path

##############################################################################
# Pytest imports.
import pytest
from hypothesis import given
from hypothesis import strategies as st

##############################################################################
# Local imports.
from topicbench.errors import InputError
from topicbench.metrics import Level, MethodScorecard
from topicbench.ranking import (
    PUBLISHED_RANKING,
    PUBLISHED_SCORECARDS,
    SCENARIOS,
    Likelihood,
    Metric,
    Placement,
    RiskMatrix,
    ScenarioWeights,
    Severity,
    compare_ranking,
    compare_weights,
    load_scenario,
    min_dis,
    rank,
    save_ranking,
    scenario,
    weights_from_matrix,
)

##############################################################################
IDEAL = MethodScorecard("ideal", 1.0, 1.0, 0.0, Level.LOW, Level.HIGH)
UNIFORM = ScenarioWeights(0.2, 0.2, 0.2, 0.2, 0.2)


##############################################################################
def published(method: str) -> MethodScorecard:
    return next(card for card in PUBLISHED_SCORECARDS if card.method == method)


##############################################################################
def test_scenario_three_weights() -> None:
    assert SCENARIOS["III"].weights.as_tuple == pytest.approx(
        (16 / 88, 8 / 88, 32 / 88, 16 / 88, 16 / 88)
    )


##############################################################################
def test_one_cell_is_uniform() -> None:
    matrix = RiskMatrix(
        {metric: Placement(Likelihood.RARE, Severity.MARGINAL) for metric in Metric}
    )
    assert weights_from_matrix(matrix).as_tuple == pytest.approx((0.2,) * 5)


##############################################################################
placements = st.fixed_dictionaries(
    {
        metric: st.tuples(st.sampled_from(Likelihood), st.sampled_from(Severity))
        for metric in Metric
    }
)


##############################################################################
@given(placements)
def test_weights_survive_a_likelihood_shift(cells: dict) -> None:
    lowered = {
        metric: Placement(Likelihood(min(likelihood, Likelihood.LIKELY)), severity)
        for metric, (likelihood, severity) in cells.items()
    }
    raised = {
        metric: Placement(Likelihood(placement.likelihood + 1), placement.severity)
        for metric, placement in lowered.items()
    }
    weights = weights_from_matrix(RiskMatrix(lowered))
    assert sum(weights.as_tuple) == pytest.approx(1.0)
    assert weights_from_matrix(RiskMatrix(raised)).as_tuple == pytest.approx(weights.as_tuple)


##############################################################################
def test_risk_matrix_needs_every_metric() -> None:
    with pytest.raises(InputError):
        RiskMatrix({Metric.RMSE: Placement(Likelihood.RARE, Severity.MARGINAL)})


##############################################################################
def test_risk_matrix_json() -> None:
    matrix = SCENARIOS["IV"].matrix
    assert matrix is not None
    assert matrix.as_json["rmse"] == ["Possible", "Catastrophic"]
    assert RiskMatrix.from_json(matrix.as_json) == matrix
    with pytest.raises(InputError):
        RiskMatrix.from_json({**matrix.as_json, "rmse": ["Possible", "Dire"]})


##############################################################################
def test_weights_must_sum_to_one() -> None:
    with pytest.raises(InputError):
        ScenarioWeights(0.2, 0.2, 0.2, 0.2, 0.3)
    with pytest.raises(InputError):
        ScenarioWeights.normalized({metric: 0.0 for metric in Metric})


##############################################################################
def test_ideal_method_is_at_zero() -> None:
    assert min_dis(IDEAL, UNIFORM) == 0.0


##############################################################################
def test_published_distances() -> None:
    assert min_dis(published("F-I (7 Day)"), UNIFORM) == pytest.approx(0.1848, abs=1e-4)
    assert min_dis(published("R-III (7 Day)"), SCENARIOS["IV"].weights) == pytest.approx(
        0.5786, abs=1e-4
    )


##############################################################################
@given(st.floats(0.0, 0.99), st.floats(0.001, 0.01))
def test_distance_falls_as_macro_f1_rises(macro: float, step: float) -> None:
    worse = MethodScorecard("m", macro, 0.5, 0.5, Level.MEDIUM, Level.MEDIUM)
    better = MethodScorecard("m", macro + step, 0.5, 0.5, Level.MEDIUM, Level.MEDIUM)
    assert min_dis(better, UNIFORM) < min_dis(worse, UNIFORM)


##############################################################################
@pytest.mark.parametrize(
    "name, winner",
    [
        ("I", "F-I (7 Day)"),
        ("II", "F-I (7 Day)"),
        ("III", "F-I (7 Day)"),
        ("IV", "R-II (7 Day)"),
    ],
)
def test_scenario_winners(name: str, winner: str) -> None:
    ranking = rank(PUBLISHED_SCORECARDS, SCENARIOS[name].weights)
    assert ranking[0].method == winner
    assert [ranked.rank for ranked in ranking] == list(range(1, 8))
    assert [ranked.min_dis for ranked in ranking] == sorted(ranked.min_dis for ranked in ranking)


##############################################################################
def test_ties_go_by_name() -> None:
    twins = [
        MethodScorecard("b", 0.5, 0.5, 0.5, Level.LOW, Level.HIGH),
        MethodScorecard("a", 0.5, 0.5, 0.5, Level.LOW, Level.HIGH),
    ]
    assert [ranked.method for ranked in rank(twins, UNIFORM)] == ["a", "b"]


##############################################################################
def test_rank_one_or_none() -> None:
    assert rank([IDEAL], UNIFORM)[0][:2] == (1, "ideal")
    with pytest.raises(InputError):
        rank([], UNIFORM)


##############################################################################
def test_published_tables_reproduce() -> None:
    weights = compare_weights()
    assert len(weights) == 20
    assert not [comparison for comparison in weights if comparison.failed]
    ranking = compare_ranking()
    assert len(ranking) == 28
    assert sum(1 for comparison in ranking if comparison.golden) == 12
    assert not [comparison for comparison in ranking if comparison.failed]


##############################################################################
def test_golden_values() -> None:
    for name, distances in PUBLISHED_RANKING.items():
        for method in ("F-I (Origin)", "F-I (7 Day)", "R-III (7 Day)"):
            assert min_dis(published(method), SCENARIOS[name].weights) == pytest.approx(
                distances[method], abs=1e-3
            )


##############################################################################
def test_load_scenario_placements(tmp_path: Path) -> None:
    (source := tmp_path / "custom.json").write_text(
        dumps({"placements": SCENARIOS["III"].matrix.as_json}), encoding="utf-8"
    )
    loaded = load_scenario(source)
    assert loaded.name == "custom"
    assert loaded.weights == SCENARIOS["III"].weights


##############################################################################
def test_load_scenario_weights(tmp_path: Path) -> None:
    (source := tmp_path / "weights.json").write_text(
        dumps(
            {
                "name": "mine",
                "weights": {
                    "complexity": 1,
                    "universality": 1,
                    "macro_f1": 2,
                    "micro_f1": 2,
                    "rmse": 4,
                },
            }
        ),
        encoding="utf-8",
    )
    loaded = scenario(str(source))
    assert loaded.name == "mine"
    assert loaded.weights.rmse == pytest.approx(0.4)
    assert loaded.matrix is None


##############################################################################
@pytest.mark.parametrize(
    "content",
    [
        "{",
        "[]",
        dumps({}),
        dumps({"weights": {"rmse": 1}}),
        dumps({"weights": {"rmse": 1}, "placements": {}}),
    ],
)
def test_load_scenario_errors(tmp_path: Path, content: str) -> None:
    (source := tmp_path / "bad.json").write_text(content, encoding="utf-8")
    with pytest.raises(InputError):
        load_scenario(source)


##############################################################################
def test_scenario_lookup() -> None:
    assert scenario("iv") is SCENARIOS["IV"]
    with pytest.raises(InputError):
        scenario("V")


##############################################################################
def test_a_file_named_like_a_builtin_is_loaded(
    tmp_path: Path, monkeypatch: pytest.MonkeyPatch
) -> None:
    monkeypatch.chdir(tmp_path)
    Path("i").write_text(
        dumps({"placements": SCENARIOS["III"].matrix.as_json}), encoding="utf-8"
    )
    loaded = scenario("i")
    assert loaded is not SCENARIOS["I"]
    assert loaded.name == "i"
    assert loaded.weights == SCENARIOS["III"].weights
    assert scenario("ii") is SCENARIOS["II"]


##############################################################################
def test_save_ranking(tmp_path: Path) -> None:
    save_ranking({"I": rank([IDEAL], UNIFORM)}, target := tmp_path / "ranking.csv")
    assert target.read_text(encoding="utf-8").splitlines() == [
        "scenario,rank,method,min_dis",
        "I,1,ideal,0.000000",
    ]


### test_ranking.py ends here
