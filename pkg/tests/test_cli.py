"""Tests for the command line."""

##############################################################################
# Python imports.
import csv
from json import dumps, loads
from pathlib import Path

##############################################################################
# NumPy imports.
import numpy as np

##############################################################################
# Pytest imports.
import pytest

##############################################################################
# Local imports.
from conftest import FIXTURES
from topicbench.__main__ import main
from topicbench.commands import repro_tables
from topicbench.data import ExitStates, RunManifest, file_digest
from topicbench.features import FeatureMatrix
from topicbench.metrics import save_scorecards
from topicbench.predict import LinearModel, Standardizer, save_labels
from topicbench.ranking import PUBLISHED_SCORECARDS, Comparison
from topicbench.synth import SynthConfig, generate


##############################################################################
@pytest.fixture
def settings(tmp_path: Path) -> Path:
    """A configuration file for quick runs."""
    (target := tmp_path / "settings.json").write_text(
        dumps(
            {
                "workers": 1,
                "folds": 3,
                "iterations": 100,
                "lda_iterations": 3,
                "lda_fold_in_iterations": 2,
                "labeling_quantile": 0.7,
                "lexicon": str(FIXTURES / "lexicon.tsv"),
            }
        ),
        encoding="utf-8",
    )
    return target


##############################################################################
@pytest.fixture
def corpus(tmp_path: Path) -> tuple[Path, Path]:
    """A small synthetic corpus on disk."""
    files, _ = generate(
        SynthConfig(seed=7, users=200, topics=30, background=20), tmp_path / "corpus"
    )
    return files.messages, files.followers


##############################################################################
def run(settings: Path, *arguments: str | Path) -> ExitStates:
    return main(["--config", str(settings), *(str(argument) for argument in arguments)])


##############################################################################
def test_unknown_flag_is_an_input_error(capsys: pytest.CaptureFixture[str]) -> None:
    with pytest.raises(SystemExit) as exit_state:
        main(["rank", "--colour", "red"])
    assert exit_state.value.code == ExitStates.INPUT_ERROR.value
    assert "usage:" in capsys.readouterr().err


##############################################################################
def test_missing_input_file_is_an_input_error(settings: Path, tmp_path: Path) -> None:
    with pytest.raises(SystemExit) as exit_state:
        run(settings, "rank", "--scorecards", tmp_path / "missing.csv", "--out", tmp_path)
    assert exit_state.value.code == ExitStates.INPUT_ERROR.value


##############################################################################
def test_rank_published_scorecards(settings: Path, tmp_path: Path) -> None:
    save_scorecards(PUBLISHED_SCORECARDS, scorecards := tmp_path / "published.csv")
    out = tmp_path / "rank"
    arguments = ("rank", "--scenario", "I", "--scorecards", scorecards, "--out", out)
    assert run(settings, *arguments) is ExitStates.OKAY
    with (out / "ranking.csv").open(encoding="utf-8", newline="") as source:
        rows = list(csv.DictReader(source))
    assert rows[0]["method"] == "F-I (7 Day)"
    assert float(rows[0]["min_dis"]) == pytest.approx(0.1848, abs=1e-4)
    manifest = RunManifest.load(out / "manifest.json")
    assert manifest.command == "rank"
    assert manifest.inputs == {str(scorecards): file_digest(scorecards)}


##############################################################################
def test_rank_unknown_scenario(settings: Path, tmp_path: Path) -> None:
    save_scorecards(PUBLISHED_SCORECARDS, scorecards := tmp_path / "published.csv")
    out = tmp_path / "rank"
    arguments = ("rank", "--scenario", "IX", "--scorecards", scorecards, "--out", out)
    assert run(settings, *arguments) is ExitStates.INPUT_ERROR
    assert not (out / "manifest.json").exists()


##############################################################################
def test_synth_is_repeatable(settings: Path, tmp_path: Path) -> None:
    for name in ("first", "second"):
        assert run(
            settings,
            "synth",
            "--seed",
            "7",
            "--users",
            "100",
            "--topics",
            "10",
            "--out",
            tmp_path / name,
        ) is ExitStates.OKAY
    first = RunManifest.load(tmp_path / "first" / "manifest.json")
    second = RunManifest.load(tmp_path / "second" / "manifest.json")
    assert sorted(Path(path).name for path in first.outputs) == [
        "followers.tsv",
        "ledger.json",
        "messages.jsonl",
    ]
    assert sorted(first.outputs.values()) == sorted(second.outputs.values())
    assert first.seed == 7


##############################################################################
def test_repro_tables(settings: Path, tmp_path: Path) -> None:
    assert run(settings, "repro-tables", "--out", tmp_path) is ExitStates.OKAY
    assert (tmp_path / "manifest.json").exists()
    with (tmp_path / "ranking.csv").open(encoding="utf-8", newline="") as source:
        rows = list(csv.DictReader(source))
    assert len(rows) == 28
    assert sum(int(row["golden"]) for row in rows) == 12


##############################################################################
def test_repro_tables_failure_is_an_invariant_violation(
    settings: Path, tmp_path: Path, monkeypatch: pytest.MonkeyPatch
) -> None:
    monkeypatch.setattr(
        repro_tables, "compare_ranking", lambda: [Comparison("I", "x", 1.0, 0.0, True)]
    )
    assert run(settings, "repro-tables", "--out", tmp_path) is ExitStates.INVARIANT_VIOLATION


##############################################################################
def test_pipeline(settings: Path, corpus: tuple[Path, Path], tmp_path: Path) -> None:
    messages, followers = corpus
    source = ("--messages", messages, "--followers", followers)

    assert run(settings, "ingest", *source, "--out", tmp_path / "ingest") is ExitStates.OKAY
    report = loads((tmp_path / "ingest" / "ingest_report.json").read_text(encoding="utf-8"))
    assert report["messages_rejected"] == 0

    features = tmp_path / "features"
    assert run(settings, "features", *source, "--bucket", "1", "--out", features) is (
        ExitStates.OKAY
    )
    assert (features / "features.json").exists()

    labels = tmp_path / "labels"
    assert run(
        settings,
        "label",
        *source,
        "--features",
        features / "features.csv",
        "--out",
        labels,
    ) is ExitStates.OKAY

    model = tmp_path / "model"
    assert run(
        settings,
        "train",
        "--features",
        features / "features.csv",
        "--labels",
        labels / "labels.csv",
        "--out",
        model,
    ) is ExitStates.OKAY
    assert LinearModel.load(model / "model.json").columns[0] == "F_c1"

    evaluation = tmp_path / "eval"
    assert run(
        settings,
        "eval",
        "--labels",
        labels / "labels.csv",
        "--features",
        features / "features.csv",
        "--latent",
        *source,
        "--end-bucket",
        "1",
        "--out",
        evaluation,
    ) is ExitStates.OKAY
    for name in ("predictions_features.csv", "predictions_latent.csv", "scorecards.csv"):
        assert (evaluation / name).exists()

    ablation = tmp_path / "ablate"
    assert run(
        settings,
        "ablate",
        "--features",
        features / "features.csv",
        "--labels",
        labels / "labels.csv",
        "--mode",
        "feature",
        "--out",
        ablation,
    ) is ExitStates.OKAY
    assert len((ablation / "ablation.csv").read_text(encoding="utf-8").splitlines()) == 35


##############################################################################
def test_range_rows_are_labeled_by_the_next_bucket(settings: Path, tmp_path: Path) -> None:
    files, ledger = generate(
        SynthConfig(seed=7, users=200, topics=30, background=20), tmp_path / "corpus"
    )
    source = ("--messages", files.messages, "--followers", files.followers)
    features = tmp_path / "features"
    assert run(
        settings, "features", *source, "--first-bucket", "0", "--bucket", "2", "--out", features
    ) is ExitStates.OKAY
    labels = tmp_path / "labels"
    assert run(
        settings,
        "label",
        *source,
        "--features",
        features / "features.csv",
        "--mode",
        "threshold",
        "--threshold",
        "2",
        "--out",
        labels,
    ) is ExitStates.OKAY
    with (labels / "labels.csv").open(encoding="utf-8", newline="") as source_file:
        rows = list(csv.DictReader(source_file))
    assert {int(row["bucket"]) for row in rows} == {0, 1, 2}
    assert len(rows) == len(FeatureMatrix.load(features / "features.csv").keys)
    for row in rows:
        count = ledger.counts[row["topic"]][int(row["bucket"]) + 1]
        assert int(row["label"]) == int(count >= 2)
    assert run(
        settings,
        "train",
        "--features",
        features / "features.csv",
        "--labels",
        labels / "labels.csv",
        "--out",
        tmp_path / "model",
    ) is ExitStates.OKAY


##############################################################################
def test_label_needs_exactly_one_source_of_rows(
    settings: Path, corpus: tuple[Path, Path], tmp_path: Path
) -> None:
    messages, _ = corpus
    with pytest.raises(SystemExit) as exit_state:
        run(settings, "label", "--messages", messages, "--out", tmp_path)
    assert exit_state.value.code == ExitStates.INPUT_ERROR.value


##############################################################################
def test_ingest_filters_languages(settings: Path, tmp_path: Path) -> None:
    (corpus := tmp_path / "messages.jsonl").write_text(
        "".join(
            dumps({"id": str(index), "user": "ann", "ts": 1438387200, "lang": language}) + "\n"
            for index, language in enumerate(("en", "fr", "en", "de"))
        ),
        encoding="utf-8",
    )
    assert run(
        settings, "ingest", "--messages", corpus, "--languages", "en", "--out", tmp_path / "flag"
    ) is ExitStates.OKAY
    report = loads((tmp_path / "flag" / "ingest_report.json").read_text(encoding="utf-8"))
    assert report["messages_ok"] == 2
    assert report["reject_reasons"] == {"language_filtered": 2}
    manifest = loads((tmp_path / "flag" / "manifest.json").read_text(encoding="utf-8"))
    assert manifest["configuration"]["language_allowlist"] == ["en"]

    configured = tmp_path / "configured.json"
    configured.write_text(
        dumps({**loads(settings.read_text(encoding="utf-8")), "language_allowlist": ["fr", "de"]}),
        encoding="utf-8",
    )
    assert run(configured, "ingest", "--messages", corpus, "--out", tmp_path / "file") is (
        ExitStates.OKAY
    )
    report = loads((tmp_path / "file" / "ingest_report.json").read_text(encoding="utf-8"))
    assert report["messages_ok"] == 2
    assert report["reject_reasons"] == {"language_filtered": 2}


##############################################################################
def test_features_are_repeatable(
    settings: Path, corpus: tuple[Path, Path], tmp_path: Path
) -> None:
    messages, followers = corpus
    for name in ("first", "second"):
        assert run(
            settings,
            "features",
            "--messages",
            messages,
            "--followers",
            followers,
            "--bucket",
            "1",
            "--out",
            tmp_path / name,
        ) is ExitStates.OKAY
    assert (tmp_path / "first" / "features.csv").read_bytes() == (
        tmp_path / "second" / "features.csv"
    ).read_bytes()


##############################################################################
def test_eval_with_a_mismatched_model(
    settings: Path, corpus: tuple[Path, Path], tmp_path: Path
) -> None:
    messages, _ = corpus
    features = tmp_path / "features"
    assert run(
        settings, "features", "--messages", messages, "--bucket", "1", "--out", features
    ) is ExitStates.OKAY
    topics = FeatureMatrix.load(features / "features.csv").topics
    labels = tmp_path / "labels.csv"
    save_labels({(topic, 1): index % 2 for index, topic in enumerate(topics)}, labels)
    LinearModel(
        ("F_c1", "F_c2"), Standardizer(np.zeros(2), np.ones(2)), np.zeros(2)
    ).save(model := tmp_path / "model.json")
    out = tmp_path / "eval"
    assert run(
        settings,
        "eval",
        "--labels",
        labels,
        "--features",
        features / "features.csv",
        "--model",
        model,
        "--out",
        out,
    ) is ExitStates.INPUT_ERROR
    assert not (out / "manifest.json").exists()


### test_cli.py ends here
