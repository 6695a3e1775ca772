"""The eval command."""

##############################################################################
# Python imports.
from argparse import Namespace, _SubParsersAction
from pathlib import Path
from typing import Sequence

##############################################################################
# Local imports.
from ..data import Configuration
from ..errors import InputError
from ..features import FeatureMatrix
from ..metrics import Level, MethodScorecard, save_scorecards
from ..predict import (
    LinearModel,
    Prediction,
    cross_validate,
    labels_for,
    latent_matrix,
    load_labels,
    predict,
    save_predictions,
)
from .common import (
    add_corpus_arguments,
    corpus_inputs,
    existing_file,
    load_corpus,
    recorded_run,
    run_configuration,
    show_table,
)
from .train import add_training_arguments


##############################################################################
def add_parser(commands: _SubParsersAction) -> None:
    """Add the eval command to the command line."""
    parser = commands.add_parser(
        "eval", help="Score the feature classifier and the latent baseline"
    )
    parser.add_argument("--labels", type=existing_file, required=True, help="The labels")
    parser.add_argument("--features", type=existing_file, help="The feature matrix")
    parser.add_argument(
        "--model",
        type=existing_file,
        help="Score the feature matrix with this trained model rather than cross-validating",
    )
    parser.add_argument(
        "--name", default="Feature classifier", help="The name of the feature method"
    )
    parser.add_argument(
        "--latent",
        action="store_true",
        help="Also cross-validate the latent baseline; needs the corpus",
    )
    add_corpus_arguments(parser, required=False)
    parser.add_argument(
        "--end-bucket", type=int, help="The last bucket of the latent baseline's window"
    )
    parser.add_argument(
        "--window", type=int, help="The length of the latent baseline's window"
    )
    parser.add_argument("--folds", type=int, help="The number of cross-validation folds")
    parser.add_argument(
        "--rmse-mode", choices=("labels", "scores"), help="What RMSE is computed over"
    )
    add_training_arguments(parser)
    parser.add_argument("--out", type=Path, required=True, help="The output directory")
    parser.set_defaults(handler=run)


##############################################################################
def _scorecard(
    name: str,
    truth: Sequence[int],
    prediction: Prediction,
    configuration: Configuration,
    complexity: Level,
) -> MethodScorecard:
    """Make the scorecard of a method from its predictions."""
    return MethodScorecard.from_predictions(
        name,
        truth,
        prediction.labels,
        prediction.scores if configuration.rmse_mode == "scores" else None,
        complexity,
        Level.HIGH,
    )


##############################################################################
def run(args: Namespace) -> None:
    """Run the eval command."""
    if not (args.features or args.latent):
        raise InputError("Nothing to evaluate; give --features and/or --latent")
    if args.model and not args.features:
        raise InputError("--model needs --features to score")
    if args.latent and (not args.messages or args.end_bucket is None):
        raise InputError("--latent needs --messages and --end-bucket")
    configuration = run_configuration(
        args,
        folds=args.folds,
        rmse_mode=args.rmse_mode,
        learning_rate=args.learning_rate,
        iterations=args.iterations,
        l2=args.l2,
        seed=args.seed,
    )
    inputs = [
        args.labels,
        *([args.features] if args.features else []),
        *([args.model] if args.model else []),
        *(corpus_inputs(args) if args.latent else []),
    ]
    scorecards: list[MethodScorecard] = []
    with recorded_run("eval", configuration, args.out, inputs) as outputs:
        labels = load_labels(args.labels)
        if args.features:
            matrix = FeatureMatrix.load(args.features)
            truth = labels_for(matrix.keys, labels)
            if args.model:
                prediction = predict(LinearModel.load(args.model), matrix)
            else:
                validation = cross_validate(matrix, truth, configuration)
                prediction = Prediction(validation.scores, validation.predicted)
            save_predictions(
                target := args.out / "predictions_features.csv",
                matrix.keys,
                prediction,
                truth,
            )
            outputs.append(target)
            scorecards.append(
                _scorecard(args.name, truth, prediction, configuration, Level.MEDIUM)
            )
        if args.latent:
            dataset, _ = load_corpus(args, configuration)
            topics = sorted(topic for topic, bucket in labels if bucket == args.end_bucket)
            if not topics:
                raise InputError(f"No labels are for rows at bucket {args.end_bucket}")
            length = args.window or configuration.series_window
            latent = latent_matrix(
                dataset.series_map(topics, args.end_bucket - length + 1, args.end_bucket),
                topics,
                args.end_bucket,
                length,
            )
            truth = labels_for(latent.keys, labels)
            validation = cross_validate(latent, truth, configuration)
            prediction = Prediction(validation.scores, validation.predicted)
            save_predictions(
                target := args.out / "predictions_latent.csv",
                latent.keys,
                prediction,
                truth,
            )
            outputs.append(target)
            scorecards.append(
                _scorecard("Latent baseline", truth, prediction, configuration, Level.LOW)
            )
        save_scorecards(scorecards, target := args.out / "scorecards.csv")
        outputs.append(target)
    show_table(
        "Scorecards",
        ("Method", "Precision", "Recall", "Macro-F1", "Micro-F1", "RMSE"),
        [
            (
                scorecard.method,
                scorecard.precision,
                scorecard.recall,
                scorecard.macro_f1,
                scorecard.micro_f1,
                scorecard.rmse,
            )
            for scorecard in scorecards
        ],
    )


### evaluate.py ends here
