"""The train command."""

##############################################################################
# Python imports.
from argparse import ArgumentParser, Namespace, _SubParsersAction
from pathlib import Path

##############################################################################
# Local imports.
from ..features import FeatureMatrix
from ..predict import labels_for, load_labels, train_classifier
from .common import existing_file, recorded_run, run_configuration


##############################################################################
def add_training_arguments(parser: ArgumentParser) -> None:
    """Add the arguments that override the learner's settings."""
    parser.add_argument("--learning-rate", type=float, help="The gradient descent step size")
    parser.add_argument("--iterations", type=int, help="The number of gradient descent steps")
    parser.add_argument("--l2", type=float, help="The L2 regularisation strength")
    parser.add_argument("--seed", type=int, help="The seed of the run")


##############################################################################
def add_parser(commands: _SubParsersAction) -> None:
    """Add the train command to the command line."""
    parser = commands.add_parser(
        "train", help="Train the feature classifier on a labeled feature matrix"
    )
    parser.add_argument(
        "--features", type=existing_file, required=True, help="The feature matrix"
    )
    parser.add_argument("--labels", type=existing_file, required=True, help="The labels")
    add_training_arguments(parser)
    parser.add_argument("--out", type=Path, required=True, help="The output directory")
    parser.set_defaults(handler=run)


##############################################################################
def run(args: Namespace) -> None:
    """Run the train command."""
    configuration = run_configuration(
        args,
        learning_rate=args.learning_rate,
        iterations=args.iterations,
        l2=args.l2,
        seed=args.seed,
    )
    with recorded_run(
        "train", configuration, args.out, (args.features, args.labels)
    ) as outputs:
        matrix = FeatureMatrix.load(args.features)
        model = train_classifier(
            matrix, labels_for(matrix.keys, load_labels(args.labels)), configuration
        )
        model.save(target := args.out / "model.json")
        outputs.append(target)


### train.py ends here
