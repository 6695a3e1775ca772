"""The ablate command."""

##############################################################################
# Python imports.
from argparse import Namespace, _SubParsersAction
from pathlib import Path
from typing import Final

##############################################################################
# Local imports.
from ..ablation import ablation_report, category_summary, save_report
from ..features import FeatureMatrix
from ..predict import labels_for, load_labels
from .common import existing_file, recorded_run, run_configuration, show_table

##############################################################################
SHOWN: Final[int] = 20
"""The number of top-ranked units printed."""


##############################################################################
def add_parser(commands: _SubParsersAction) -> None:
    """Add the ablate command to the command line."""
    parser = commands.add_parser(
        "ablate", help="Measure what each feature contributes to the classifier"
    )
    parser.add_argument(
        "--features", type=existing_file, required=True, help="The feature matrix"
    )
    parser.add_argument("--labels", type=existing_file, required=True, help="The labels")
    parser.add_argument(
        "--mode",
        choices=("dimension", "feature"),
        help="Remove single dimensions, or whole named features",
    )
    parser.add_argument("--folds", type=int, help="The number of cross-validation folds")
    parser.add_argument("--seed", type=int, help="The seed of the run")
    parser.add_argument("--out", type=Path, required=True, help="The output directory")
    parser.set_defaults(handler=run)


##############################################################################
def run(args: Namespace) -> None:
    """Run the ablate command."""
    configuration = run_configuration(
        args, ablation_mode=args.mode, folds=args.folds, seed=args.seed
    )
    with recorded_run(
        "ablate", configuration, args.out, (args.features, args.labels)
    ) as outputs:
        matrix = FeatureMatrix.load(args.features)
        results = ablation_report(
            matrix, labels_for(matrix.keys, load_labels(args.labels)), configuration
        )
        save_report(results, target := args.out / "ablation.csv")
        outputs.append(target)
    show_table(
        "Relative contribution",
        ("Rank", "Removed", "Mean F1", "RC"),
        [
            (result.rank, result.description, result.accuracy, result.contribution)
            for result in results[:SHOWN]
        ],
    )
    if summary := category_summary(results, matrix.columns):
        show_table(
            "By category",
            ("Category", "Mean RC"),
            [(category.value, mean) for category, mean in summary],
        )


### ablate.py ends here
