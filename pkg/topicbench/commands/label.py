"""The label command."""

##############################################################################
# Python imports.
from argparse import Namespace, _SubParsersAction
from pathlib import Path

##############################################################################
# Humanize imports.
from humanize import intcomma

##############################################################################
# Local imports.
from ..errors import InputError
from ..features import FeatureMatrix
from ..ingest import extract_topics
from ..predict import LabelingPolicy, label_rows, save_labels
from .common import (
    add_corpus_arguments,
    corpus_inputs,
    existing_file,
    load_corpus,
    recorded_run,
    run_configuration,
    show_table,
)


##############################################################################
def add_parser(commands: _SubParsersAction) -> None:
    """Add the label command to the command line."""
    parser = commands.add_parser(
        "label", help="Label topics popular or not by their popularity in the next bucket"
    )
    add_corpus_arguments(parser)
    rows = parser.add_mutually_exclusive_group(required=True)
    rows.add_argument(
        "--horizon",
        type=int,
        help="Label every hashtag used often enough by its popularity in this bucket",
    )
    rows.add_argument(
        "--features",
        type=existing_file,
        help="Label each row of this feature matrix by its popularity in the bucket after it",
    )
    parser.add_argument(
        "--mode", choices=("quantile", "threshold"), help="How popular is decided"
    )
    parser.add_argument("--quantile", type=float, help="The quantile used in quantile mode")
    parser.add_argument("--threshold", type=int, help="The count used in threshold mode")
    parser.add_argument("--out", type=Path, required=True, help="The output directory")
    parser.set_defaults(handler=run)


##############################################################################
def run(args: Namespace) -> None:
    """Run the label command."""
    configuration = run_configuration(
        args,
        labeling_mode=args.mode,
        labeling_quantile=args.quantile,
        labeling_threshold=args.threshold,
    )
    inputs = corpus_inputs(args) + ([args.features] if args.features else [])
    with recorded_run("label", configuration, args.out, inputs) as outputs:
        dataset, _ = load_corpus(args, configuration)
        keys = (
            FeatureMatrix.load(args.features).keys
            if args.features
            else [
                (topic, args.horizon - 1)
                for topic in extract_topics(dataset, configuration.min_topic_count)
            ]
        )
        if not keys:
            raise InputError("There are no topics to label")
        buckets = [bucket for _, bucket in keys]
        labeling = label_rows(
            dataset.series_map(
                sorted({topic for topic, _ in keys}), min(buckets) + 1, max(buckets) + 1
            ),
            keys,
            LabelingPolicy.from_configuration(configuration),
        )
        save_labels(labeling.labels, target := args.out / "labels.csv")
        outputs.append(target)
    popular = sum(labeling.labels.values())
    show_table(
        "Labels",
        ("Measure", "Value"),
        [
            ("Rows", intcomma(len(labeling.labels))),
            ("Popular", intcomma(popular)),
            ("Not popular", intcomma(len(labeling.labels) - popular)),
            ("Unlabeled", intcomma(len(labeling.excluded))),
            *(
                (f"Cutoff at bucket {horizon}", float(cutoff))
                for horizon, cutoff in sorted(labeling.cutoffs.items())
            ),
        ],
    )


### label.py ends here
