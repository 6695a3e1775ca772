"""The features command."""

##############################################################################
# Python imports.
import logging
from argparse import Namespace, _SubParsersAction
from pathlib import Path

##############################################################################
# Humanize imports.
from humanize import intcomma

##############################################################################
# Local imports.
from ..core import Dataset
from ..data import Configuration
from ..errors import InputError
from ..features import Category, feature_matrix_range
from ..ingest import extract_topics
from ..predict import denoise_ts
from .common import (
    add_corpus_arguments,
    corpus_inputs,
    existing_file,
    load_corpus,
    recorded_run,
    run_configuration,
)

##############################################################################
log = logging.getLogger(__name__)


##############################################################################
def add_parser(commands: _SubParsersAction) -> None:
    """Add the features command to the command line."""
    parser = commands.add_parser(
        "features", help="Extract the feature matrix of a corpus's topics"
    )
    add_corpus_arguments(parser)
    parser.add_argument(
        "--bucket", type=int, required=True, help="The (last) bucket to extract"
    )
    parser.add_argument(
        "--first-bucket",
        type=int,
        help="The first bucket to extract; rows are made for every bucket up to --bucket",
    )
    parser.add_argument(
        "--topics",
        type=existing_file,
        help="A file of topics, one per line; defaults to every hashtag used often enough",
    )
    parser.add_argument(
        "--denoise",
        action="store_true",
        help="Drop topics without enough recent activity at --bucket",
    )
    parser.add_argument(
        "--disable",
        action="append",
        choices=[category.value for category in Category],
        help="Zero-fill a feature category; may be given more than once",
    )
    parser.add_argument("--out", type=Path, required=True, help="The output directory")
    parser.set_defaults(handler=run)


##############################################################################
def candidate_topics(
    args: Namespace, dataset: Dataset, configuration: Configuration
) -> list[str]:
    """Work out the topics to extract features for.

    Args:
        args: The parsed command line.
        dataset: The dataset.
        configuration: The configuration of the run.

    Returns:
        The topics.
    """
    if args.topics:
        topics = list(
            dict.fromkeys(
                line.strip().lstrip("#").casefold()
                for line in args.topics.read_text(encoding="utf-8").splitlines()
                if line.strip()
            )
        )
    else:
        topics = extract_topics(dataset, configuration.min_topic_count)
    if args.denoise:
        before = len(topics)
        topics = denoise_ts(
            topics,
            dataset.series_map(
                topics, args.bucket - configuration.denoise_window + 1, args.bucket
            ),
            args.bucket,
            configuration.denoise_window,
            configuration.denoise_min_active,
            configuration.denoise_min_count,
        )
        log.info("Denoising kept %s of %s topics", intcomma(len(topics)), intcomma(before))
    return topics


##############################################################################
def run(args: Namespace) -> None:
    """Run the features command."""
    configuration = run_configuration(
        args, disabled_categories=sorted(set(args.disable)) if args.disable else None
    )
    first = args.bucket if args.first_bucket is None else args.first_bucket
    if first > args.bucket:
        raise InputError(f"The first bucket ({first}) is after the last ({args.bucket})")
    inputs = corpus_inputs(args) + ([args.topics] if args.topics else [])
    with recorded_run("features", configuration, args.out, inputs) as outputs:
        dataset, _ = load_corpus(args, configuration)
        if not (topics := candidate_topics(args, dataset, configuration)):
            raise InputError("There are no topics to extract features for")
        matrix = feature_matrix_range(
            dataset, topics, range(first, args.bucket + 1), configuration
        )
        sidecar = matrix.save(target := args.out / "features.csv", configuration)
        outputs.extend((target, sidecar))
    log.info(
        "Wrote %s rows of %d features to %s",
        intcomma(len(matrix)),
        len(matrix.columns),
        target,
    )


### features.py ends here
