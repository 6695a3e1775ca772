"""The ingest command."""

##############################################################################
# Python imports.
from argparse import Namespace, _SubParsersAction
from json import dumps
from pathlib import Path

##############################################################################
# Humanize imports.
from humanize import intcomma

##############################################################################
# Local imports.
from .common import (
    add_corpus_arguments,
    corpus_inputs,
    load_corpus,
    recorded_run,
    run_configuration,
    show_table,
)


##############################################################################
def add_parser(commands: _SubParsersAction) -> None:
    """Add the ingest command to the command line."""
    parser = commands.add_parser(
        "ingest", help="Load a corpus and report on what was accepted"
    )
    add_corpus_arguments(parser)
    parser.add_argument("--out", type=Path, required=True, help="The output directory")
    parser.set_defaults(handler=run)


##############################################################################
def run(args: Namespace) -> None:
    """Run the ingest command."""
    configuration = run_configuration(args)
    with recorded_run("ingest", configuration, args.out, corpus_inputs(args)) as outputs:
        dataset, report = load_corpus(args, configuration)
        (target := args.out / "ingest_report.json").write_text(
            dumps(
                {**report.as_json, "dataset_digest": dataset.digest},
                indent=4,
            ),
            encoding="utf-8",
        )
        outputs.append(target)
    show_table(
        "Ingest",
        ("Measure", "Value"),
        [
            ("Messages", intcomma(report.messages_ok)),
            ("Rejected", intcomma(report.messages_rejected)),
            *(
                (f"  {reason}", intcomma(count))
                for reason, count in sorted(report.reject_reasons.items())
            ),
            ("Users", intcomma(report.users)),
            ("Topics", intcomma(report.topics)),
            ("Tagged", f"{report.hashtag_fraction:.1%}"),
            (
                "Buckets",
                "-" if dataset.bucket_range is None else "{}..{}".format(*dataset.bucket_range),
            ),
        ],
    )


### ingest.py ends here
