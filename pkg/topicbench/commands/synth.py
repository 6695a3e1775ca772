"""The synth command."""

##############################################################################
# Python imports.
from argparse import Namespace, _SubParsersAction
from pathlib import Path

##############################################################################
# Humanize imports.
from humanize import intcomma

##############################################################################
# Local imports.
from ..synth import SynthConfig, generate
from .common import recorded_run, run_configuration, show_table

##############################################################################
_PARAMETERS = (
    ("--users", int, "The number of users"),
    ("--attachment", int, "The number of users each new user follows"),
    ("--topics", int, "The number of topics"),
    ("--popular-fraction", float, "The fraction of topics planted as popular"),
    ("--popular-infectivity", float, "The spread chance of a popular topic"),
    ("--infectivity", float, "The spread chance of any other topic"),
    ("--seed-users", int, "The number of users who start each topic"),
    ("--buckets", int, "The number of daily buckets"),
    ("--background", int, "The number of untagged messages per bucket"),
)


##############################################################################
def add_parser(commands: _SubParsersAction) -> None:
    """Add the synth command to the command line."""
    parser = commands.add_parser(
        "synth", help="Generate a synthetic corpus with planted popular topics"
    )
    parser.add_argument("--seed", type=int, required=True, help="The seed of the corpus")
    for flag, kind, help_text in _PARAMETERS:
        parser.add_argument(flag, type=kind, help=help_text)
    parser.add_argument("--out", type=Path, required=True, help="The output directory")
    parser.set_defaults(handler=run)


##############################################################################
def run(args: Namespace) -> None:
    """Run the synth command."""
    given = {
        name: getattr(args, name)
        for name in (flag[2:].replace("-", "_") for flag, _, _ in _PARAMETERS)
    }
    config = SynthConfig(
        seed=args.seed,
        **{name: value for name, value in given.items() if value is not None},
    )
    configuration = run_configuration(args, seed=args.seed)
    with recorded_run("synth", configuration, args.out) as outputs:
        files, ledger = generate(config, args.out)
        outputs.extend(files)
    show_table(
        f"Synthetic corpus (seed {config.seed})",
        ("Measure", "Value"),
        [
            ("Users", intcomma(config.users)),
            ("Topics", intcomma(config.topics)),
            ("Popular", intcomma(sum(ledger.popular.values()))),
            ("Topic messages", intcomma(len(ledger.adoptions))),
            ("Messages", str(files.messages)),
            ("Followers", str(files.followers)),
            ("Ledger", str(files.ledger)),
        ],
    )


### synth.py ends here
