"""The rank command."""

##############################################################################
# Python imports.
from argparse import Namespace, _SubParsersAction
from pathlib import Path

##############################################################################
# Local imports.
from ..metrics import load_scorecards
from ..ranking import SCENARIOS, rank, save_ranking, scenario
from .common import existing_file, recorded_run, run_configuration, show_table


##############################################################################
def add_parser(commands: _SubParsersAction) -> None:
    """Add the rank command to the command line."""
    parser = commands.add_parser(
        "rank", help="Rank scored methods by their distance from the ideal"
    )
    parser.add_argument(
        "--scorecards", type=existing_file, required=True, help="The scorecards to rank"
    )
    parser.add_argument(
        "--scenario",
        action="append",
        help=(
            "A built-in scenario name or a scenario file; may be given more "
            f"than once; defaults to all of {', '.join(SCENARIOS)}"
        ),
    )
    parser.add_argument("--out", type=Path, required=True, help="The output directory")
    parser.set_defaults(handler=run)


##############################################################################
def run(args: Namespace) -> None:
    """Run the rank command."""
    configuration = run_configuration(args)
    scenarios = [scenario(name) for name in (args.scenario or SCENARIOS)]
    inputs = [
        args.scorecards,
        *(Path(name) for name in args.scenario or () if Path(name).is_file()),
    ]
    with recorded_run("rank", configuration, args.out, inputs) as outputs:
        scorecards = load_scorecards(args.scorecards)
        rankings = {
            chosen.name: rank(scorecards, chosen.weights) for chosen in scenarios
        }
        save_ranking(rankings, target := args.out / "ranking.csv")
        outputs.append(target)
    for name, ranking in rankings.items():
        show_table(
            f"Scenario {name}",
            ("Rank", "Method", "MinDis"),
            [(ranked.rank, ranked.method, ranked.min_dis) for ranked in ranking],
        )


### rank.py ends here
