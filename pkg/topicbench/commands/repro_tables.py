"""The repro-tables command."""

##############################################################################
# Python imports.
import csv
import logging
from argparse import Namespace, _SubParsersAction
from pathlib import Path
from typing import Sequence

##############################################################################
# Local imports.
from ..errors import InvariantViolation
from ..ranking import TOLERANCE, Comparison, compare_ranking, compare_weights
from .common import recorded_run, run_configuration, show_table

##############################################################################
log = logging.getLogger(__name__)


##############################################################################
def add_parser(commands: _SubParsersAction) -> None:
    """Add the repro-tables command to the command line."""
    parser = commands.add_parser(
        "repro-tables",
        help="Re-derive the published weight and ranking tables and check them",
    )
    parser.add_argument("--out", type=Path, required=True, help="The output directory")
    parser.set_defaults(handler=run)


##############################################################################
def _save(comparisons: Sequence[Comparison], path: Path) -> None:
    """Save comparisons as CSV."""
    with path.open("w", encoding="utf-8", newline="") as target:
        writer = csv.writer(target)
        writer.writerow(("scenario", "item", "derived", "published", "deviation", "golden"))
        writer.writerows(
            (
                comparison.scenario,
                comparison.item,
                f"{comparison.derived:.6f}",
                f"{comparison.published:.4f}",
                f"{comparison.deviation:.6f}",
                int(comparison.golden),
            )
            for comparison in comparisons
        )


##############################################################################
def _show(title: str, comparisons: Sequence[Comparison]) -> None:
    """Print comparisons as a table."""
    show_table(
        title,
        ("Scenario", "Item", "Derived", "Published", "Deviation", "Check"),
        [
            (
                comparison.scenario,
                comparison.item,
                comparison.derived,
                comparison.published,
                comparison.deviation,
                ("FAIL" if comparison.failed else "ok") if comparison.golden else "-",
            )
            for comparison in comparisons
        ],
    )


##############################################################################
def run(args: Namespace) -> None:
    """Run the repro-tables command.

    Raises:
        InvariantViolation: If a golden value strays from the published one.
    """
    configuration = run_configuration(args)
    weights = compare_weights()
    ranking = compare_ranking()
    with recorded_run("repro-tables", configuration, args.out) as outputs:
        _save(weights, target := args.out / "weights.csv")
        outputs.append(target)
        _save(ranking, target := args.out / "ranking.csv")
        outputs.append(target)
    _show("Weights under each scenario", weights)
    _show("Ranking under each scenario", ranking)
    if failed := [comparison for comparison in (*weights, *ranking) if comparison.failed]:
        for comparison in failed:
            log.error(
                "%s %s: derived %.6f, published %.4f",
                comparison.scenario,
                comparison.item,
                comparison.derived,
                comparison.published,
            )
        raise InvariantViolation(
            f"{len(failed)} re-derived values are more than {TOLERANCE} from the published ones"
        )


### repro_tables.py ends here
