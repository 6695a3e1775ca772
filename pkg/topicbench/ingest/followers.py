"""Code for parsing a follower edge list."""

##############################################################################
# Python imports.
import logging
from pathlib import Path
from typing import NamedTuple

##############################################################################
# Local imports.
from ..core import FollowerGraph
from ..errors import InputError

##############################################################################
log = logging.getLogger(__name__)


##############################################################################
class FollowerReport(NamedTuple):
    """The counts gathered while parsing a follower edge list."""

    edges: int
    """The number of distinct edges kept."""

    duplicates: int
    """The number of duplicate edges dropped."""

    self_loops: int
    """The number of self-follow edges dropped."""

    malformed: int
    """The number of malformed lines skipped."""


##############################################################################
def parse_followers(path: Path) -> tuple[FollowerGraph, FollowerReport]:
    """Parse a follower edge list.

    Args:
        path: The path to the file of `follower<TAB>followee` lines.

    Returns:
        The follower graph and the report of the parse.

    Raises:
        InputError: If the file can't be read.

    Note:
        Blank lines and lines starting with `#` are ignored.
    """
    edges: set[tuple[str, str]] = set()
    duplicates = self_loops = malformed = 0
    try:
        with path.open(encoding="utf-8") as source:
            for number, line in enumerate(source, start=1):
                if not (line := line.rstrip("\r\n")).strip() or line.startswith("#"):
                    continue
                fields = line.split("\t")
                if len(fields) != 2 or not all(field.strip() for field in fields):
                    malformed += 1
                    log.debug("%s:%d malformed follower line", path, number)
                    continue
                follower, followee = (field.strip() for field in fields)
                if follower == followee:
                    self_loops += 1
                elif (follower, followee) in edges:
                    duplicates += 1
                else:
                    edges.add((follower, followee))
    except (OSError, UnicodeDecodeError) as error:
        raise InputError(f"Unable to read {path}: {error}") from error
    log.info(
        "Read %d follow edges (%d duplicate, %d self, %d malformed dropped)",
        len(edges),
        duplicates,
        self_loops,
        malformed,
    )
    return FollowerGraph.from_edges(sorted(edges)), FollowerReport(
        len(edges), duplicates, self_loops, malformed
    )


### followers.py ends here
