"""Fixtures shared by the tests."""

##############################################################################
# Python imports.
from json import dumps
from pathlib import Path
from typing import Any, Callable, Iterable, Iterator

##############################################################################
# Pytest imports.
import pytest

##############################################################################
# Local imports.
from topicbench.core import DAY, Dataset, FollowerGraph, Message
from topicbench.data import Configuration, load_configuration
from topicbench.ingest import build_dataset

##############################################################################
FIXTURES = Path(__file__).parent / "fixtures"
"""Where the fixture files live."""

ORIGIN = 1438387200.0
"""Midnight UTC on the day the test corpora start."""


##############################################################################
def at(bucket: int, offset: float = 3600.0) -> float:
    """The time of a moment inside a daily bucket."""
    return ORIGIN + bucket * DAY + offset


##############################################################################
def message(
    identity: str,
    author: str,
    bucket: int = 0,
    text: str = "",
    hashtags: Iterable[str] = (),
    mentions: Iterable[str] = (),
    **extra: Any,
) -> Message:
    """Make a message posted in a bucket."""
    return Message(
        id=identity,
        author=author,
        timestamp=at(bucket),
        text=text,
        hashtags=tuple(hashtags),
        mentions=tuple(mentions),
        **extra,
    )


##############################################################################
@pytest.fixture(autouse=True)
def isolated_storage(
    tmp_path_factory: pytest.TempPathFactory, monkeypatch: pytest.MonkeyPatch
) -> Iterator[None]:
    """Keep configuration and data out of the real home directory."""
    home = tmp_path_factory.mktemp("home")
    monkeypatch.setenv("XDG_CONFIG_HOME", str(home / "config"))
    monkeypatch.setenv("XDG_DATA_HOME", str(home / "data"))
    load_configuration.cache_clear()
    yield
    load_configuration.cache_clear()


##############################################################################
@pytest.fixture
def configuration() -> Configuration:
    """A small, single-worker configuration."""
    return Configuration(
        workers=1,
        folds=3,
        lda_topics=20,
        lda_iterations=5,
        lda_fold_in_iterations=3,
        lexicon=str(FIXTURES / "lexicon.tsv"),
        wordlist=str(FIXTURES / "words.txt"),
    )


##############################################################################
@pytest.fixture
def write_jsonl(tmp_path: Path) -> Callable[..., Path]:
    """Write records, or raw lines, to a JSONL file."""

    def write(records: Iterable[dict[str, Any] | str], name: str = "messages.jsonl") -> Path:
        (target := tmp_path / name).write_text(
            "".join(
                f"{record if isinstance(record, str) else dumps(record)}\n"
                for record in records
            ),
            encoding="utf-8",
        )
        return target

    return write


##############################################################################
@pytest.fixture
def small_dataset() -> Dataset:
    """A small network with two topics over three buckets.

    `music` is posted by a triangle of friends who mention each other;
    `news` is a lone post. `dan` follows everyone in the triangle.
    """
    return build_dataset(
        [
            message("1", "ann", 0, "I love live music :)", ["music"]),
            message("2", "bob", 1, "great gig tonight", ["music"], ["ann"]),
            message("3", "cat", 1, "sooo good!!!", ["music", "live"], ["bob"]),
            message("4", "ann", 1, "see you all there", ["music"], ["cat"]),
            message("5", "dan", 1, "nothing much today"),
            message("6", "eve", 2, "boring old news", ["news"], urls=1),
            message("7", "bob", 2, "last one #music", ["music"], retweet_of="2"),
        ],
        FollowerGraph.from_edges(
            [("dan", "ann"), ("dan", "bob"), ("dan", "cat"), ("ann", "bob"), ("eve", "dan")]
        ),
    )


### conftest.py ends here
