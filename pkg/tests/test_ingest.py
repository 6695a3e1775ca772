"""Tests for loading corpora."""

##############################################################################
# Python imports.
from io import StringIO
from pathlib import Path
from typing import Callable

##############################################################################
# Pytest imports.
import pytest

##############################################################################
# Local imports.
from conftest import ORIGIN, message
from topicbench.errors import InputError
from topicbench.ingest import (
    build_dataset,
    build_interaction_graph,
    extract_topics,
    load_dataset,
    parse_followers,
    parse_messages,
    strip_urls,
    tokenize,
)

##############################################################################
GOOD = {"id": "1", "user": "ann", "ts": ORIGIN, "text": "hello #there", "hashtags": ["there"]}


##############################################################################
def test_parse_messages_counts_every_reject(write_jsonl: Callable[..., Path]) -> None:
    corpus = write_jsonl(
        [
            GOOD,
            "",
            "{not json",
            "[1, 2]",
            {"user": "ann", "ts": ORIGIN},
            {"id": "2", "ts": ORIGIN},
            {"id": "3", "user": "ann"},
            {"id": "4", "user": "ann", "ts": "whenever"},
            {"id": "5", "user": "ann", "ts": -5},
            {"id": "6", "user": "ann", "ts": ORIGIN, "hashtags": "music"},
            {**GOOD, "text": "again"},
        ]
    )
    messages, report = parse_messages(corpus)
    assert [item.id for item in messages] == ["1"]
    assert report.messages_ok == 1
    assert report.messages_rejected == 10
    assert report.lines == 11
    assert report.reject_reasons == {
        "empty_line": 1,
        "invalid_json": 1,
        "not_an_object": 1,
        "missing_id": 1,
        "missing_user": 1,
        "missing_timestamp": 1,
        "bad_timestamp": 2,
        "bad_field": 1,
        "duplicate_id": 1,
    }


##############################################################################
def test_parse_messages_filters_languages() -> None:
    stream = StringIO(
        '{"id": "1", "user": "ann", "ts": 0, "lang": "en"}\n'
        '{"id": "2", "user": "bob", "ts": 0, "lang": "fr"}\n'
        '{"id": "3", "user": "cat", "ts": 0}\n'
    )
    messages, report = parse_messages(stream, language_allowlist={"en"})
    assert [item.id for item in messages] == ["1"]
    assert report.reject_reasons["language_filtered"] == 2


##############################################################################
def test_shards_merge_in_order(write_jsonl: Callable[..., Path]) -> None:
    first = write_jsonl([GOOD, {**GOOD, "id": "2"}], "first.jsonl")
    second = write_jsonl([{**GOOD, "id": "2", "user": "bob"}, {**GOOD, "id": "3"}], "second.jsonl")
    messages, report = parse_messages([first, second])
    assert [item.id for item in messages] == ["1", "2", "3"]
    assert messages[1].author == "ann"
    assert report.reject_reasons == {"duplicate_id": 1}
    assert report.users == 1
    assert report.topics == 1
    assert report.hashtag_fraction == 1.0


##############################################################################
def test_parse_messages_reports_unreadable_files(tmp_path: Path) -> None:
    with pytest.raises(InputError):
        parse_messages(tmp_path / "missing.jsonl")


##############################################################################
def test_parse_followers(tmp_path: Path) -> None:
    (edges := tmp_path / "followers.tsv").write_text(
        "# follower\tfollowee\n"
        "ann\tbob\n"
        "ann\tbob\n"
        "bob\tbob\n"
        "cat\n"
        "\n"
        "cat\tann\n",
        encoding="utf-8",
    )
    graph, report = parse_followers(edges)
    assert report.edges == 2
    assert report.duplicates == 1
    assert report.self_loops == 1
    assert report.malformed == 1
    assert graph.followers_of("bob") == {"ann"}
    assert graph.follows("cat") == {"ann"}


##############################################################################
def test_tokenize() -> None:
    assert tokenize("Love the #Gig with @bob at http://t.co/x, don't miss it 2015!") == [
        "love",
        "the",
        "with",
        "at",
        "don't",
        "miss",
        "it",
        "2015",
    ]


##############################################################################
def test_strip_urls() -> None:
    assert "example" not in strip_urls("see www.example.com and https://example.org/a?b")


##############################################################################
def test_build_interaction_graph() -> None:
    graph = build_interaction_graph(
        [
            message("1", "ann", mentions=["bob"]),
            message("2", "ann", mentions=["bob", "cat"]),
            message("3", "dan"),
        ]
    )
    assert graph.nodes == {"ann", "bob", "cat", "dan"}
    assert graph.edges == {("bob", "ann"): 2, ("cat", "ann"): 1}


##############################################################################
def test_extract_topics() -> None:
    messages = [
        message("1", "ann", hashtags=["b"]),
        message("2", "ann", hashtags=["a", "b"]),
        message("3", "ann", hashtags=["a"]),
        message("4", "ann", hashtags=["c"]),
    ]
    assert extract_topics(messages) == ["a", "b", "c"]
    assert extract_topics(messages, 2) == ["a", "b"]
    with pytest.raises(InputError):
        extract_topics(messages, 0)


##############################################################################
def test_build_dataset_with_explicit_origin() -> None:
    dataset = build_dataset([message("1", "ann", 1)], origin=ORIGIN - 86400)
    assert dataset.bucket_range == (2, 2)
    assert len(dataset.follower_graph) == 0


##############################################################################
def test_load_dataset(write_jsonl: Callable[..., Path], tmp_path: Path) -> None:
    corpus = write_jsonl(
        [GOOD, {"id": "2", "user": "bob", "ts": ORIGIN + 90000, "mentions": ["ann"]}]
    )
    (followers := tmp_path / "followers.tsv").write_text("bob\tann\n", encoding="utf-8")
    dataset, report = load_dataset([corpus], followers)
    assert len(dataset) == report.messages_ok == 2
    assert dataset.bucket_range == (0, 1)
    assert dataset.interaction_graph.edges == {("ann", "bob"): 1}
    assert dataset.follower_graph.followers_of("ann") == {"bob"}
    again, _ = load_dataset([corpus], followers)
    assert again.digest == dataset.digest


### test_ingest.py ends here
