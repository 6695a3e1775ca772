"""Tests for the hashtag features."""

##############################################################################
# Python imports.
from math import log
from pathlib import Path

##############################################################################
# Pytest imports.
import pytest

##############################################################################
# Local imports.
from conftest import FIXTURES
from topicbench.core import Dataset
from topicbench.errors import InputError
from topicbench.features import CorpusStats, Wordlist, hashtag_features, kl_divergence, segment
from topicbench.ingest import tokenize


##############################################################################
@pytest.fixture
def wordlist() -> Wordlist:
    return Wordlist.load(FIXTURES / "words.txt")


##############################################################################
def test_kl_divergence() -> None:
    assert kl_divergence([1, 0], [1, 1], smoothing=0) == pytest.approx(log(2))
    assert kl_divergence([3, 1], [3, 1]) == pytest.approx(0.0)
    assert kl_divergence([5, 0], [1, 1]) > 0


##############################################################################
def test_wordlist(wordlist: Wordlist, tmp_path: Path) -> None:
    assert "music" in wordlist
    assert "Music" not in wordlist
    assert wordlist.longest_prefix("livemusic", 0) == 4
    assert wordlist.longest_prefix("xyz", 0) == 0
    with pytest.raises(InputError):
        Wordlist.load(tmp_path / "missing.txt")


##############################################################################
@pytest.mark.parametrize(
    "hashtag, words",
    [
        ("livemusic", ["live", "music"]),
        ("#LiveMusic", ["live", "music"]),
        ("top10", ["top", "10"]),
        ("ILoveNY", ["i", "love", "ny"]),
        ("xyzzy", ["xyzzy"]),
    ],
)
def test_segment(wordlist: Wordlist, hashtag: str, words: list[str]) -> None:
    assert segment(hashtag, wordlist) == words


##############################################################################
def test_clarity() -> None:
    documents = [["live", "music"], ["news", "today"], ["music", "music"]]
    stats = CorpusStats(documents)
    assert len(stats) == 4
    assert stats.clarity([]) == 0.0
    everything = [token for document in documents for token in document]
    assert stats.clarity(everything) == pytest.approx(0.0)
    assert stats.clarity(["today"] * 5) > stats.clarity(["music"] * 5)
    assert stats.counts_of(["music", "unknown"]).tolist() == [0.0, 1.0, 0.0, 0.0]


##############################################################################
def test_static_hashtag_features(wordlist: Wordlist) -> None:
    features = hashtag_features("top10", [], [], CorpusStats([]), wordlist, {})
    assert features.length == 5
    assert features.has_number == 1
    assert features.words == 2
    assert features.multi_tag_fraction == features.clarity == features.extended_clarity == 0


##############################################################################
def test_hashtag_features_of_a_snapshot(small_dataset: Dataset, wordlist: Wordlist) -> None:
    tokens = {message.id: tokenize(message.text) for message in small_dataset}
    snapshot = small_dataset.topic_snapshot("music", 1)
    features = hashtag_features(
        "music",
        snapshot.records,
        small_dataset.extended_messages(snapshot),
        CorpusStats(tokens.values()),
        wordlist,
        tokens,
    )
    assert features.length == 5
    assert features.has_number == 0
    assert features.words == 1
    assert features.multi_tag_fraction == pytest.approx(1 / 3)
    assert features.clarity > 0
    assert features.extended_clarity == pytest.approx(features.clarity)


### test_hashtag.py ends here
