"""Generates synthetic social networks with planted popular topics."""

##############################################################################
# Python imports.
import logging
from dataclasses import asdict, dataclass, field
from json import dumps, loads
from pathlib import Path
from typing import Any, Final, NamedTuple

##############################################################################
# NumPy/NetworkX imports.
import networkx as nx
import numpy as np

##############################################################################
# Backward-compatible typing.
from typing_extensions import Self

##############################################################################
# Local imports.
from ..core import DAY, Message
from ..data import packaged_resource
from ..errors import InputError

##############################################################################
log = logging.getLogger(__name__)

##############################################################################
START: Final[int] = 1438387200
"""When generated corpora start: midnight UTC, 1 August 2015."""

THEMES: Final[int] = 10
"""The number of slices the wordlist is cut into for message text."""

SMILEY: Final[float] = 0.1
"""The chance a message ends with a smiley."""


##############################################################################
@dataclass(frozen=True)
class SynthConfig:
    """The parameters of a synthetic corpus."""

    seed: int
    """The seed for every random choice."""

    users: int = 2000
    """The number of users."""

    attachment: int = 4
    """The number of existing users each new user attaches to."""

    topics: int = 300
    """The number of topics."""

    popular_fraction: float = 0.3
    """The fraction of topics planted as popular."""

    popular_infectivity: float = 0.4
    """The chance a popular topic spreads along a follow edge."""

    infectivity: float = 0.05
    """The chance any other topic spreads along a follow edge."""

    seed_users: int = 3
    """The number of users who start each topic."""

    buckets: int = 4
    """The number of daily buckets the cascades run for."""

    background: int = 500
    """The number of untagged messages posted in each bucket."""

    retweet_probability: float = 0.5
    """The chance an adoption is posted as a retweet."""

    url_probability: float = 0.2
    """The chance a message carries a link."""

    def __post_init__(self) -> None:
        """Check the parameters.

        Raises:
            InputError: If a parameter is out of range.
        """
        problems = []
        if self.users < 2:
            problems.append("users must be at least 2")
        if not 1 <= self.attachment < self.users:
            problems.append("attachment must be at least 1 and less than users")
        if self.topics < 1:
            problems.append("topics must be at least 1")
        if not 1 <= self.seed_users <= self.users:
            problems.append("seed_users must be between 1 and users")
        if self.buckets < 1:
            problems.append("buckets must be at least 1")
        if self.background < 0:
            problems.append("background can't be negative")
        for name in (
            "popular_fraction",
            "popular_infectivity",
            "infectivity",
            "retweet_probability",
            "url_probability",
        ):
            if not 0 <= getattr(self, name) <= 1:
                problems.append(f"{name} must be within [0, 1]")
        if problems:
            raise InputError("; ".join(problems))

    @classmethod
    def from_json(cls, data: dict[str, Any]) -> Self:
        """Create a configuration from JSON data."""
        return cls(**data)

    @property
    def as_json(self) -> dict[str, Any]:
        """The configuration in JSON-friendly form."""
        return asdict(self)


##############################################################################
class Adoption(NamedTuple):
    """The provenance of one generated topic message."""

    message: str
    """The ID of the message."""

    user: str
    """Who adopted the topic."""

    bucket: int
    """When they adopted it."""

    topic: str
    """The topic adopted."""

    via: str | None
    """The user they adopted it from; `None` for a seed user."""


##############################################################################
@dataclass
class GenerationLedger:
    """The ground truth of a generated corpus."""

    config: SynthConfig
    """The parameters the corpus was generated with."""

    popular: dict[str, bool] = field(default_factory=dict)
    """Whether each topic was planted as popular."""

    counts: dict[str, list[int]] = field(default_factory=dict)
    """The number of adoptions of each topic in each bucket."""

    adoptions: list[Adoption] = field(default_factory=list)
    """The provenance of every topic message."""

    interactions: dict[tuple[str, str], int] = field(default_factory=dict)
    """The number of mentions, keyed by (mentioned, mentioner)."""

    @property
    def labels(self) -> dict[str, int]:
        """The planted label of each topic."""
        return {topic: int(popular) for topic, popular in self.popular.items()}

    @property
    def as_json(self) -> dict[str, Any]:
        """The ledger in JSON-friendly form."""
        return {
            "config": self.config.as_json,
            "popular": self.popular,
            "counts": self.counts,
            "adoptions": [adoption._asdict() for adoption in self.adoptions],
            "interactions": [
                [target, source, count]
                for (target, source), count in sorted(self.interactions.items())
            ],
        }

    @classmethod
    def from_json(cls, data: dict[str, Any]) -> Self:
        """Create a ledger from JSON data."""
        return cls(
            SynthConfig.from_json(data["config"]),
            dict(data["popular"]),
            {topic: list(counts) for topic, counts in data["counts"].items()},
            [Adoption(**adoption) for adoption in data["adoptions"]],
            {(target, source): count for target, source, count in data["interactions"]},
        )

    def save(self, path: Path) -> None:
        """Save the ledger as JSON."""
        path.write_text(dumps(self.as_json, indent=1, sort_keys=True), encoding="utf-8")

    @classmethod
    def load(cls, path: Path) -> Self:
        """Load a ledger saved with `save`.

        Raises:
            InputError: If the ledger can't be read.
        """
        try:
            return cls.from_json(loads(path.read_text(encoding="utf-8")))
        except (OSError, ValueError, KeyError, TypeError) as error:
            raise InputError(f"Unable to read a ledger from {path}: {error}") from error


##############################################################################
class Corpus(NamedTuple):
    """A generated corpus."""

    messages: list[Message]
    """The messages, in time order."""

    follows: list[tuple[str, str]]
    """Who follows whom, as sorted (follower, followee) pairs."""

    ledger: GenerationLedger
    """The ground truth of the corpus."""


##############################################################################
class _Writer:
    """Builds the messages of a corpus."""

    def __init__(self, config: SynthConfig, random: np.random.Generator) -> None:
        """Initialise the writer.

        Args:
            config: The shape of the corpus.
            random: The source of randomness.
        """
        self._config = config
        self._random = random
        words = [
            word
            for word in packaged_resource("words.txt").read_text(encoding="utf-8").split()
            if word.isalpha()
        ]
        self._themes = [theme for theme in np.array_split(np.array(words), THEMES) if len(theme)]
        self.messages: list[Message] = []

    def text(self, theme: int, hashtag: str | None) -> str:
        """Write the text of a message.

        Args:
            theme: The theme the words are drawn from.
            hashtag: The hashtag to end the text with, if any.

        Returns:
            The text.
        """
        words = self._themes[theme % len(self._themes)]
        text = " ".join(self._random.choice(words, size=int(self._random.integers(4, 9))))
        if self._random.random() < SMILEY:
            text = f"{text} :)"
        return text if hashtag is None else f"{text} #{hashtag}"

    def post(
        self,
        user: str,
        bucket: int,
        theme: int,
        hashtag: str | None = None,
        mention: str | None = None,
        retweet_of: str | None = None,
    ) -> Message:
        """Post a message and keep it.

        Args:
            user: The author.
            bucket: The bucket the message falls in.
            theme: The theme the words are drawn from.
            hashtag: The hashtag of the message, if any.
            mention: The user mentioned, if any.
            retweet_of: The author retweeted, if any.

        Returns:
            The new message.
        """
        message = Message(
            id=f"m{len(self.messages):07d}",
            author=user,
            timestamp=float(START + bucket * DAY + int(self._random.integers(DAY))),
            text=self.text(theme, hashtag),
            hashtags=() if hashtag is None else (hashtag,),
            mentions=() if mention is None else (mention,),
            retweet_of=retweet_of,
            urls=int(self._random.random() < self._config.url_probability),
        )
        self.messages.append(message)
        return message


##############################################################################
def simulate(config: SynthConfig) -> Corpus:
    """Generate a corpus in memory.

    Args:
        config: The parameters of the corpus.

    Returns:
        The corpus.

    Note:
        Follows come from preferential attachment, with every link a mutual
        follow. Each topic starts with its seed users in the first bucket;
        in each later bucket every follower of a user who adopted in the
        previous bucket adopts with the topic's infectivity. Each adoption
        is one message that mentions, or retweets, the user it came from.
    """
    random = np.random.default_rng(config.seed)
    graph = nx.barabasi_albert_graph(config.users, config.attachment, seed=config.seed)
    users = [f"u{node:05d}" for node in range(config.users)]
    followers = {
        users[node]: sorted(users[neighbour] for neighbour in graph.neighbors(node))
        for node in graph.nodes
    }
    follows = sorted(
        (follower, followee) for followee, fans in followers.items() for follower in fans
    )
    topics = [f"topic{index:03d}" for index in range(config.topics)]
    planted_count = round(config.popular_fraction * config.topics)
    planted = set(random.permutation(config.topics)[:planted_count].tolist())
    ledger = GenerationLedger(config)
    writer = _Writer(config, random)

    for index, topic in enumerate(topics):
        popular = index in planted
        infectivity = config.popular_infectivity if popular else config.infectivity
        ledger.popular[topic] = popular
        ledger.counts[topic] = [0] * config.buckets
        adopted: dict[str, Message] = {}
        frontier: list[tuple[str, str | None]] = [
            (users[node], None)
            for node in sorted(random.choice(config.users, config.seed_users, replace=False))
        ]
        for bucket in range(config.buckets):
            newly: list[str] = []
            for user, via in frontier:
                retweet = via is not None and random.random() < config.retweet_probability
                message = writer.post(
                    user,
                    bucket,
                    index,
                    topic,
                    mention=via,
                    retweet_of=adopted[via].id if retweet and via is not None else None,
                )
                adopted[user] = message
                newly.append(user)
                ledger.counts[topic][bucket] += 1
                ledger.adoptions.append(Adoption(message.id, user, bucket, topic, via))
                if via is not None:
                    ledger.interactions[(via, user)] = ledger.interactions.get((via, user), 0) + 1
            frontier = []
            claimed: set[str] = set()
            for user in newly:
                for follower in followers[user]:
                    if follower in adopted or follower in claimed:
                        continue
                    if random.random() < infectivity:
                        claimed.add(follower)
                        frontier.append((follower, user))

    for bucket in range(config.buckets):
        for node in random.choice(config.users, config.background):
            writer.post(users[node], bucket, int(random.integers(THEMES)))

    messages = sorted(writer.messages, key=lambda message: (message.timestamp, message.id))
    log.info(
        "Generated %d messages over %d topics (%d popular)",
        len(messages),
        config.topics,
        len(planted),
    )
    return Corpus(messages, follows, ledger)


##############################################################################
class GeneratedFiles(NamedTuple):
    """The files a generated corpus was written to."""

    messages: Path
    followers: Path
    ledger: Path


##############################################################################
def write_corpus(corpus: Corpus, directory: Path) -> GeneratedFiles:
    """Write a corpus in the formats the ingest code reads.

    Args:
        corpus: The corpus.
        directory: The directory to write into.

    Returns:
        The files written.
    """
    directory.mkdir(parents=True, exist_ok=True)
    files = GeneratedFiles(
        directory / "messages.jsonl", directory / "followers.tsv", directory / "ledger.json"
    )
    with files.messages.open("w", encoding="utf-8", newline="\n") as target:
        for message in corpus.messages:
            target.write(dumps(message.as_json, sort_keys=True) + "\n")
    with files.followers.open("w", encoding="utf-8", newline="\n") as target:
        target.write("# follower\tfollowee\n")
        for follower, followee in corpus.follows:
            target.write(f"{follower}\t{followee}\n")
    corpus.ledger.save(files.ledger)
    return files


##############################################################################
def generate(config: SynthConfig, directory: Path) -> tuple[GeneratedFiles, GenerationLedger]:
    """Generate a corpus and write it out.

    Args:
        config: The parameters of the corpus.
        directory: The directory to write into.

    Returns:
        The files written and the ledger of the corpus.
    """
    corpus = simulate(config)
    return write_corpus(corpus, directory), corpus.ledger


### generator.py ends here
